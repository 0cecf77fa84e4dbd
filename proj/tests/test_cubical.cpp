#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "cubiq/cube.hpp"
#include "cubiq/cubical.hpp"
#include "cubiq/singular.hpp"

using namespace cubiq;

namespace {

// A degeneracy word acting on an m-cube, read as the coordinate-deletion map
// {0,1}^(m+l) -> {0,1}^m. Tabulated on every binary tuple.
std::vector<std::vector<int>> deletion_table(const std::vector<int>& word, int m) {
  const int n = m + static_cast<int>(word.size());
  std::vector<std::vector<int>> table;
  for (int bits = 0; bits < (1 << n); ++bits) {
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) x[static_cast<std::size_t>(c)] = (bits >> c) & 1;
    // Outermost letter acts first on the big cube.
    for (int j : word) x.erase(x.begin() + (j - 1));
    table.push_back(x);
  }
  return table;
}

bool fits(const std::vector<int>& word, int m) {
  const int l = static_cast<int>(word.size());
  for (int t = 0; t < l; ++t)
    if (word[static_cast<std::size_t>(t)] < 1 || word[static_cast<std::size_t>(t)] > m + (l - t))
      return false;
  return true;
}

// Rewrites eps_a eps_b (a <= b) at a random position until none is left.
std::vector<int> random_rewrite(std::vector<int> w, std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t] <= w[t + 1]) spots.push_back(t);
    if (spots.empty()) return w;
    const std::size_t t = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    const int a = w[t], b = w[t + 1];
    w[t] = b + 1;
    w[t + 1] = a;
  }
}

void all_words(int len, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    if (fits(cur, m)) out.push_back(cur);
    return;
  }
  for (int j = 1; j <= m + len; ++j) {
    cur.push_back(j);
    all_words(len, m, cur, out);
    cur.pop_back();
  }
}

GeneratorSpec square(const std::string& id, FaceSpec l0, FaceSpec l1, FaceSpec r0, FaceSpec r1) {
  return {id, 2, {std::move(l0), std::move(l1), std::move(r0), std::move(r1)}};
}

}  // namespace

TEST_CASE("degeneracy words reach a unique decreasing form") {
  CHECK(canonical_degeneracies({}) == std::vector<int>{});
  CHECK(canonical_degeneracies({1, 1}) == std::vector<int>{2, 1});
  CHECK(canonical_degeneracies({1, 2}) == std::vector<int>{3, 1});
  CHECK(canonical_degeneracies({3, 1}) == std::vector<int>{3, 1});

  std::mt19937 rng(1);
  for (int m = 0; m <= 4; ++m)
    for (int len = 1; len <= 4; ++len) {
      std::vector<std::vector<int>> words;
      std::vector<int> cur;
      all_words(len, m, cur, words);
      for (const auto& w : words) {
        const auto canon = canonical_degeneracies(w);
        CHECK(std::is_sorted(canon.rbegin(), canon.rend()));
        CHECK(std::adjacent_find(canon.begin(), canon.end()) == canon.end());
        for (int r = 0; r < 3; ++r) CHECK(random_rewrite(w, rng) == canon);
        if (m + len <= 5) CHECK(deletion_table(canon, m) == deletion_table(w, m));
      }
    }
}

TEST_CASE("triangle presentation") {
  const auto k = corpus::triangle();
  CHECK(k->size() == 6);
  CHECK(k->max_dim() == 1);
  CHECK(k->of_dim(0).size() == 3);
  CHECK(k->of_dim(1).size() == 3);
  CHECK(k->of_dim(2).empty());
  CHECK_FALSE(k->truncated_at().has_value());
  CHECK(validate_cubical(*k).ok());
  const std::size_t i = *k->find("i");
  CHECK(k->face(i, 1, 0) == FormalCube{*k->find("0"), {}});
  CHECK(k->face(i, 1, 1) == FormalCube{*k->find("1"), {}});
  CHECK(k->describe(FormalCube{i, {2, 1}}) == "eps[2,1](i)");
  CHECK(is_simple_cubical(*k));
  CHECK(CubicalSet::build(k->specs()) == *k);
}

TEST_CASE("build rejects malformed presentations") {
  using corpus::edge;
  using corpus::point;
  CHECK_THROWS_AS(CubicalSet::build({point("0"), edge("e", "0", "x")}), ValidationError);
  CHECK_THROWS_AS(CubicalSet::build({point("0"), point("0")}), ValidationError);
  // A 1-cube face must be 0-dimensional.
  CHECK_THROWS_AS(CubicalSet::build({point("0"), edge("e", "0", "0"), {"f", 1, {{"e", {}}, {"0", {}}}}}),
                  ValidationError);
  // Wrong number of faces.
  CHECK_THROWS_AS(CubicalSet::build({point("0"), {"e", 1, {{"0", {}}}}}), ValidationError);
  // Degenerate point as a face of a square: eps_3 does not fit a 0-cube twice lifted.
  CHECK_THROWS_AS(CubicalSet::build({point("0"), {"s", 2, {{"0", {3}}, {"0", {1}}, {"0", {1}}, {"0", {1}}}}}),
                  ValidationError);
  // Degenerate faces are canonicalized on build.
  const CubicalSet s = CubicalSet::build(
      {point("0"), edge("e", "0", "0"),
       square("s", {"e", {}}, {"e", {}}, {"0", {1}}, {"0", {1}})});
  CHECK(s.face(*s.find("s"), 2, 0).degens == std::vector<int>{1});
}

TEST_CASE("face identities are checked") {
  using corpus::edge;
  using corpus::point;
  // Square on a, b, c, d with consistent corners.
  std::vector<GeneratorSpec> good = {point("a"), point("b"), point("c"), point("d"),
                                     edge("ab", "a", "b"), edge("cd", "c", "d"),
                                     edge("ac", "a", "c"), edge("bd", "b", "d")};
  auto ok = good;
  ok.push_back(square("s", {"ab", {}}, {"cd", {}}, {"ac", {}}, {"bd", {}}));
  CHECK(validate_cubical(CubicalSet::build(ok)).ok());

  auto bad = good;
  bad.push_back(square("s", {"ab", {}}, {"cd", {}}, {"bd", {}}, {"ac", {}}));
  const ValidationReport r = validate_cubical(CubicalSet::build(bad));
  CHECK_FALSE(r.ok());
  CHECK(r.violations.size() >= 1);
  CHECK(r.violations.front().find("s") != std::string::npos);

  CHECK(validate_cubical(*corpus::doubled_path_set()).ok());
}

TEST_CASE("canonical faces of degenerate cubes") {
  const auto k = corpus::triangle();
  const std::size_t e = *k->find("i");
  // d_i eps_i = id.
  for (int a = 0; a <= 1; ++a) {
    CHECK(canonical_face(*k, FormalCube{e, {1}}, 1, a) == FormalCube{e, {}});
    CHECK(canonical_face(*k, FormalCube{e, {2}}, 2, a) == FormalCube{e, {}});
  }
  // d_1^a eps_2(e) = eps_1(d_1^a e).
  CHECK(canonical_face(*k, FormalCube{e, {2}}, 1, 0) == FormalCube{*k->find("0"), {1}});
  CHECK(canonical_face(*k, FormalCube{e, {2}}, 1, 1) == FormalCube{*k->find("1"), {1}});
  CHECK(canonical_face(*k, FormalCube{e, {}}, 1, 1) == k->face(e, 1, 1));
  CHECK_THROWS(canonical_face(*k, FormalCube{e, {}}, 2, 0));
  CHECK_THROWS(canonical_face(*k, FormalCube{e, {}}, 0, 0));
  CHECK(degenerate(*k, FormalCube{e, {1}}, 1) == FormalCube{e, {2, 1}});
  CHECK_THROWS(degenerate(*k, FormalCube{e, {}}, 3));
}

TEST_CASE("canonical faces agree with cube geometry") {
  std::mt19937 rng(17);
  const char* words[] = {"+", "+-", "-"};
  for (int t = 0; t < 12; ++t) {
    auto q = corpus::share(corpus::random_quiver(rng, 3, 3, true));
    const OrientationWord w(words[t % 3]);
    const SingularCubicalSet s(q, w, 2);
    const CubicalSet& k = s.presentation();
    CHECK(validate_cubical(k).ok());
    for (int n = 1; n <= 3; ++n) {
      const CubeShape shape(w, n);
      for (const FormalCube& c : all_cubes(k, n)) {
        const MapTables phi = s.evaluate(c);
        for (int i = 1; i <= n; ++i)
          for (int a = 0; a <= 1; ++a) {
            const MapTables expected = compose(phi, face_tables(shape, i, a ? w.length() : 0));
            CHECK(s.evaluate(canonical_face(k, c, i, a)) == expected);
          }
        if (n <= 2)
          for (int i = 1; i <= n + 1; ++i)
            CHECK(s.evaluate(degenerate(k, c, i)) ==
                  compose(phi, projection_tables(CubeShape(w, n + 1), i)));
      }
    }
  }
}

TEST_CASE("face identity holds on arbitrary formal cubes") {
  for (const CubicalSet& k : corpus::random_cubical_corpus(12, 4)) {
    for (int n = 2; n <= 3; ++n)
      for (const FormalCube& c : all_cubes(k, n))
        for (int j = 2; j <= n; ++j)
          for (int i = 1; i < j; ++i)
            for (int a = 0; a <= 1; ++a)
              for (int b = 0; b <= 1; ++b)
                CHECK(canonical_face(k, canonical_face(k, c, j, b), i, a) ==
                      canonical_face(k, canonical_face(k, c, i, a), j - 1, b));
  }
}

TEST_CASE("skeleta") {
  const auto k = corpus::triangle();
  const CubicalSet s0 = skeleton(*k, 0);
  CHECK(s0.size() == 3);
  CHECK(s0.max_dim() == 0);
  CHECK(skeleton(*k, 1) == *k);
  for (const CubicalSet& c : corpus::random_cubical_corpus(10, 9)) {
    CHECK(skeleton(c, c.max_dim()) == c);
    for (int q = 0; q < c.max_dim(); ++q) {
      const CubicalSet lo = skeleton(c, q), hi = skeleton(c, q + 1);
      CHECK(validate_cubical(lo).ok());
      for (const auto& g : lo.generators()) {
        REQUIRE(hi.find(g.id).has_value());
        CHECK(hi.generator(*hi.find(g.id)).dim == g.dim);
      }
    }
  }
}

TEST_CASE("simple cubical sets") {
  CHECK(is_simple_cubical(*corpus::triangle()));
  CHECK_FALSE(is_simple_cubical(*corpus::doubled_path_set()));
  CHECK_FALSE(is_simple_cubical(
      CubicalSet::build({corpus::point("0"), corpus::edge("l", "0", "0")})));
  CHECK(is_simple_cubical(CubicalSet::build({corpus::point("0")})));
}

TEST_CASE("cubical maps") {
  const auto k = corpus::triangle();
  const CubicalMap id = CubicalMap::identity(k);
  CHECK(validate_cubical_map(id).ok());
  CHECK(compose(id, id) == id);

  auto pt = std::make_shared<const CubicalSet>(CubicalSet::build({corpus::point("p")}));
  std::vector<FormalCube> crush;
  for (const auto& g : k->generators()) crush.push_back(FormalCube{0, g.dim ? std::vector<int>{1} : std::vector<int>{}});
  const CubicalMap c(k, pt, crush);
  CHECK(validate_cubical_map(c).ok());
  CHECK(c.apply(FormalCube{*k->find("j"), {2}}) == FormalCube{0, {2, 1}});

  // Swapping the images of 0 and 1 breaks naturality on the edge i.
  std::vector<FormalCube> swap = id.assignment();
  std::swap(swap[*k->find("0")], swap[*k->find("1")]);
  CHECK_FALSE(validate_cubical_map(CubicalMap(k, k, swap)).ok());

  SUBCASE("enumeration against a brute force count") {
    auto i = corpus::share(corpus::interval());
    const SingularCubicalSet s(i, OrientationWord("+"), 2);
    const auto& target = s.presentation_ptr();
    const auto maps = enumerate_cubical_maps(k, target);
    std::size_t naive = 0;
    std::vector<std::vector<FormalCube>> choices;
    for (const auto& g : k->generators()) choices.push_back(all_cubes(*target, g.dim));
    std::vector<std::size_t> pick(k->size(), 0);
    for (;;) {
      std::vector<FormalCube> a;
      for (std::size_t g = 0; g < k->size(); ++g) a.push_back(choices[g][pick[g]]);
      if (validate_cubical_map(CubicalMap(k, target, a)).ok()) ++naive;
      std::size_t g = 0;
      while (g < pick.size() && ++pick[g] == choices[g].size()) pick[g++] = 0;
      if (g == pick.size()) break;
    }
    CHECK(maps.size() == naive);
    for (const auto& m : maps) CHECK(validate_cubical_map(m).ok());
    // Vertex assignments with every edge going forward or staying put:
    // 0 <= 1 <= 2 and 0 <= 2 in {0,1}: 4 monotone assignments.
    CHECK(maps.size() == 4);
  }
  CHECK_THROWS(enumerate_cubical_maps(
      std::make_shared<const CubicalSet>(CubicalSet::build(
          {corpus::point("0"), corpus::point("1"), corpus::edge("e", "0", "1")})),
      std::make_shared<const CubicalSet>(CubicalSet::build({corpus::point("p")}, 0))));
}
