#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "cubiq/cube.hpp"
#include "cubiq/singular.hpp"

using namespace cubiq;

namespace {

std::size_t count_nondegenerate(const std::vector<SingularCube>& cubes) {
  std::size_t n = 0;
  for (const auto& c : cubes) n += c.degenerate ? 0 : 1;
  return n;
}

// phi factors through sigma_i for some i, found by trying every map of one
// dimension lower.
bool factors_through_projection(const Quiver& q, const OrientationWord& w, int n,
                                const MapTables& phi) {
  if (n == 0) return false;
  const CubeShape big(w, n), small(w, n - 1);
  const auto lower = all_quiver_maps(small.to_quiver(), q);
  for (int i = 1; i <= n; ++i) {
    const MapTables s = projection_tables(big, i);
    for (const auto& psi : lower)
      if (compose(psi, s) == phi) return true;
  }
  return false;
}

MapTables identity_tables(const Quiver& q) {
  MapTables t;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) t.vertices.push_back(v);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) t.arrows.push_back(ArrowImage::to_arrow(a));
  return t;
}

}  // namespace

TEST_CASE("singular cube counts") {
  const Quiver i = corpus::interval();
  const auto plus = enumerate_singular_cubes(i, OrientationWord("+"), 1);
  CHECK(plus.size() == 3);
  CHECK(count_nondegenerate(plus) == 1);

  const auto pp = enumerate_singular_cubes(i, OrientationWord("++"), 1);
  CHECK(pp.size() == 4);
  CHECK(count_nondegenerate(pp) == 2);

  const Quiver pt = corpus::single_point();
  for (const char* w : {"+", "-+", "++-"})
    for (int n = 0; n <= 3; ++n) {
      const auto c = enumerate_singular_cubes(pt, OrientationWord(w), n);
      REQUIRE(c.size() == 1);
      CHECK(c[0].degenerate == (n >= 1));
    }
  CHECK(enumerate_singular_cubes(Quiver(), OrientationWord("+"), 1).empty());
}

TEST_CASE("degeneracy flags agree with a search for a factorization") {
  std::mt19937 rng(2);
  for (int t = 0; t < 12; ++t) {
    const Quiver q = corpus::random_quiver(rng, 3, 3, true);
    if (!corpus::tame(q)) continue;
    for (const char* w : {"+", "+-"})
      for (int n = 0; n <= (w[1] ? 1 : 2); ++n)
        for (const auto& c : enumerate_singular_cubes(q, OrientationWord(w), n))
          CHECK(c.degenerate == factors_through_projection(q, OrientationWord(w), n, c.map));
  }
}

TEST_CASE("stripping degeneracies") {
  std::mt19937 rng(6);
  for (int t = 0; t < 10; ++t) {
    const Quiver q = corpus::random_quiver(rng, 3, 3, true);
    if (!corpus::tame(q)) continue;
    const OrientationWord w(t % 2 ? "+" : "-+");
    for (int n = 0; n <= 2; ++n) {
      const CubeShape shape(w, n);
      for (const auto& c : enumerate_singular_cubes(q, w, n)) {
        const StrippedCube s = strip_degeneracies(w, n, c.map);
        CHECK(s.degens.empty() == !c.degenerate);
        // Rebuild phi from the core by applying the projections.
        MapTables rebuilt = s.core;
        int d = n - static_cast<int>(s.degens.size());
        for (auto it = s.degens.rbegin(); it != s.degens.rend(); ++it) {
          rebuilt = compose(rebuilt, projection_tables(CubeShape(w, d + 1), *it));
          ++d;
        }
        CHECK(rebuilt == c.map);
      }
    }
  }
}

TEST_CASE("singular cubical sets") {
  auto i = corpus::share(corpus::interval());
  SUBCASE("two-step line over the interval") {
    const SingularCubicalSet s(i, OrientationWord("++"), 1);
    const CubicalSet& k = s.presentation();
    CHECK(k.of_dim(0).size() == 2);
    CHECK(k.of_dim(1).size() == 2);
    CHECK(validate_cubical(k).ok());
    // Each nondegenerate 1-cube walks 0 -> 1 and stays at one end; their
    // faces are the two 0-generators, hit once as start and once as end.
    for (std::size_t g : k.of_dim(1)) {
      CHECK(k.face(g, 1, 0) == FormalCube{k.of_dim(0)[0], {}});
      CHECK(k.face(g, 1, 1) == FormalCube{k.of_dim(0)[1], {}});
    }
    CHECK(k.generator(k.of_dim(1)[0]).id == "c1_0");
  }
  SUBCASE("point") {
    const SingularCubicalSet s(corpus::share(corpus::single_point()), OrientationWord("+"), 3);
    CHECK(s.presentation().size() == 1);
    CHECK(s.presentation().truncated_at() == 3);
  }
  SUBCASE("interval up to squares") {
    const SingularCubicalSet s(i, OrientationWord("+"), 2);
    const CubicalSet& k = s.presentation();
    CHECK(k.of_dim(0).size() == 2);
    CHECK(k.of_dim(1).size() == 1);
    CHECK(k.of_dim(2).size() == 2);
    CHECK(validate_cubical(k).ok());
  }
  SUBCASE("express and evaluate are inverse") {
    std::mt19937 rng(31);
    for (int t = 0; t < 8; ++t) {
      auto q = corpus::share(corpus::random_quiver(rng, 3, 3, true));
      if (!corpus::tame(*q)) continue;
      const OrientationWord w(t % 2 ? "++" : "+");
      const SingularCubicalSet s(q, w, 2);
      CHECK(validate_cubical(s.presentation()).ok());
      for (int n = 0; n <= 2; ++n)
        for (const auto& c : enumerate_singular_cubes(*q, w, n)) {
          const FormalCube f = s.express(n, c.map);
          CHECK(s.presentation().dim(f) == n);
          CHECK(s.evaluate(f) == c.map);
        }
      CHECK_THROWS(s.express(3, MapTables{}));
    }
  }
}

TEST_CASE("induced maps of singular sets") {
  auto i = corpus::share(corpus::interval());
  auto pt = corpus::share(corpus::single_point());
  const OrientationWord w("+");
  const SingularCubicalSet si(i, w, 1), sp(pt, w, 1);

  CHECK(postcompose(QuiverMap::identity(i), si, si) == CubicalMap::identity(si.presentation_ptr()));
  const MapTables line_id = identity_tables(*line_quiver(w));
  CHECK(precompose(line_id, si, si) == CubicalMap::identity(si.presentation_ptr()));

  const QuiverMap f(i, pt, MapTables{{0, 0}, {ArrowImage::to_vertex(0)}});
  const QuiverMap g = QuiverMap::identity(pt);
  const CubicalMap lhs = postcompose(compose(g, f), si, sp);
  const CubicalMap rhs = compose(postcompose(g, sp, sp), postcompose(f, si, sp));
  CHECK(lhs == rhs);
  CHECK(validate_cubical_map(lhs).ok());

  SUBCASE("functoriality on random quivers") {
    std::mt19937 rng(12);
    for (int t = 0; t < 6; ++t) {
      auto a = corpus::share(corpus::random_quiver(rng, 2, 2, true));
      auto b = corpus::share(corpus::random_quiver(rng, 2, 2, true));
      auto maps = all_quiver_maps(*a, *b);
      auto back = all_quiver_maps(*b, *a);
      if (maps.empty() || back.empty()) continue;
      const QuiverMap f1(a, b, maps[maps.size() / 2]);
      const QuiverMap g1(b, a, back[back.size() / 2]);
      const SingularCubicalSet sa(a, OrientationWord("+-"), 1), sb(b, OrientationWord("+-"), 1);
      CHECK(postcompose(compose(g1, f1), sa, sa) ==
            compose(postcompose(g1, sb, sa), postcompose(f1, sa, sb)));
      CHECK(validate_cubical_map(postcompose(f1, sa, sb)).ok());
    }
  }
}

TEST_CASE("interval maps") {
  const IntervalMaps plus = interval_maps(OrientationWord("++"), 1);
  CHECK(plus.include.vertices == std::vector<std::size_t>{1, 2});
  CHECK(plus.project.vertices == std::vector<std::size_t>{0, 0, 1});

  const IntervalMaps minus = interval_maps(OrientationWord("+-"), 1);
  CHECK(minus.include.vertices == std::vector<std::size_t>{2, 1});
  CHECK(minus.project.vertices == std::vector<std::size_t>{1, 1, 0});
  CHECK(minus.include.arrows == std::vector<ArrowImage>{ArrowImage::to_arrow(1)});

  const IntervalMaps trivial = interval_maps(OrientationWord("+"), 0);
  CHECK(trivial.include == identity_tables(*line_quiver(OrientationWord("+"))));
  CHECK(trivial.project == trivial.include);

  CHECK_THROWS(interval_maps(OrientationWord("++"), 2));
  CHECK_THROWS(interval_maps(OrientationWord("++"), -1));

  for (const char* w : {"+", "++", "+-", "-+", "+-+"}) {
    const OrientationWord word(w);
    for (int m = 0; m < word.length(); ++m) {
      const IntervalMaps t = interval_maps(word, m);
      const auto line = line_quiver(word);
      const auto unit = line_quiver(OrientationWord("+"));
      CHECK_FALSE(map_defect(*unit, *line, t.include).has_value());
      CHECK_FALSE(map_defect(*line, *unit, t.project).has_value());
      CHECK(compose(t.project, t.include) == identity_tables(*unit));
    }
  }
}

TEST_CASE("retraction through a longer line") {
  for (const char* qname : {"interval", "triangle"}) {
    auto q = corpus::share(std::string(qname) == "interval" ? corpus::interval()
                                                            : corpus::triangle_digraph());
    for (const char* w : {"+", "++", "+-", "-+"}) {
      const OrientationWord word(w);
      for (int m = 0; m < word.length(); ++m) {
        const IntervalChange c = interval_change_maps(q, word, m, 2);
        CHECK(compose(c.i_box, c.p_box) == CubicalMap::identity(c.directed->presentation_ptr()));
        // Faces of I_w^n sit at 0 and k, so precomposition commutes with
        // faces only when the line map keeps the end vertices in place.
        CHECK(validate_cubical_map(c.p_box).ok() == word.forward(m));
        CHECK(validate_cubical_map(c.i_box).ok() == (word.length() == 1));
        if (word.length() == 1)
          CHECK(c.p_box == CubicalMap::identity(c.directed->presentation_ptr()));
      }
    }
  }
}
