#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "cubiq/realization.hpp"

using namespace cubiq;

namespace {

std::shared_ptr<const CubicalSet> share_set(CubicalSet k) {
  return std::make_shared<const CubicalSet>(std::move(k));
}

}  // namespace

TEST_CASE("realization of the triangle") {
  const Quiver g = realize(*corpus::triangle(), OrientationWord("+"));
  CHECK(g.vertices() == std::vector<std::string>{"0", "1", "2"});
  REQUIRE(g.arrow_count() == 3);
  CHECK(g.arrow(0) == Arrow{"i", 0, 1});
  CHECK(g.arrow(1) == Arrow{"j", 1, 2});
  CHECK(g.arrow(2) == Arrow{"k", 0, 2});
  CHECK(isomorphic(g, corpus::triangle_digraph()));
  CHECK(is_simple(g));

  const Quiver sub = realize(*corpus::triangle(), OrientationWord("++"));
  CHECK(sub.vertex_count() == 6);
  CHECK(sub.arrow_count() == 6);
  CHECK(sub.vertex_id(3) == "i@(1)");
  CHECK(sub.arrow(0).id == "i@(0)->(1)");
}

TEST_CASE("realization of a point") {
  const CubicalSet pt = CubicalSet::build({corpus::point("p")});
  for (const char* w : {"+", "-", "++", "+-+"}) {
    const Quiver q = realize(pt, OrientationWord(w));
    CHECK(q.vertex_count() == 1);
    CHECK(q.arrow_count() == 0);
  }
  CHECK(realize(CubicalSet::build({}), OrientationWord("+")).vertex_count() == 0);
}

TEST_CASE("a square with two degenerate sides collapses to an arrow") {
  using corpus::edge;
  using corpus::point;
  const CubicalSet k = CubicalSet::build(
      {point("0"), point("1"), edge("e", "0", "1"),
       {"s", 2, {{"e", {}}, {"e", {}}, {"0", {1}}, {"1", {1}}}}});
  REQUIRE(validate_cubical(k).ok());
  const Realization r = realize_with_classes(k, OrientationWord("+"));
  CHECK(r.quiver->vertex_count() == 2);
  CHECK(r.quiver->arrow_count() == 1);
  CHECK(isomorphic(*r.quiver, corpus::interval()));
  const std::size_t s = *k.find("s");
  std::size_t collapsed = 0;
  for (const ArrowImage& a : r.arrow_class[s]) collapsed += a.is_arrow() ? 0 : 1;
  CHECK(collapsed == 2);
}

TEST_CASE("singular sets realize back to their quiver") {
  for (const Quiver& q : corpus::quiver_library()) {
    const SingularCubicalSet s(corpus::share(q), OrientationWord("+"), 1);
    const Quiver back = realize(s.presentation(), OrientationWord("+"));
    CHECK(isomorphic(back, q));
  }
}

TEST_CASE("two-step singular set of the interval is not the interval") {
  const SingularCubicalSet s(corpus::share(corpus::interval()), OrientationWord("++"), 1);
  const Quiver g = realize(s.presentation(), OrientationWord("+"));
  CHECK(g.vertex_count() == 2);
  CHECK(g.arrow_count() == 2);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK_FALSE(isomorphic(g, corpus::interval()));
}

TEST_CASE("one-step realization depends only on the 1-skeleton") {
  for (const CubicalSet& k : corpus::random_cubical_corpus(25, 77)) {
    const OrientationWord w("+");
    CHECK(realize(k, w) == realize(skeleton(k, 1), w));
  }
}

TEST_CASE("longer words see interior vertices of higher cubes") {
  // For |w| >= 2 a 2-cube has an interior vertex (1,1) that lies on no face,
  // so the realization keeps more than the 1-skeleton does.
  using corpus::edge;
  using corpus::point;
  const CubicalSet sq = CubicalSet::build(
      {point("a"), point("b"), point("c"), point("d"), edge("ab", "a", "b"),
       edge("cd", "c", "d"), edge("ac", "a", "c"), edge("bd", "b", "d"),
       {"s", 2, {{"ab", {}}, {"cd", {}}, {"ac", {}}, {"bd", {}}}}});
  const OrientationWord w("++");
  const Quiver full = realize(sq, w), one = realize(skeleton(sq, 1), w);
  CHECK(full.vertex_count() == 9);
  CHECK(one.vertex_count() == 8);
  CHECK(full.arrow_count() == 12);
  CHECK(one.arrow_count() == 8);
}

TEST_CASE("realizations are digraphs") {
  const auto corpus_sets = corpus::random_cubical_corpus(25, 78);
  for (const CubicalSet& k : corpus_sets)
    if (is_simple_cubical(k)) CHECK(is_simple(realize(k, OrientationWord("+"))));
  // Middle vertices of 1-cubes are private, so monotone words give digraphs
  // on 1-skeleta.
  for (const CubicalSet& k : corpus_sets)
    for (const char* w : {"++", "+++", "--"})
      CHECK(is_simple(realize(skeleton(k, 1), OrientationWord(w))));
  CHECK_FALSE(is_simple(realize(*corpus::doubled_path_set(), OrientationWord("+"))));
  CHECK(is_simple(realize(*corpus::doubled_path_set(), OrientationWord("++"))));
}

TEST_CASE("longer words can still produce parallel arrows") {
  using corpus::edge;
  using corpus::point;
  // A loop 1-cube under +-: both ends glued, both arrows point at the middle.
  const CubicalSet loop = CubicalSet::build({point("x"), edge("l", "x", "x")});
  const Quiver a = realize(loop, OrientationWord("+-"));
  CHECK(a.vertex_count() == 2);
  CHECK(a.multiplicity(0, 1) == 2);
  CHECK(is_simple(realize(loop, OrientationWord("++"))));

  // A square whose two lower faces are the same edge: (0,1) and (1,0) are
  // glued and both step into the private centre (1,1).
  const CubicalSet corner = CubicalSet::build(
      {point("a"), point("b"), edge("e", "a", "b"), edge("f", "b", "b"),
       {"s", 2, {{"e", {}}, {"f", {}}, {"e", {}}, {"f", {}}}}});
  REQUIRE(validate_cubical(corner).ok());
  const Quiver c = realize(corner, OrientationWord("++"));
  CHECK_FALSE(is_simple(c));
  CHECK(is_simple(realize(skeleton(corner, 1), OrientationWord("++"))));

  // Two collapsed sides meeting at a corner send both side midpoints to
  // that corner.
  const CubicalSet pinched = CubicalSet::build(
      {point("p"), point("q"), edge("e", "p", "q"),
       {"s", 2, {{"p", {1}}, {"e", {}}, {"p", {1}}, {"e", {}}}}});
  REQUIRE(validate_cubical(pinched).ok());
  const Quiver d = realize(pinched, OrientationWord("++"));
  CHECK_FALSE(is_simple(d));
  CHECK(is_simple(realize(skeleton(pinched, 1), OrientationWord("++"))));
}

TEST_CASE("adjunction bijection") {
  SUBCASE("point source") {
    auto pt = share_set(CubicalSet::build({corpus::point("p")}));
    auto q = corpus::share(corpus::quiver_library()[7]);
    const OrientationWord w("+");
    const Realization r = realize_with_classes(*pt, w);
    const SingularCubicalSet s(q, w, 0);
    const auto maps = all_quiver_maps(*r.quiver, *q);
    CHECK(maps.size() == q->vertex_count());
    CHECK(enumerate_cubical_maps(pt, s.presentation_ptr()).size() == q->vertex_count());
  }
  SUBCASE("single edge into the interval") {
    auto e = share_set(CubicalSet::build(
        {corpus::point("0"), corpus::point("1"), corpus::edge("e", "0", "1")}));
    auto i = corpus::share(corpus::interval());
    for (const char* wt : {"+", "++", "+-"}) {
      const OrientationWord w(wt);
      const Realization r = realize_with_classes(*e, w);
      const SingularCubicalSet s(i, w, 1);
      const auto left = all_quiver_maps(*r.quiver, *i);
      const auto right = enumerate_cubical_maps(e, s.presentation_ptr());
      CHECK(left.size() == right.size());
    }
  }
  SUBCASE("triangle into its realization") {
    auto k = corpus::triangle();
    const OrientationWord w("+");
    const Realization r = realize_with_classes(*k, w);
    const SingularCubicalSet s(r.quiver, w, 1);
    const auto right = enumerate_cubical_maps(k, s.presentation_ptr());
    const auto left = all_quiver_maps(*r.quiver, *r.quiver);
    CHECK(left.size() == right.size());
    for (const CubicalMap& g : right) {
      const QuiverMap f = adjunction_backward(r, g, s);
      CHECK(adjunction_forward(r, k, f, s) == g);
    }
    for (const MapTables& t : left) {
      const QuiverMap f(r.quiver, r.quiver, t);
      CHECK(adjunction_backward(r, adjunction_forward(r, k, f, s), s) == f);
    }
  }
  SUBCASE("truncation too small") {
    auto k = corpus::triangle();
    const Realization r = realize_with_classes(*k, OrientationWord("+"));
    const SingularCubicalSet s(r.quiver, OrientationWord("+"), 0);
    CHECK_THROWS_AS(adjunction_forward(r, k, QuiverMap::identity(r.quiver), s), ValidationError);
  }
}
