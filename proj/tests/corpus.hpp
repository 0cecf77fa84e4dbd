#pragma once

// Fixtures shared by the unit tests and the acceptance runner.

#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cubiq/cubical.hpp"
#include "cubiq/quiver.hpp"
#include "cubiq/singular.hpp"

namespace corpus {

using namespace cubiq;

inline GeneratorSpec edge(const std::string& id, const std::string& from, const std::string& to) {
  return {id, 1, {{from, {}}, {to, {}}}};
}

inline GeneratorSpec point(const std::string& id) { return {id, 0, {}}; }

/// Three vertices 0, 1, 2 and edges i: 0-1, j: 1-2, k: 0-2.
inline std::shared_ptr<const CubicalSet> triangle() {
  return std::make_shared<const CubicalSet>(CubicalSet::build(
      {point("0"), point("1"), point("2"), edge("i", "0", "1"), edge("j", "1", "2"),
       edge("k", "0", "2")}));
}

/// Same vertices with k running 2 -> 0, so the edges form a directed cycle.
inline std::shared_ptr<const CubicalSet> cyclic_triangle() {
  return std::make_shared<const CubicalSet>(CubicalSet::build(
      {point("0"), point("1"), point("2"), edge("i", "0", "1"), edge("j", "1", "2"),
       edge("k", "2", "0")}));
}

/// Two parallel edges v0 -> v1 followed by two parallel edges v1 -> v2.
inline std::shared_ptr<const CubicalSet> doubled_path_set() {
  return std::make_shared<const CubicalSet>(CubicalSet::build(
      {point("v0"), point("v1"), point("v2"), edge("a1", "v0", "v1"), edge("a2", "v0", "v1"),
       edge("b1", "v1", "v2"), edge("b2", "v1", "v2")}));
}

inline Quiver doubled_path() {
  return Quiver::build({"v0", "v1", "v2"}, {{"a1", "v0", "v1"},
                                            {"a2", "v0", "v1"},
                                            {"b1", "v1", "v2"},
                                            {"b2", "v1", "v2"}});
}

inline Quiver single_point() { return Quiver::build({"v0"}, {}); }

inline Quiver interval() { return Quiver::build({"0", "1"}, {{"a", "0", "1"}}); }

/// v0 -> v1 -> v2 with the shortcut v0 -> v2.
inline Quiver triangle_digraph() {
  return Quiver::build({"v0", "v1", "v2"},
                       {{"a", "v0", "v1"}, {"b", "v1", "v2"}, {"c", "v0", "v2"}});
}

inline std::shared_ptr<const Quiver> share(Quiver q) {
  return std::make_shared<const Quiver>(std::move(q));
}

inline Quiver random_quiver(std::mt19937& rng, int max_vertices, int max_arrows,
                            bool allow_loops, bool simple = false) {
  const int nv = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  const int na = std::uniform_int_distribution<int>(0, max_arrows)(rng);
  std::vector<std::string> vertices;
  for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<ArrowSpec> arrows;
  std::set<std::pair<int, int>> used;
  std::uniform_int_distribution<int> pick(0, nv - 1);
  for (int a = 0; a < na; ++a) {
    const int s = pick(rng), t = pick(rng);
    if (s == t && (!allow_loops || simple)) continue;
    if (simple && !used.insert({s, t}).second) continue;
    arrows.push_back({"e" + std::to_string(arrows.size()), vertices[static_cast<std::size_t>(s)],
                      vertices[static_cast<std::size_t>(t)]});
  }
  return Quiver::build(vertices, arrows);
}

inline Quiver random_connected_quiver(std::mt19937& rng, int max_vertices, int max_arrows,
                                      bool allow_loops) {
  for (;;) {
    Quiver q = random_quiver(rng, max_vertices, max_arrows, allow_loops);
    if (connected_components(q) == 1) return q;
  }
}

/// Sub-presentation generated by `picks` random generators and all of their
/// iterated faces. The result is an untruncated finite cubical set.
inline CubicalSet random_subcomplex(const CubicalSet& s, std::mt19937& rng, int picks) {
  std::vector<char> keep(s.size(), 0);
  std::vector<std::size_t> stack;
  if (s.size() == 0) return CubicalSet::build({});
  // Prefer high-dimensional generators.
  std::vector<double> weights;
  for (const auto& g : s.generators()) weights.push_back(1.0 + 4.0 * g.dim * g.dim);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  for (int i = 0; i < picks; ++i) stack.push_back(pick(rng));
  while (!stack.empty()) {
    const std::size_t g = stack.back();
    stack.pop_back();
    if (keep[g]) continue;
    keep[g] = 1;
    for (const FormalCube& f : s.generator(g).faces) stack.push_back(f.gen);
  }
  std::vector<GeneratorSpec> specs;
  const auto all = s.specs();
  for (std::size_t g = 0; g < s.size(); ++g)
    if (keep[g]) specs.push_back(all[g]);
  return CubicalSet::build(std::move(specs));
}

/// At most one loop per vertex and multiplicity at most 2, which keeps the
/// number of singular 2-cubes small.
inline bool tame(const Quiver& q) {
  if (q.max_multiplicity() > 2) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (q.multiplicity(v, v) > 1) return false;
  return true;
}

/// Random valid cubical sets with generators of dimension <= 3, cut out of
/// singular cubical sets of small random quivers. Dimension 3 uses simple
/// quivers only; loops blow up the number of singular 3-cubes.
inline std::vector<CubicalSet> random_cubical_corpus(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<CubicalSet> out;
  const char* words[] = {"+", "+-", "++", "-+"};
  while (static_cast<int>(out.size()) < count) {
    const std::string w = words[out.size() % 4];
    const int top = w.size() == 1 ? 3 : 2;
    auto q = share(top == 3 ? random_quiver(rng, 3, 3, false, true)
                            : random_quiver(rng, 3, 3, true));
    if (q->vertex_count() < 2 || !tame(*q)) continue;
    SingularCubicalSet s(q, OrientationWord(w), top);
    const int picks = std::uniform_int_distribution<int>(2, 4)(rng);
    out.push_back(random_subcomplex(s.presentation(), rng, picks));
  }
  return out;
}

/// Ten quivers with at most five vertices, loops and parallel arrows included.
inline std::vector<Quiver> quiver_library() {
  return {
      single_point(),
      interval(),
      triangle_digraph(),
      doubled_path(),
      Quiver::build({"x"}, {{"l", "x", "x"}}),
      Quiver::build({"x", "y"}, {{"f", "x", "y"}, {"g", "y", "x"}}),
      Quiver::build({"x", "y"}, {{"f", "x", "y"}, {"g", "x", "y"}, {"h", "x", "y"}, {"l", "y", "y"}}),
      Quiver::build({"a", "b", "c", "d"},
                    {{"ab", "a", "b"}, {"bc", "b", "c"}, {"cd", "c", "d"}, {"da", "d", "a"}}),
      Quiver::build({"a", "b", "c", "d", "e"},
                    {{"ab", "a", "b"}, {"ac", "a", "c"}, {"bd", "b", "d"}, {"cd", "c", "d"},
                     {"de", "d", "e"}, {"ee", "e", "e"}}),
      Quiver::build({"p", "q", "r", "s", "t"},
                    {{"pq", "p", "q"}, {"pq2", "p", "q"}, {"rs", "r", "s"}, {"ll", "t", "t"},
                     {"ll2", "t", "t"}}),
  };
}

}  // namespace corpus
