#pragma once

#include <memory>
#include <vector>

#include "cubiq/cube.hpp"
#include "cubiq/cubical.hpp"
#include "cubiq/quiver.hpp"
#include "cubiq/singular.hpp"

namespace cubiq {

/**
 * Quiver realization of a cubical set: one cube digraph I_w^n per generator,
 * glued along faces. Keeps, for every generator, where each of its cube
 * vertices and arrows ended up.
 */
struct Realization {
  std::shared_ptr<const Quiver> quiver;
  OrientationWord word{"+"};
  /// vertex_class[g][v]: vertex of the realization hit by cube vertex v of g.
  std::vector<std::vector<std::size_t>> vertex_class;
  /// arrow_class[g][a]: arrow of the realization, or the vertex it collapsed to.
  std::vector<std::vector<ArrowImage>> arrow_class;
};

Realization realize_with_classes(const CubicalSet& k, const OrientationWord& w);

inline Quiver realize(const CubicalSet& k, const OrientationWord& w) {
  return *realize_with_classes(k, w).quiver;
}

/// E(f): the cubical map K -> S_w(Q) sending x to the singular cube
/// v |-> f(x, v).
CubicalMap adjunction_forward(const Realization& real, std::shared_ptr<const CubicalSet> k,
                              const QuiverMap& f, const SingularCubicalSet& target);

/// E^{-1}(g): the quiver map |K| -> Q assembled from the singular cubes g(x).
/// Throws if g disagrees on glued cube vertices or arrows.
QuiverMap adjunction_backward(const Realization& real, const CubicalMap& g,
                              const SingularCubicalSet& target);

}  // namespace cubiq
