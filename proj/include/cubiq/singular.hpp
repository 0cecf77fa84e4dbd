#pragma once

#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubiq/cube.hpp"
#include "cubiq/cubical.hpp"
#include "cubiq/quiver.hpp"

namespace cubiq {

/// A quiver map I_w^n -> Q, flagged degenerate when it factors through a
/// coordinate projection.
struct SingularCube {
  int dim = 0;
  MapTables map;
  bool degenerate = false;
};

/// Every quiver map I_w^n -> Q in enumeration order.
std::vector<SingularCube> enumerate_singular_cubes(const Quiver& q, const OrientationWord& w,
                                                   int n);

/// phi = psi o sigma_J with psi nondegenerate; J is returned as a canonical
/// (strictly decreasing) degeneracy word.
struct StrippedCube {
  MapTables core;
  std::vector<int> degens;
};
StrippedCube strip_degeneracies(const OrientationWord& w, int n, const MapTables& phi);

/**
 * Truncated singular cubical set S_w(Q): the nondegenerate singular cubes of
 * dimension <= n_max as a presentation. Generator ids are "c<dim>_<index>".
 */
class SingularCubicalSet {
 public:
  SingularCubicalSet(std::shared_ptr<const Quiver> q, OrientationWord w, int n_max);

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const OrientationWord& word() const { return word_; }
  int max_dim() const { return n_max_; }
  const CubicalSet& presentation() const { return *presentation_; }
  const std::shared_ptr<const CubicalSet>& presentation_ptr() const { return presentation_; }

  /// The singular cube behind generator g.
  const MapTables& cube(std::size_t g) const { return cubes_[g]; }
  /// Formal cube of an arbitrary singular n-cube; throws above the truncation.
  FormalCube express(int n, const MapTables& phi) const;
  /// Singular cube of a formal cube.
  MapTables evaluate(const FormalCube& c) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  OrientationWord word_;
  int n_max_;
  std::shared_ptr<const CubicalSet> presentation_;
  std::vector<MapTables> cubes_;
  std::vector<std::unordered_map<MapTables, std::size_t, MapTablesHash>> lookup_;
};

/// phi |-> f o phi, S_w(Q) -> S_w(Q').
CubicalMap postcompose(const QuiverMap& f, const SingularCubicalSet& source,
                       const SingularCubicalSet& target);

/// phi |-> phi o tau^n for a line map tau : I_w -> I_w', S_w'(Q) -> S_w(Q).
CubicalMap precompose(const MapTables& line_map, const SingularCubicalSet& source,
                      const SingularCubicalSet& target);

/// Line maps i : I -> I_w and p : I_w -> I at the cut between m and m + 1.
struct IntervalMaps {
  MapTables include;
  MapTables project;
};
IntervalMaps interval_maps(const OrientationWord& w, int m);

struct IntervalChange {
  std::shared_ptr<const SingularCubicalSet> directed;  // S_I(Q)
  std::shared_ptr<const SingularCubicalSet> general;   // S_w(Q)
  CubicalMap p_box;                                    // S_I(Q) -> S_w(Q)
  CubicalMap i_box;                                    // S_w(Q) -> S_I(Q)
};
IntervalChange interval_change_maps(std::shared_ptr<const Quiver> q, const OrientationWord& w,
                                    int m, int n_max);

}  // namespace cubiq
