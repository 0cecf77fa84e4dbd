#pragma once

#include <string>
#include <vector>

#include "cubiq/linalg.hpp"

namespace cubiq {

/// Betti numbers with the data they were computed from. Degrees above
/// valid_up_to lack the incoming boundary and are not reliable.
struct HomologyReport {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> chain_ranks;
  std::vector<std::size_t> boundary_ranks;  // rank of d_p, p = 0..p_max (d_0 = 0)
  int valid_up_to = -1;
  Field field;
};

/**
 * Chain complex in degrees 0..p_max. boundary(p) is the matrix of
 * d_p : C_p -> C_{p-1} (rows index C_{p-1}); boundary(0) has no rows.
 * d_{p-1} d_p = 0 is checked at construction.
 */
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(Field field, std::vector<std::vector<std::string>> basis,
               std::vector<ExactMatrix> boundary, int valid_up_to);

  const Field& field() const { return field_; }
  int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
  int valid_up_to() const { return valid_up_to_; }
  std::size_t rank(int p) const;
  const std::vector<std::string>& basis(int p) const;
  const ExactMatrix& boundary(int p) const;

  HomologyReport homology() const;

 private:
  Field field_;
  std::vector<std::vector<std::string>> basis_;
  std::vector<ExactMatrix> boundary_;
  int valid_up_to_ = -1;
};

/// Components F_p : C_p -> D_p, p = 0..min(top degrees).
using ChainMap = std::vector<ExactMatrix>;

/// d^D_p F_p = F_{p-1} d^C_p in every degree both complexes carry.
bool is_chain_map(const ChainComplex& c, const ChainComplex& d, const ChainMap& f);

/// True iff F and G agree on H_p: (F_p - G_p) maps every cycle of C_p into
/// the boundaries of D_p. Needs d^D_{p+1}.
bool agree_on_homology(const ChainComplex& c, const ChainComplex& d, const ChainMap& f,
                       const ChainMap& g, int p);

}  // namespace cubiq
