#pragma once

#include <memory>
#include <optional>

#include "cubiq/chain_complex.hpp"
#include "cubiq/cubical.hpp"
#include "cubiq/singular.hpp"

namespace cubiq {

/**
 * Normalized cubical chains: one basis element per nondegenerate generator,
 * d(x) = sum_i (-1)^i (d_i^0 x - d_i^1 x) with degenerate faces dropped.
 *
 * Without p_max the complex runs one degree past the top generator of a
 * finite presentation, or up to the truncation of a truncated one.
 */
ChainComplex normalized_cubical_complex(const CubicalSet& k, std::optional<int> p_max = {},
                                        Field field = {});

/// Matrices of f_# in degrees 0..p_max; degenerate images map to 0.
ChainMap cubical_chain_map(const CubicalMap& f, int p_max, Field field = {});

/// Sign tau with s d + d s = tau (f_# - g_#) for the prism below.
inline constexpr int kPrismSign = -1;

/// s_n(phi) = F o (pi [] Id) o (Id [] phi) o split : I_w^{n+1} -> Q', where
/// pi : I_w -> I sends 0 to 0 and everything else to 1.
MapTables prism_cube(const QuiverMap& homotopy, const Quiver& q, const OrientationWord& w,
                     int n, const MapTables& phi);

struct PrismData {
  std::shared_ptr<const SingularCubicalSet> source_set;  // S_w(Q)
  std::shared_ptr<const SingularCubicalSet> target_set;  // S_w(Q')
  ChainComplex source;
  ChainComplex target;
  ChainMap f_sharp;                   // F restricted to {0} [] Q, degrees 0..n_max
  ChainMap g_sharp;                   // F restricted to {1} [] Q
  std::vector<ExactMatrix> prism;     // s_n : C_n -> D_{n+1}, n = 0..n_max-1
};

/// Prism operator of a one-step homotopy F : I [] Q -> Q' on the normalized
/// complexes of the singular sets truncated at n_max.
PrismData prism_homotopy(const QuiverMap& homotopy, std::shared_ptr<const Quiver> q,
                         const OrientationWord& w, int n_max);

/// s_{n-1} d_n + d_{n+1} s_n = tau (f_n - g_n) for n = 0..n_max-1.
bool prism_identity_holds(const PrismData& data, int tau);

}  // namespace cubiq
