#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cubiq/chain_complex.hpp"
#include "cubiq/quiver.hpp"

namespace cubiq {

/// A path as a sequence of vertex or arrow indices.
using PathKey = std::vector<std::int64_t>;
using SparseChain = std::map<PathKey, Rational>;

/**
 * Omega complex of a graded family of allowed paths: Omega_p is the set of
 * chains in A_p whose boundary lies in A_{p-1}, computed as a restricted
 * kernel over the non-allowed faces that actually occur.
 */
struct OmegaComplex {
  ChainComplex complex;
  std::vector<std::vector<PathKey>> allowed;  // A_p, p = 0..p_max
  std::vector<RankKernel> omega;              // Omega_p in A_p coordinates

  std::vector<std::size_t> omega_ranks() const;
};

using BoundaryFn = std::function<SparseChain(int p, const PathKey& path)>;
using LabelFn = std::function<std::string(int p, const PathKey& path)>;

OmegaComplex build_omega_complex(std::vector<std::vector<PathKey>> allowed,
                                 const BoundaryFn& boundary, bool next_empty,
                                 const LabelFn& label);

/// Coordinates of an Omega_p element given in A_p coordinates; throws if the
/// vector is not in Omega_p.
std::vector<Rational> omega_coordinates(const RankKernel& omega, const std::vector<Rational>& v);

/// Allowed elementary paths of a digraph with p + 1 vertices, in
/// lexicographic order of vertex indices.
std::vector<PathKey> allowed_paths(const Digraph& g, int p);

/// GLMY path complex in degrees 0..p_max over the rationals.
OmegaComplex path_complex(const Digraph& g, int p_max);

/// Chain map Omega_*(G) -> Omega_*(H) of a digraph map: a path goes to its
/// image when regular, to 0 otherwise.
ChainMap induced_path_chain_map(const QuiverMap& f, const OmegaComplex& source,
                                const OmegaComplex& target);

}  // namespace cubiq
