#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cubiq/path_homology.hpp"
#include "cubiq/quiver.hpp"

namespace cubiq {

struct CompletionConfig {
  /// Power M; defaults to the largest arrow multiplicity (at least 1).
  std::optional<std::size_t> power;
  /// Also complete the pairs (v, v) with loops.
  bool include_loops = true;
};

/**
 * Completion of a quiver to power M: M - mu(v, w) virtual arrows are added
 * from v to w. The original arrows keep their indices; virtual ones follow.
 */
struct Completion {
  std::shared_ptr<const Quiver> quiver;
  std::size_t original_arrows = 0;
  std::size_t power = 0;
  /// between[v][w]: every arrow v -> w of the completion.
  std::vector<std::vector<std::vector<std::size_t>>> between;
};

Completion completion(const Quiver& q, const CompletionConfig& cfg = {});

/// Composable arrow sequences of length n (vertices for n = 0).
std::vector<PathKey> arrow_paths(const Quiver& q, int n);

/// Boundary of an elementary n-path of the completion, inside the completion.
SparseChain completion_boundary(const Completion& c, int n, const PathKey& path);

struct MPathComplex {
  Completion completion;
  OmegaComplex omega;
};

/// Omega^M complex in degrees 0..p_max over the rationals.
MPathComplex mpath_complex(const Quiver& q, const CompletionConfig& cfg, int p_max);

/// d d = 0 on every elementary path of Q (or of the whole completion) of
/// length <= max_len, evaluated in the completion.
bool mpath_boundary_squared_zero(const Completion& c, int max_len, bool whole_completion);

}  // namespace cubiq
