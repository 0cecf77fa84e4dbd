#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubiq/chain_complex.hpp"
#include "cubiq/io.hpp"

namespace cubiq {

enum class Theory { Cubical, Cell, Path, CubicalPath, MPath };

/// "cubical", "cell", "path", "cubical-path" (or "cubical_path"), "mpath".
Theory parse_theory(const std::string& name);
std::string theory_name(Theory t);

struct HomologyParams {
  std::optional<std::string> word;
  std::optional<std::size_t> power;
  std::optional<int> max_dim;
  Field field;
  bool include_loops = true;
};

struct HomologyResult {
  Theory theory = Theory::Cubical;
  HomologyReport report;
  /// Parameters actually used, in output order.
  std::vector<std::pair<std::string, std::string>> params;
};

/// Default degree bound for path-type complexes of quivers with cycles.
inline constexpr int kDefaultPathDegree = 3;
/// Default truncation of singular cubical sets.
inline constexpr int kDefaultCellTruncation = 3;

HomologyResult compute_homology(Theory theory, const Artifact& input, const HomologyParams& params);

nlohmann::ordered_json report_json(const HomologyResult& r);
/// Human-readable report; degrees past the valid bound are marked.
std::string report_text(const HomologyResult& r);

}  // namespace cubiq
