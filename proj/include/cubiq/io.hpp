#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cubiq/cubical.hpp"
#include "cubiq/quiver.hpp"

namespace cubiq {

struct SimplicialComplexInput {
  std::vector<std::vector<std::string>> facets;

  friend bool operator==(const SimplicialComplexInput&, const SimplicialComplexInput&) = default;
};

/// Face-poset digraph: one vertex per simplex (id = sorted vertex tuple),
/// an arrow sigma -> tau whenever tau is a codimension-one face of sigma.
Digraph simplicial_to_digraph(const SimplicialComplexInput& s);

using Artifact = std::variant<Quiver, CubicalSet, SimplicialComplexInput>;

/// Parses and validates a document. Throws ValidationError; JSON syntax
/// errors carry the line number.
Artifact parse_artifact(const std::string& text);
Artifact load_artifact(const std::string& path);

nlohmann::ordered_json to_json(const Quiver& q);
nlohmann::ordered_json to_json(const CubicalSet& k);
nlohmann::ordered_json to_json(const SimplicialComplexInput& s);
nlohmann::ordered_json to_json(const Artifact& a);

void write_json(const std::string& path, const nlohmann::ordered_json& doc);

}  // namespace cubiq
