#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cubiq/error.hpp"

namespace cubiq {

/// Arrow given by identifiers, as read from files or written by hand.
struct ArrowSpec {
  std::string id;
  std::string src;
  std::string tgt;
};

/// Arrow with endpoints resolved to vertex indices.
struct Arrow {
  std::string id;
  std::size_t src = 0;
  std::size_t tgt = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/**
 * A finite quiver (V, E, s, t). Loops and parallel arrows are allowed.
 *
 * Vertex and arrow order is the order of construction; every downstream
 * basis and enumeration follows it. Values are immutable once built.
 */
class Quiver {
 public:
  Quiver() = default;

  /// Indexed construction. Throws ValidationError on duplicate ids or
  /// endpoints out of range.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  /// Construction from identifier lists; throws on duplicates or dangling
  /// endpoints.
  static Quiver build(std::vector<std::string> vertices,
                      const std::vector<ArrowSpec>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::string& vertex_id(std::size_t v) const { return vertices_[v]; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_arrow(std::string_view id) const;

  const std::vector<std::size_t>& out_arrows(std::size_t v) const {
    return out_[v];
  }

  /// Number of arrows from v to w (mu(v, w)).
  std::size_t multiplicity(std::size_t v, std::size_t w) const;
  std::size_t max_multiplicity() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> arrow_index_;
  std::vector<std::vector<std::size_t>> out_;
};

inline Quiver build_quiver(std::vector<std::string> vertices,
                           const std::vector<ArrowSpec>& arrows) {
  return Quiver::build(std::move(vertices), arrows);
}

/// Why a quiver fails to be simple: a loop, or two arrows sharing the
/// ordered endpoint pair.
struct SimplicityWitness {
  std::size_t first = 0;
  std::optional<std::size_t> second;  // empty for a loop
};

std::optional<SimplicityWitness> simplicity_witness(const Quiver& q);
inline bool is_simple(const Quiver& q) { return !simplicity_witness(q); }

class NotSimpleError : public ValidationError {
 public:
  NotSimpleError(std::string what, SimplicityWitness witness)
      : ValidationError(std::move(what)), witness_(witness) {}
  const SimplicityWitness& witness() const { return witness_; }

 private:
  SimplicityWitness witness_;
};

/// A simple quiver: no loops, at most one arrow per ordered vertex pair.
class Digraph {
 public:
  const Quiver& quiver() const { return quiver_; }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  std::optional<std::size_t> arrow_between(std::size_t v, std::size_t w) const;
  bool has_arrow(std::size_t v, std::size_t w) const {
    return arrow_between(v, w).has_value();
  }

  friend Digraph to_digraph(Quiver q);

 private:
  explicit Digraph(Quiver q);
  Quiver quiver_;
  std::unordered_map<std::uint64_t, std::size_t> pairs_;
};

/// Throws NotSimpleError carrying the offending loop or arrow pair.
Digraph to_digraph(Quiver q);

/// Image of an arrow under a quiver map: an arrow, or a vertex when the
/// arrow is collapsed.
struct ArrowImage {
  enum class Kind : std::uint8_t { Arrow, Vertex };
  Kind kind = Kind::Arrow;
  std::size_t index = 0;

  static ArrowImage to_arrow(std::size_t a) { return {Kind::Arrow, a}; }
  static ArrowImage to_vertex(std::size_t v) { return {Kind::Vertex, v}; }
  bool is_arrow() const { return kind == Kind::Arrow; }

  friend auto operator<=>(const ArrowImage&, const ArrowImage&) = default;
};

/// Raw vertex and arrow assignment of a quiver map.
struct MapTables {
  std::vector<std::size_t> vertices;
  std::vector<ArrowImage> arrows;

  friend auto operator<=>(const MapTables&, const MapTables&) = default;
};

/// outer o inner, on raw tables.
MapTables compose(const MapTables& outer, const MapTables& inner);

/// Empty when the tables define a quiver map source -> target, otherwise a
/// description of the first violated condition.
std::optional<std::string> map_defect(const Quiver& source,
                                      const Quiver& target,
                                      const MapTables& tables);

struct MapTablesHash {
  std::size_t operator()(const MapTables& t) const;
};

/// A quiver map f = (f_V, f_E); every arrow goes to an arrow with matching
/// endpoints or to the common image vertex of its endpoints.
class QuiverMap {
 public:
  QuiverMap(std::shared_ptr<const Quiver> source,
            std::shared_ptr<const Quiver> target, MapTables tables);

  static QuiverMap identity(std::shared_ptr<const Quiver> q);

  const Quiver& source() const { return *source_; }
  const Quiver& target() const { return *target_; }
  const std::shared_ptr<const Quiver>& source_ptr() const { return source_; }
  const std::shared_ptr<const Quiver>& target_ptr() const { return target_; }
  const MapTables& tables() const { return tables_; }

  std::size_t vertex_image(std::size_t v) const { return tables_.vertices[v]; }
  ArrowImage arrow_image(std::size_t a) const { return tables_.arrows[a]; }

  friend bool operator==(const QuiverMap& a, const QuiverMap& b);

 private:
  std::shared_ptr<const Quiver> source_;
  std::shared_ptr<const Quiver> target_;
  MapTables tables_;
};

/// g o f. Throws if f's target differs from g's source.
QuiverMap compose(const QuiverMap& g, const QuiverMap& f);

/// Digraph map given on vertices; arrows follow the inclusion D in Q
/// (an arrow whose endpoints merge goes to the merged vertex).
QuiverMap digraph_map(std::shared_ptr<const Quiver> g,
                      std::shared_ptr<const Quiver> h,
                      std::vector<std::size_t> vertex_map);

/// Box product A [] B: vertices V_A x V_B (A-major), copies of B's arrows at
/// every vertex of A followed by copies of A's arrows at every vertex of B.
Quiver box_product(const Quiver& a, const Quiver& b);

/// f [] g : A [] B -> A' [] B'.
QuiverMap box_maps(const QuiverMap& f, const QuiverMap& g);

/// Result of gluing Q' to Q along f (the quotient quiver Sigma_f).
struct Quotient {
  Quiver quiver;
  std::vector<std::size_t> source_vertex_class;
  std::vector<std::size_t> target_vertex_class;
  /// Class of each source arrow, or empty when f collapses it.
  std::vector<std::optional<std::size_t>> source_arrow_class;
  std::vector<std::size_t> target_arrow_class;
};

Quotient quotient_by_map(const QuiverMap& f);

/// Visits every quiver map source -> target. Vertex assignments are visited
/// in lexicographic order of target indices (source vertices in index order),
/// then arrow choices lexicographically with the vertex-collapse option
/// ordered before the target arrows. The visitor returns false to stop.
void enumerate_quiver_maps(const Quiver& source, const Quiver& target,
                           const std::function<bool(const MapTables&)>& visit);

std::vector<MapTables> all_quiver_maps(const Quiver& source,
                                       const Quiver& target);

/// Vertex bijection a -> b preserving every arrow multiplicity, if any.
std::optional<std::vector<std::size_t>> find_isomorphism(const Quiver& a,
                                                         const Quiver& b);
inline bool isomorphic(const Quiver& a, const Quiver& b) {
  return find_isomorphism(a, b).has_value();
}

/// Number of weakly connected components.
std::size_t connected_components(const Quiver& q);

}  // namespace cubiq
