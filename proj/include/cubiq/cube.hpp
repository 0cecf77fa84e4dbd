#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubiq/quiver.hpp"

namespace cubiq {

/**
 * Orientation of a line digraph I_k as a word over {+,-}: character i
 * (0-based) orients the arrow between vertices i and i+1, '+' meaning
 * i -> i+1. The Unicode minus sign is accepted on input.
 */
class OrientationWord {
 public:
  explicit OrientationWord(std::string_view word);
  static OrientationWord directed(int k) {
    return OrientationWord(std::string(static_cast<std::size_t>(k), '+'));
  }

  int length() const { return static_cast<int>(word_.size()); }
  bool forward(int step) const { return word_[static_cast<std::size_t>(step)] == '+'; }
  const std::string& str() const { return word_; }

  friend bool operator==(const OrientationWord&, const OrientationWord&) = default;

 private:
  std::string word_;
};

/**
 * Index arithmetic for the cube digraph I_w^n. Vertices are coordinate tuples
 * in {0..k}^n numbered in lexicographic order (first coordinate most
 * significant). Arrows are numbered by (lower endpoint, coordinate).
 */
class CubeShape {
 public:
  CubeShape(OrientationWord word, int dim);

  const OrientationWord& word() const { return word_; }
  int dim() const { return dim_; }
  int side() const { return word_.length(); }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arrow_count() const { return arrows_.size(); }

  std::vector<int> coords(std::size_t v) const;
  std::size_t vertex_index(std::span<const int> coords) const;

  struct ArrowGeom {
    std::size_t lower;  // endpoint with the smaller coordinate
    int coordinate;     // 0-based
    std::size_t src;
    std::size_t tgt;
  };
  const ArrowGeom& arrow(std::size_t a) const { return arrows_[a]; }
  /// Arrow from `lower` increasing `coordinate` by one step.
  std::size_t arrow_index(std::size_t lower, int coordinate) const {
    return arrow_at_[lower * static_cast<std::size_t>(dim_) +
                     static_cast<std::size_t>(coordinate)];
  }
  std::size_t stride(int coordinate) const {
    return strides_[static_cast<std::size_t>(coordinate)];
  }

  Quiver to_quiver() const;

 private:
  OrientationWord word_;
  int dim_;
  std::size_t vertex_count_;
  std::vector<std::size_t> strides_;
  std::vector<ArrowGeom> arrows_;
  std::vector<std::size_t> arrow_at_;
};

std::string coordinate_label(std::span<const int> coords);

/// I_w^n as a digraph; n = 0 gives the one-vertex digraph.
Digraph cube_digraph(const OrientationWord& w, int n);
std::shared_ptr<const Quiver> cube_quiver(const OrientationWord& w, int n);
/// I_w itself (the cube of dimension one).
inline std::shared_ptr<const Quiver> line_quiver(const OrientationWord& w) {
  return cube_quiver(w, 1);
}

/// Tables of delta_i^alpha : I^{n-1} -> I^n, inserting the constant
/// `value` (0 or k) at 1-based slot i.
MapTables face_tables(const CubeShape& target, int i, int value);
/// Tables of sigma_i : I^n -> I^{n-1}, deleting 1-based coordinate i.
MapTables projection_tables(const CubeShape& source, int i);
/// Tables of tau^n : I_w^n -> I_{w'}^n for a line map tau : I_w -> I_{w'}.
MapTables power_tables(const MapTables& line_map, const CubeShape& source,
                       const CubeShape& target);
/// Isomorphism I_w^{n+1} -> I_w [] I_w^n splitting off the first coordinate,
/// with the box product laid out as box_product(line_quiver(w), cube_quiver(w, n)).
MapTables split_first_tables(const CubeShape& source);

struct CubeMapKind {
  enum class Type { Face, Projection };
  Type type;
  int index;      // 1-based coordinate
  bool at_end;    // face only: alpha = k when true, 0 otherwise

  static CubeMapKind face(int i, bool at_end) { return {Type::Face, i, at_end}; }
  static CubeMapKind projection(int i) { return {Type::Projection, i, false}; }
};

/// delta_i^alpha : I_w^{n-1} -> I_w^n or sigma_i : I_w^n -> I_w^{n-1}.
QuiverMap structural_cube_map(const OrientationWord& w, int n, CubeMapKind kind);

/// Inclusion Q -> I_w [] Q at the end vertex 0 (at_end false) or k.
QuiverMap endpoint_inclusion(const OrientationWord& w,
                             std::shared_ptr<const Quiver> q, bool at_end);

/// True iff F : I_w [] Q -> Q' restricts to f on {0} [] Q and to g on
/// {k} [] Q. Throws on source/target mismatch.
bool check_homotopy(const QuiverMap& homotopy, const OrientationWord& w,
                    const QuiverMap& f, const QuiverMap& g);

}  // namespace cubiq
