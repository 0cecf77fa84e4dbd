#include "cubiq/cube.hpp"

#include <limits>

namespace cubiq {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace

OrientationWord::OrientationWord(std::string_view word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (c == '+' || c == '-') {
      word_.push_back(c);
    } else if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < word.size() &&
               static_cast<unsigned char>(word[i + 1]) == 0x88 &&
               static_cast<unsigned char>(word[i + 2]) == 0x92) {
      word_.push_back('-');  // U+2212
      i += 2;
    } else {
      throw ValidationError("orientation word may only contain '+' and '-': '" +
                            std::string(word) + "'");
    }
  }
  if (word_.empty()) throw ValidationError("orientation word must be nonempty");
}

CubeShape::CubeShape(OrientationWord word, int dim)
    : word_(std::move(word)), dim_(dim) {
  require(dim >= 0, "cube dimension must be nonnegative");
  const std::size_t base = static_cast<std::size_t>(side()) + 1;
  const std::size_t n = static_cast<std::size_t>(dim);
  strides_.assign(n, 1);
  vertex_count_ = 1;
  for (std::size_t j = n; j-- > 0;) {
    strides_[j] = vertex_count_;
    vertex_count_ *= base;
  }
  arrow_at_.assign(vertex_count_ * n, kNone);
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    for (std::size_t j = 0; j < n; ++j) {
      const int c = static_cast<int>((v / strides_[j]) % base);
      if (c >= side()) continue;
      const std::size_t upper = v + strides_[j];
      arrow_at_[v * n + j] = arrows_.size();
      if (word_.forward(c))
        arrows_.push_back({v, static_cast<int>(j), v, upper});
      else
        arrows_.push_back({v, static_cast<int>(j), upper, v});
    }
  }
}

std::vector<int> CubeShape::coords(std::size_t v) const {
  const std::size_t base = static_cast<std::size_t>(side()) + 1;
  std::vector<int> c(static_cast<std::size_t>(dim_));
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = static_cast<int>((v / strides_[j]) % base);
  return c;
}

std::size_t CubeShape::vertex_index(std::span<const int> coords) const {
  std::size_t v = 0;
  for (std::size_t j = 0; j < coords.size(); ++j)
    v += static_cast<std::size_t>(coords[j]) * strides_[j];
  return v;
}

std::string coordinate_label(std::span<const int> coords) {
  std::string s = "(";
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(coords[j]);
  }
  return s + ")";
}

Quiver CubeShape::to_quiver() const {
  std::vector<std::string> vertices;
  vertices.reserve(vertex_count_);
  for (std::size_t v = 0; v < vertex_count_; ++v) vertices.push_back(coordinate_label(coords(v)));
  std::vector<Arrow> arrows;
  arrows.reserve(arrows_.size());
  for (const ArrowGeom& a : arrows_)
    arrows.push_back({vertices[a.src] + "->" + vertices[a.tgt], a.src, a.tgt});
  return Quiver(std::move(vertices), std::move(arrows));
}

Digraph cube_digraph(const OrientationWord& w, int n) {
  return to_digraph(CubeShape(w, n).to_quiver());
}

std::shared_ptr<const Quiver> cube_quiver(const OrientationWord& w, int n) {
  return std::make_shared<const Quiver>(CubeShape(w, n).to_quiver());
}

MapTables face_tables(const CubeShape& target, int i, int value) {
  const int n = target.dim();
  require(n >= 1 && i >= 1 && i <= n, "face index out of range");
  require(value == 0 || value == target.side(), "face value must be 0 or k");
  CubeShape source(target.word(), n - 1);
  MapTables t;
  t.vertices.reserve(source.vertex_count());
  std::vector<std::size_t> image(source.vertex_count());
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    std::vector<int> c = source.coords(v);
    c.insert(c.begin() + (i - 1), value);
    image[v] = target.vertex_index(c);
    t.vertices.push_back(image[v]);
  }
  for (std::size_t a = 0; a < source.arrow_count(); ++a) {
    const auto& g = source.arrow(a);
    const int j = g.coordinate < i - 1 ? g.coordinate : g.coordinate + 1;
    t.arrows.push_back(ArrowImage::to_arrow(target.arrow_index(image[g.lower], j)));
  }
  return t;
}

MapTables projection_tables(const CubeShape& source, int i) {
  const int n = source.dim();
  require(n >= 1 && i >= 1 && i <= n, "projection index out of range");
  CubeShape target(source.word(), n - 1);
  MapTables t;
  t.vertices.reserve(source.vertex_count());
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    std::vector<int> c = source.coords(v);
    c.erase(c.begin() + (i - 1));
    t.vertices.push_back(target.vertex_index(c));
  }
  for (std::size_t a = 0; a < source.arrow_count(); ++a) {
    const auto& g = source.arrow(a);
    const std::size_t low = t.vertices[g.lower];
    if (g.coordinate == i - 1)
      t.arrows.push_back(ArrowImage::to_vertex(low));
    else
      t.arrows.push_back(ArrowImage::to_arrow(
          target.arrow_index(low, g.coordinate < i - 1 ? g.coordinate : g.coordinate - 1)));
  }
  return t;
}

MapTables power_tables(const MapTables& line_map, const CubeShape& source,
                       const CubeShape& target) {
  require(source.dim() == target.dim(), "power map needs equal dimensions");
  require(line_map.vertices.size() == static_cast<std::size_t>(source.side()) + 1,
          "line map does not match the source word");
  MapTables t;
  t.vertices.reserve(source.vertex_count());
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    std::vector<int> c = source.coords(v);
    for (int& x : c) x = static_cast<int>(line_map.vertices[static_cast<std::size_t>(x)]);
    t.vertices.push_back(target.vertex_index(c));
  }
  for (std::size_t a = 0; a < source.arrow_count(); ++a) {
    const auto& g = source.arrow(a);
    const int step = source.coords(g.lower)[static_cast<std::size_t>(g.coordinate)];
    // In a line digraph the arrow of step c has index c.
    const ArrowImage img = line_map.arrows[static_cast<std::size_t>(step)];
    if (!img.is_arrow()) {
      t.arrows.push_back(ArrowImage::to_vertex(t.vertices[g.lower]));
      continue;
    }
    std::vector<int> c = target.coords(t.vertices[g.lower]);
    c[static_cast<std::size_t>(g.coordinate)] = static_cast<int>(img.index);
    t.arrows.push_back(
        ArrowImage::to_arrow(target.arrow_index(target.vertex_index(c), g.coordinate)));
  }
  return t;
}

MapTables split_first_tables(const CubeShape& source) {
  const int n = source.dim() - 1;
  require(n >= 0, "cannot split a 0-cube");
  CubeShape line(source.word(), 1);
  CubeShape rest(source.word(), n);
  const std::size_t rest_vertices = rest.vertex_count();
  const std::size_t rest_arrows = rest.arrow_count();
  MapTables t;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) t.vertices.push_back(v);
  for (std::size_t a = 0; a < source.arrow_count(); ++a) {
    const auto& g = source.arrow(a);
    const std::size_t first = g.lower / rest_vertices;
    const std::size_t tail = g.lower % rest_vertices;
    if (g.coordinate == 0) {
      t.arrows.push_back(ArrowImage::to_arrow(line.vertex_count() * rest_arrows +
                                              first * rest_vertices + tail));
    } else {
      t.arrows.push_back(ArrowImage::to_arrow(first * rest_arrows +
                                              rest.arrow_index(tail, g.coordinate - 1)));
    }
  }
  return t;
}

QuiverMap structural_cube_map(const OrientationWord& w, int n, CubeMapKind kind) {
  require(n >= 1, "structural cube maps need n >= 1");
  require(kind.index >= 1 && kind.index <= n, "cube map index out of range");
  if (kind.type == CubeMapKind::Type::Face) {
    CubeShape target(w, n);
    return QuiverMap(cube_quiver(w, n - 1), cube_quiver(w, n),
                     face_tables(target, kind.index, kind.at_end ? w.length() : 0));
  }
  CubeShape source(w, n);
  return QuiverMap(cube_quiver(w, n), cube_quiver(w, n - 1),
                   projection_tables(source, kind.index));
}

QuiverMap endpoint_inclusion(const OrientationWord& w, std::shared_ptr<const Quiver> q,
                             bool at_end) {
  auto line = line_quiver(w);
  auto box = std::make_shared<const Quiver>(box_product(*line, *q));
  const std::size_t x = at_end ? static_cast<std::size_t>(w.length()) : 0;
  MapTables t;
  for (std::size_t y = 0; y < q->vertex_count(); ++y)
    t.vertices.push_back(x * q->vertex_count() + y);
  for (std::size_t b = 0; b < q->arrow_count(); ++b)
    t.arrows.push_back(ArrowImage::to_arrow(x * q->arrow_count() + b));
  return QuiverMap(std::move(q), std::move(box), std::move(t));
}

bool check_homotopy(const QuiverMap& homotopy, const OrientationWord& w,
                    const QuiverMap& f, const QuiverMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw ValidationError("homotopy endpoints must share source and target");
  if (!(homotopy.source() == box_product(*line_quiver(w), f.source())))
    throw ValidationError("homotopy source is not I_w [] Q");
  if (!(homotopy.target() == f.target()))
    throw ValidationError("homotopy target differs from the maps' target");
  const QuiverMap start = endpoint_inclusion(w, f.source_ptr(), false);
  const QuiverMap end = endpoint_inclusion(w, f.source_ptr(), true);
  return compose(homotopy.tables(), start.tables()) == f.tables() &&
         compose(homotopy.tables(), end.tables()) == g.tables();
}

}  // namespace cubiq
