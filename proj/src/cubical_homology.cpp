#include "cubiq/cubical_homology.hpp"

#include <algorithm>
#include <functional>

namespace cubiq {

ChainComplex normalized_cubical_complex(const CubicalSet& k, std::optional<int> p_max,
                                        Field field) {
  const std::optional<int> trunc = k.truncated_at();
  int top = p_max ? *p_max : (trunc ? *trunc : std::max(k.max_dim(), 0) + 1);
  if (top < 0) throw Error("degree bound must be nonnegative");
  if (trunc) top = std::min(top, *trunc);
  const bool next_known = !trunc || top < *trunc;
  const int valid = next_known && k.of_dim(top + 1).empty() ? top : top - 1;

  std::vector<std::vector<std::string>> basis;
  std::vector<ExactMatrix> boundary;
  for (int p = 0; p <= top; ++p) {
    std::vector<std::string> labels;
    for (std::size_t g : k.of_dim(p)) labels.push_back(k.generator(g).id);
    const std::size_t below = p == 0 ? 0 : k.of_dim(p - 1).size();
    ExactMatrix d(below, labels.size(), field);
    for (std::size_t col = 0; col < k.of_dim(p).size(); ++col) {
      const std::size_t g = k.of_dim(p)[col];
      for (int i = 1; i <= p; ++i)
        for (int a = 0; a < 2; ++a) {
          const FormalCube& f = k.face(g, i, a);
          if (f.degenerate()) continue;
          const int sign = (i % 2 ? -1 : 1) * (a == 0 ? 1 : -1);
          d.add(k.position(f.gen), col, sign);
        }
    }
    basis.push_back(std::move(labels));
    boundary.push_back(std::move(d));
  }
  return ChainComplex(field, std::move(basis), std::move(boundary), valid);
}

ChainMap cubical_chain_map(const CubicalMap& f, int p_max, Field field) {
  const CubicalSet& s = f.source();
  const CubicalSet& t = f.target();
  ChainMap out;
  for (int p = 0; p <= p_max; ++p) {
    ExactMatrix m(t.of_dim(p).size(), s.of_dim(p).size(), field);
    for (std::size_t col = 0; col < s.of_dim(p).size(); ++col) {
      const FormalCube& img = f.image(s.of_dim(p)[col]);
      if (!img.degenerate()) m.set(t.position(img.gen), col, 1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

MapTables prism_cube(const QuiverMap& homotopy, const Quiver& q, const OrientationWord& w,
                     int n, const MapTables& phi) {
  const CubeShape big(w, n + 1);
  const CubeShape rest(w, n);
  const std::size_t nv = q.vertex_count();
  const std::size_t rest_vertices = rest.vertex_count();
  // Box layout of I [] Q: vertex (x, y) is x * |V_Q| + y; the copy of Q's
  // arrow e at x is x * |E_Q| + e; the line arrow at y is 2 * |E_Q| + y.
  auto box_vertex = [&](std::size_t x, std::size_t y) { return x * nv + y; };
  auto pi = [](int x) -> std::size_t { return x == 0 ? 0 : 1; };
  MapTables t;
  for (std::size_t v = 0; v < big.vertex_count(); ++v) {
    const int x = static_cast<int>(v / rest_vertices);
    t.vertices.push_back(
        homotopy.vertex_image(box_vertex(pi(x), phi.vertices[v % rest_vertices])));
  }
  for (std::size_t a = 0; a < big.arrow_count(); ++a) {
    const auto& geo = big.arrow(a);
    const int x = static_cast<int>(geo.lower / rest_vertices);
    const std::size_t y = geo.lower % rest_vertices;
    if (geo.coordinate == 0) {
      if (x == 0)
        t.arrows.push_back(homotopy.arrow_image(2 * q.arrow_count() + phi.vertices[y]));
      else
        t.arrows.push_back(ArrowImage::to_vertex(t.vertices[geo.lower]));
      continue;
    }
    const ArrowImage img = phi.arrows[rest.arrow_index(y, geo.coordinate - 1)];
    if (img.is_arrow())
      t.arrows.push_back(homotopy.arrow_image(pi(x) * q.arrow_count() + img.index));
    else
      t.arrows.push_back(ArrowImage::to_vertex(t.vertices[geo.lower]));
  }
  return t;
}

namespace {

ExactMatrix singular_map_matrix(const SingularCubicalSet& src, const SingularCubicalSet& tgt,
                                int p, const std::function<MapTables(const MapTables&)>& image,
                                int image_dim) {
  const CubicalSet& s = src.presentation();
  const CubicalSet& t = tgt.presentation();
  ExactMatrix m(t.of_dim(image_dim).size(), s.of_dim(p).size());
  for (std::size_t col = 0; col < s.of_dim(p).size(); ++col) {
    const FormalCube c = tgt.express(image_dim, image(src.cube(s.of_dim(p)[col])));
    if (!c.degenerate()) m.set(t.position(c.gen), col, 1);
  }
  return m;
}

}  // namespace

PrismData prism_homotopy(const QuiverMap& homotopy, std::shared_ptr<const Quiver> q,
                         const OrientationWord& w, int n_max) {
  if (!w.forward(0)) throw ValidationError("prism operator needs the arrow 0 -> 1 first");
  if (n_max < 1) throw ValidationError("prism operator needs truncation at least 1");
  const OrientationWord unit("+");
  if (!(homotopy.source() == box_product(*line_quiver(unit), *q)))
    throw ValidationError("homotopy must start at I [] Q");
  const QuiverMap f = compose(homotopy, endpoint_inclusion(unit, q, false));
  const QuiverMap g = compose(homotopy, endpoint_inclusion(unit, q, true));

  PrismData d;
  d.source_set = std::make_shared<const SingularCubicalSet>(q, w, n_max);
  d.target_set = std::make_shared<const SingularCubicalSet>(homotopy.target_ptr(), w, n_max);
  d.source = normalized_cubical_complex(d.source_set->presentation(), n_max);
  d.target = normalized_cubical_complex(d.target_set->presentation(), n_max);
  for (int p = 0; p <= n_max; ++p) {
    auto by = [](const QuiverMap& m) {
      return [&m](const MapTables& phi) { return compose(m.tables(), phi); };
    };
    d.f_sharp.push_back(singular_map_matrix(*d.source_set, *d.target_set, p, by(f), p));
    d.g_sharp.push_back(singular_map_matrix(*d.source_set, *d.target_set, p, by(g), p));
  }
  for (int p = 0; p < n_max; ++p)
    d.prism.push_back(singular_map_matrix(
        *d.source_set, *d.target_set, p,
        [&](const MapTables& phi) { return prism_cube(homotopy, *q, w, p, phi); }, p + 1));
  return d;
}

bool prism_identity_holds(const PrismData& d, int tau) {
  const int n_max = static_cast<int>(d.prism.size());
  for (int n = 0; n < n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    ExactMatrix lhs = d.target.boundary(n + 1) * d.prism[un];
    if (n >= 1) lhs = lhs + d.prism[un - 1] * d.source.boundary(n);
    if (!(lhs == Rational(tau) * (d.f_sharp[un] - d.g_sharp[un]))) return false;
  }
  return true;
}

}  // namespace cubiq
