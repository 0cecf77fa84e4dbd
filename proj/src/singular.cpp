#include "cubiq/singular.hpp"

#include <algorithm>

namespace cubiq {

StrippedCube strip_degeneracies(const OrientationWord& w, int n, const MapTables& phi) {
  const CubeShape shape(w, n);
  std::vector<int> free;
  for (int i = 1; i <= n; ++i) {
    const MapTables back =
        compose(compose(phi, face_tables(shape, i, 0)), projection_tables(shape, i));
    if (back == phi) free.push_back(i);
  }
  StrippedCube out{phi, {}};
  int d = n;
  for (auto it = free.rbegin(); it != free.rend(); ++it) {
    out.core = compose(out.core, face_tables(CubeShape(w, d), *it, 0));
    out.degens.push_back(*it);
    --d;
  }
  return out;
}

std::vector<SingularCube> enumerate_singular_cubes(const Quiver& q, const OrientationWord& w,
                                                   int n) {
  const Quiver cube = CubeShape(w, n).to_quiver();
  std::vector<SingularCube> out;
  enumerate_quiver_maps(cube, q, [&](const MapTables& t) {
    const bool deg = !strip_degeneracies(w, n, t).degens.empty();
    out.push_back({n, t, deg});
    return true;
  });
  return out;
}

SingularCubicalSet::SingularCubicalSet(std::shared_ptr<const Quiver> q, OrientationWord w,
                                       int n_max)
    : quiver_(std::move(q)), word_(std::move(w)), n_max_(n_max) {
  if (n_max < 0) throw Error("singular cubical set needs a nonnegative truncation");
  lookup_.resize(static_cast<std::size_t>(n_max) + 1);
  std::vector<GeneratorSpec> specs;
  std::vector<int> dims;
  for (int n = 0; n <= n_max; ++n) {
    const Quiver cube = CubeShape(word_, n).to_quiver();
    auto& table = lookup_[static_cast<std::size_t>(n)];
    enumerate_quiver_maps(cube, *quiver_, [&](const MapTables& t) {
      if (!strip_degeneracies(word_, n, t).degens.empty()) return true;
      const std::size_t g = cubes_.size();
      table.emplace(t, g);
      cubes_.push_back(t);
      dims.push_back(n);
      specs.push_back({"c" + std::to_string(n) + "_" + std::to_string(table.size() - 1), n, {}});
      return true;
    });
  }
  for (std::size_t g = 0; g < cubes_.size(); ++g) {
    const int n = dims[g];
    if (n == 0) continue;
    const CubeShape shape(word_, n);
    for (int i = 1; i <= n; ++i)
      for (int a = 0; a < 2; ++a) {
        const MapTables face = compose(cubes_[g], face_tables(shape, i, a ? word_.length() : 0));
        const FormalCube c = express(n - 1, face);
        specs[g].faces.push_back({specs[c.gen].id, c.degens});
      }
  }
  presentation_ = std::make_shared<const CubicalSet>(CubicalSet::build(std::move(specs), n_max));
}

FormalCube SingularCubicalSet::express(int n, const MapTables& phi) const {
  if (n < 0 || n > n_max_)
    throw Error("singular cube of dimension " + std::to_string(n) +
                " lies above the truncation " + std::to_string(n_max_));
  StrippedCube s = strip_degeneracies(word_, n, phi);
  const int base = n - static_cast<int>(s.degens.size());
  const auto& table = lookup_[static_cast<std::size_t>(base)];
  auto it = table.find(s.core);
  if (it == table.end()) throw Error("map is not a singular cube of this quiver");
  return {it->second, std::move(s.degens)};
}

MapTables SingularCubicalSet::evaluate(const FormalCube& c) const {
  MapTables t = cubes_[c.gen];
  int d = presentation_->generator(c.gen).dim;
  for (auto it = c.degens.rbegin(); it != c.degens.rend(); ++it) {
    ++d;
    t = compose(t, projection_tables(CubeShape(word_, d), *it));
  }
  return t;
}

CubicalMap postcompose(const QuiverMap& f, const SingularCubicalSet& source,
                       const SingularCubicalSet& target) {
  if (!(f.source() == source.quiver()) || !(f.target() == target.quiver()))
    throw ValidationError("postcomposition: quiver map does not match the singular sets");
  if (!(source.word() == target.word()) || source.max_dim() > target.max_dim())
    throw ValidationError("postcomposition: words or truncations differ");
  const CubicalSet& k = source.presentation();
  std::vector<FormalCube> a;
  for (std::size_t g = 0; g < k.size(); ++g)
    a.push_back(target.express(k.generator(g).dim, compose(f.tables(), source.cube(g))));
  return CubicalMap(source.presentation_ptr(), target.presentation_ptr(), std::move(a));
}

CubicalMap precompose(const MapTables& line_map, const SingularCubicalSet& source,
                      const SingularCubicalSet& target) {
  if (!(source.quiver() == target.quiver()))
    throw ValidationError("precomposition: quivers differ");
  if (source.max_dim() > target.max_dim())
    throw ValidationError("precomposition: target truncation too small");
  if (auto defect = map_defect(*line_quiver(target.word()), *line_quiver(source.word()), line_map))
    throw ValidationError("precomposition: not a line map: " + *defect);
  const CubicalSet& k = source.presentation();
  std::vector<FormalCube> a;
  for (std::size_t g = 0; g < k.size(); ++g) {
    const int n = k.generator(g).dim;
    const MapTables power =
        power_tables(line_map, CubeShape(target.word(), n), CubeShape(source.word(), n));
    a.push_back(target.express(n, compose(source.cube(g), power)));
  }
  return CubicalMap(source.presentation_ptr(), target.presentation_ptr(), std::move(a));
}

IntervalMaps interval_maps(const OrientationWord& w, int m) {
  const int k = w.length();
  if (m < 0 || m >= k) throw ValidationError("cut position out of range");
  IntervalMaps out;
  const auto um = static_cast<std::size_t>(m);
  const bool forward = w.forward(m);
  out.include.vertices = forward ? std::vector<std::size_t>{um, um + 1}
                                 : std::vector<std::size_t>{um + 1, um};
  out.include.arrows = {ArrowImage::to_arrow(um)};
  const std::size_t below = forward ? 0 : 1;
  const std::size_t above = 1 - below;
  for (int v = 0; v <= k; ++v) out.project.vertices.push_back(v <= m ? below : above);
  for (int c = 0; c < k; ++c) {
    if (c < m)
      out.project.arrows.push_back(ArrowImage::to_vertex(below));
    else if (c == m)
      out.project.arrows.push_back(ArrowImage::to_arrow(0));
    else
      out.project.arrows.push_back(ArrowImage::to_vertex(above));
  }
  return out;
}

IntervalChange interval_change_maps(std::shared_ptr<const Quiver> q, const OrientationWord& w,
                                    int m, int n_max) {
  const IntervalMaps lines = interval_maps(w, m);
  auto directed = std::make_shared<const SingularCubicalSet>(q, OrientationWord("+"), n_max);
  auto general = std::make_shared<const SingularCubicalSet>(q, w, n_max);
  CubicalMap p_box = precompose(lines.project, *directed, *general);
  CubicalMap i_box = precompose(lines.include, *general, *directed);
  return {directed, general, std::move(p_box), std::move(i_box)};
}

}  // namespace cubiq
