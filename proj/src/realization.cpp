#include "cubiq/realization.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

#include "cubiq/union_find.hpp"

namespace cubiq {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Sort key of a class member: generator id, then coordinates.
using MemberKey = std::tuple<std::string, std::vector<int>, int>;

std::vector<int> drop_coordinates(std::vector<int> c, const std::vector<int>& degens) {
  // degens is strictly decreasing, so erasing in order keeps indices valid.
  for (int j : degens) c.erase(c.begin() + (j - 1));
  return c;
}

}  // namespace

Realization realize_with_classes(const CubicalSet& k, const OrientationWord& w) {
  std::vector<CubeShape> shapes;
  for (int n = 0; n <= std::max(k.max_dim(), 0); ++n) shapes.emplace_back(w, n);
  auto shape = [&](int n) -> const CubeShape& { return shapes[static_cast<std::size_t>(n)]; };

  std::vector<std::size_t> vert_off, arr_off;
  std::size_t nv = 0, na = 0;
  for (const auto& g : k.generators()) {
    vert_off.push_back(nv);
    arr_off.push_back(na);
    nv += shape(g.dim).vertex_count();
    na += shape(g.dim).arrow_count();
  }
  UnionFind vuf(nv), auf(na);
  std::vector<char> collapsed(na, 0);

  for (std::size_t g = 0; g < k.size(); ++g) {
    const int n = k.generator(g).dim;
    if (n == 0) continue;
    const CubeShape& big = shape(n);
    const CubeShape& small = shape(n - 1);
    for (int i = 1; i <= n; ++i)
      for (int alpha = 0; alpha < 2; ++alpha) {
        const FormalCube& f = k.face(g, i, alpha);
        const CubeShape& base = shape(k.generator(f.gen).dim);
        std::vector<std::size_t> g_vertex(small.vertex_count());
        std::vector<std::size_t> h_vertex(small.vertex_count());
        for (std::size_t v = 0; v < small.vertex_count(); ++v) {
          std::vector<int> c = small.coords(v);
          std::vector<int> up = c;
          up.insert(up.begin() + (i - 1), alpha ? w.length() : 0);
          g_vertex[v] = big.vertex_index(up);
          h_vertex[v] = base.vertex_index(drop_coordinates(c, f.degens));
          vuf.unite(vert_off[g] + g_vertex[v], vert_off[f.gen] + h_vertex[v]);
        }
        for (std::size_t a = 0; a < small.arrow_count(); ++a) {
          const auto& geo = small.arrow(a);
          const int c0 = geo.coordinate;
          const std::size_t ga =
              arr_off[g] + big.arrow_index(g_vertex[geo.lower], c0 < i - 1 ? c0 : c0 + 1);
          int shift = 0;
          bool dropped = false;
          for (int j : f.degens) {
            if (j - 1 == c0) dropped = true;
            if (j - 1 < c0) ++shift;
          }
          if (dropped)
            collapsed[ga] = 1;
          else
            auf.unite(ga, arr_off[f.gen] + base.arrow_index(h_vertex[geo.lower], c0 - shift));
        }
      }
  }

  // Canonical class order: smallest member key.
  std::map<std::size_t, MemberKey> vkey;
  std::map<std::size_t, std::pair<MemberKey, std::string>> vlabel;
  for (std::size_t g = 0; g < k.size(); ++g) {
    const auto& gen = k.generator(g);
    const CubeShape& s = shape(gen.dim);
    for (std::size_t v = 0; v < s.vertex_count(); ++v) {
      const std::size_t root = vuf.find(vert_off[g] + v);
      MemberKey key{gen.id, s.coords(v), 0};
      auto it = vkey.find(root);
      if (it == vkey.end() || key < it->second) {
        vkey[root] = key;
        vlabel[root] = {key, gen.dim == 0 ? gen.id : gen.id + "@" + coordinate_label(s.coords(v))};
      }
    }
  }
  std::vector<std::pair<MemberKey, std::size_t>> vorder;
  for (const auto& [root, key] : vkey) vorder.push_back({key, root});
  std::sort(vorder.begin(), vorder.end());
  std::map<std::size_t, std::size_t> vindex;
  std::vector<std::string> vertices;
  for (const auto& [key, root] : vorder) {
    vindex[root] = vertices.size();
    vertices.push_back(vlabel[root].second);
  }

  std::map<std::size_t, bool> aroot_dead;
  for (std::size_t a = 0; a < na; ++a)
    if (collapsed[a]) aroot_dead[auf.find(a)] = true;

  struct ArrowPick {
    MemberKey key;
    std::string label;
    std::size_t src, tgt;
  };
  std::map<std::size_t, ArrowPick> apick;
  Realization out;
  out.word = w;
  out.vertex_class.resize(k.size());
  out.arrow_class.resize(k.size());
  for (std::size_t g = 0; g < k.size(); ++g) {
    const auto& gen = k.generator(g);
    const CubeShape& s = shape(gen.dim);
    for (std::size_t v = 0; v < s.vertex_count(); ++v)
      out.vertex_class[g].push_back(vindex[vuf.find(vert_off[g] + v)]);
    for (std::size_t a = 0; a < s.arrow_count(); ++a) {
      const std::size_t root = auf.find(arr_off[g] + a);
      if (aroot_dead.count(root)) continue;
      const auto& geo = s.arrow(a);
      MemberKey key{gen.id, s.coords(geo.lower), geo.coordinate};
      auto it = apick.find(root);
      if (it != apick.end() && !(key < it->second.key)) continue;
      std::string label = (w.length() == 1 && gen.dim == 1)
                              ? gen.id
                              : gen.id + "@" + coordinate_label(s.coords(geo.src)) + "->" +
                                    coordinate_label(s.coords(geo.tgt));
      apick[root] = {key, std::move(label), out.vertex_class[g][geo.src],
                     out.vertex_class[g][geo.tgt]};
    }
  }
  std::vector<std::pair<MemberKey, std::size_t>> aorder;
  for (const auto& [root, pick] : apick) aorder.push_back({pick.key, root});
  std::sort(aorder.begin(), aorder.end());
  std::map<std::size_t, std::size_t> aindex;
  std::vector<Arrow> arrows;
  for (const auto& [key, root] : aorder) {
    const ArrowPick& p = apick[root];
    aindex[root] = arrows.size();
    arrows.push_back({p.label, p.src, p.tgt});
  }
  for (std::size_t g = 0; g < k.size(); ++g) {
    const CubeShape& s = shape(k.generator(g).dim);
    for (std::size_t a = 0; a < s.arrow_count(); ++a) {
      const std::size_t root = auf.find(arr_off[g] + a);
      if (aroot_dead.count(root))
        out.arrow_class[g].push_back(
            ArrowImage::to_vertex(out.vertex_class[g][s.arrow(a).src]));
      else
        out.arrow_class[g].push_back(ArrowImage::to_arrow(aindex[root]));
    }
  }
  out.quiver = std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
  return out;
}

CubicalMap adjunction_forward(const Realization& real, std::shared_ptr<const CubicalSet> k,
                              const QuiverMap& f, const SingularCubicalSet& target) {
  if (!(f.source() == *real.quiver) || !(f.target() == target.quiver()))
    throw ValidationError("adjunction: quiver map does not start at the realization");
  if (!(real.word == target.word())) throw ValidationError("adjunction: words differ");
  if (k->max_dim() > target.max_dim())
    throw ValidationError("adjunction: singular set truncated below the cubical set");
  std::vector<FormalCube> a;
  for (std::size_t x = 0; x < k->size(); ++x) {
    MapTables t;
    for (std::size_t v : real.vertex_class[x]) t.vertices.push_back(f.vertex_image(v));
    for (const ArrowImage& c : real.arrow_class[x])
      t.arrows.push_back(c.is_arrow() ? f.arrow_image(c.index)
                                      : ArrowImage::to_vertex(f.vertex_image(c.index)));
    a.push_back(target.express(k->generator(x).dim, t));
  }
  return CubicalMap(std::move(k), target.presentation_ptr(), std::move(a));
}

QuiverMap adjunction_backward(const Realization& real, const CubicalMap& g,
                              const SingularCubicalSet& target) {
  if (!(g.target() == target.presentation()))
    throw ValidationError("adjunction: cubical map does not land in the singular set");
  const Quiver& q = *real.quiver;
  MapTables t;
  t.vertices.assign(q.vertex_count(), kUnset);
  t.arrows.assign(q.arrow_count(), ArrowImage::to_vertex(kUnset));
  std::vector<char> arrow_set(q.arrow_count(), 0);
  for (std::size_t x = 0; x < g.source().size(); ++x) {
    const MapTables phi = target.evaluate(g.image(x));
    for (std::size_t v = 0; v < phi.vertices.size(); ++v) {
      std::size_t& slot = t.vertices[real.vertex_class[x][v]];
      if (slot != kUnset && slot != phi.vertices[v])
        throw ValidationError("adjunction: cubical map disagrees on a glued vertex");
      slot = phi.vertices[v];
    }
    for (std::size_t a = 0; a < phi.arrows.size(); ++a) {
      const ArrowImage c = real.arrow_class[x][a];
      if (!c.is_arrow()) {
        if (phi.arrows[a].is_arrow())
          throw ValidationError("adjunction: collapsed arrow sent to an arrow");
        continue;
      }
      if (arrow_set[c.index] && t.arrows[c.index] != phi.arrows[a])
        throw ValidationError("adjunction: cubical map disagrees on a glued arrow");
      t.arrows[c.index] = phi.arrows[a];
      arrow_set[c.index] = 1;
    }
  }
  return QuiverMap(real.quiver, target.quiver_ptr(), std::move(t));
}

}  // namespace cubiq
