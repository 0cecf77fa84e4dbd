#include "cubiq/quiver.hpp"

#include <algorithm>
#include <tuple>

#include "cubiq/union_find.hpp"

namespace cubiq {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  vertex_index_.reserve(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!vertex_index_.emplace(vertices_[v], v).second)
      throw ValidationError("duplicate vertex id '" + vertices_[v] + "'");
  }
  out_.assign(vertices_.size(), {});
  arrow_index_.reserve(arrows_.size());
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = arrows_[a];
    if (!arrow_index_.emplace(arr.id, a).second)
      throw ValidationError("duplicate arrow id '" + arr.id + "'");
    if (arr.src >= vertices_.size() || arr.tgt >= vertices_.size())
      throw ValidationError("arrow '" + arr.id + "' has an endpoint out of range");
    out_[arr.src].push_back(a);
  }
}

Quiver Quiver::build(std::vector<std::string> vertices,
                     const std::vector<ArrowSpec>& arrows) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!index.emplace(vertices[v], v).second)
      throw ValidationError("duplicate vertex id '" + vertices[v] + "'");
  }
  std::vector<Arrow> resolved;
  resolved.reserve(arrows.size());
  for (const ArrowSpec& spec : arrows) {
    auto s = index.find(spec.src);
    auto t = index.find(spec.tgt);
    if (s == index.end())
      throw ValidationError("arrow '" + spec.id + "' starts at unknown vertex '" +
                            spec.src + "'");
    if (t == index.end())
      throw ValidationError("arrow '" + spec.id + "' ends at unknown vertex '" +
                            spec.tgt + "'");
    resolved.push_back({spec.id, s->second, t->second});
  }
  return Quiver(std::move(vertices), std::move(resolved));
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view id) const {
  auto it = arrow_index_.find(std::string(id));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::multiplicity(std::size_t v, std::size_t w) const {
  std::size_t n = 0;
  for (std::size_t a : out_[v])
    if (arrows_[a].tgt == w) ++n;
  return n;
}

std::size_t Quiver::max_multiplicity() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    std::unordered_map<std::size_t, std::size_t> count;
    for (std::size_t a : out_[v]) best = std::max(best, ++count[arrows_[a].tgt]);
  }
  return best;
}

namespace {

std::uint64_t pair_key(std::size_t v, std::size_t w) {
  return (static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint64_t>(w);
}

}  // namespace

std::optional<SimplicityWitness> simplicity_witness(const Quiver& q) {
  std::unordered_map<std::uint64_t, std::size_t> seen;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (arr.src == arr.tgt) return SimplicityWitness{a, std::nullopt};
    auto [it, fresh] = seen.emplace(pair_key(arr.src, arr.tgt), a);
    if (!fresh) return SimplicityWitness{it->second, a};
  }
  return std::nullopt;
}

Digraph::Digraph(Quiver q) : quiver_(std::move(q)) {
  for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
    const Arrow& arr = quiver_.arrow(a);
    pairs_.emplace(pair_key(arr.src, arr.tgt), a);
  }
}

std::optional<std::size_t> Digraph::arrow_between(std::size_t v, std::size_t w) const {
  auto it = pairs_.find(pair_key(v, w));
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

Digraph to_digraph(Quiver q) {
  if (auto w = simplicity_witness(q)) {
    if (!w->second)
      throw NotSimpleError("quiver is not simple: arrow '" + q.arrow(w->first).id +
                               "' is a loop",
                           *w);
    throw NotSimpleError("quiver is not simple: arrows '" + q.arrow(w->first).id +
                             "' and '" + q.arrow(*w->second).id + "' are parallel",
                         *w);
  }
  return Digraph(std::move(q));
}

MapTables compose(const MapTables& outer, const MapTables& inner) {
  MapTables out;
  out.vertices.reserve(inner.vertices.size());
  for (std::size_t v : inner.vertices) out.vertices.push_back(outer.vertices[v]);
  out.arrows.reserve(inner.arrows.size());
  for (const ArrowImage& img : inner.arrows) {
    if (img.is_arrow())
      out.arrows.push_back(outer.arrows[img.index]);
    else
      out.arrows.push_back(ArrowImage::to_vertex(outer.vertices[img.index]));
  }
  return out;
}

std::optional<std::string> map_defect(const Quiver& source, const Quiver& target,
                                      const MapTables& t) {
  if (t.vertices.size() != source.vertex_count())
    return "vertex table has wrong size";
  if (t.arrows.size() != source.arrow_count()) return "arrow table has wrong size";
  for (std::size_t v : t.vertices)
    if (v >= target.vertex_count()) return "vertex image out of range";
  for (std::size_t a = 0; a < source.arrow_count(); ++a) {
    const Arrow& arr = source.arrow(a);
    std::size_t fs = t.vertices[arr.src];
    std::size_t ft = t.vertices[arr.tgt];
    const ArrowImage& img = t.arrows[a];
    if (img.is_arrow()) {
      if (img.index >= target.arrow_count()) return "arrow image out of range";
      const Arrow& b = target.arrow(img.index);
      if (b.src != fs || b.tgt != ft)
        return "arrow '" + arr.id + "' is sent to '" + b.id +
               "' whose endpoints do not match";
    } else {
      if (img.index >= target.vertex_count()) return "vertex image out of range";
      if (fs != img.index || ft != img.index)
        return "arrow '" + arr.id + "' is collapsed to a vertex other than its endpoint images";
    }
  }
  return std::nullopt;
}

std::size_t MapTablesHash::operator()(const MapTables& t) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (std::size_t v : t.vertices) mix(v);
  for (const ArrowImage& a : t.arrows) mix(a.index * 2 + (a.is_arrow() ? 0 : 1));
  return h;
}

QuiverMap::QuiverMap(std::shared_ptr<const Quiver> source,
                     std::shared_ptr<const Quiver> target, MapTables tables)
    : source_(std::move(source)), target_(std::move(target)), tables_(std::move(tables)) {
  if (auto defect = map_defect(*source_, *target_, tables_))
    throw ValidationError("not a quiver map: " + *defect);
}

QuiverMap QuiverMap::identity(std::shared_ptr<const Quiver> q) {
  MapTables t;
  for (std::size_t v = 0; v < q->vertex_count(); ++v) t.vertices.push_back(v);
  for (std::size_t a = 0; a < q->arrow_count(); ++a)
    t.arrows.push_back(ArrowImage::to_arrow(a));
  return QuiverMap(q, q, std::move(t));
}

namespace {

bool same_quiver(const std::shared_ptr<const Quiver>& a,
                 const std::shared_ptr<const Quiver>& b) {
  return a == b || *a == *b;
}

}  // namespace

bool operator==(const QuiverMap& a, const QuiverMap& b) {
  return a.tables_ == b.tables_ && same_quiver(a.source_, b.source_) &&
         same_quiver(a.target_, b.target_);
}

QuiverMap compose(const QuiverMap& g, const QuiverMap& f) {
  if (!same_quiver(f.target_ptr(), g.source_ptr()))
    throw ValidationError("cannot compose quiver maps: target and source differ");
  return QuiverMap(f.source_ptr(), g.target_ptr(), compose(g.tables(), f.tables()));
}

QuiverMap digraph_map(std::shared_ptr<const Quiver> g, std::shared_ptr<const Quiver> h,
                      std::vector<std::size_t> vertex_map) {
  if (vertex_map.size() != g->vertex_count())
    throw ValidationError("digraph map: vertex table has wrong size");
  MapTables t;
  t.vertices = std::move(vertex_map);
  for (std::size_t v : t.vertices)
    if (v >= h->vertex_count()) throw ValidationError("digraph map: vertex out of range");
  for (const Arrow& arr : g->arrows()) {
    std::size_t fs = t.vertices[arr.src];
    std::size_t ft = t.vertices[arr.tgt];
    if (fs == ft) {
      t.arrows.push_back(ArrowImage::to_vertex(fs));
      continue;
    }
    auto it = std::find_if(h->out_arrows(fs).begin(), h->out_arrows(fs).end(),
                           [&](std::size_t b) { return h->arrow(b).tgt == ft; });
    if (it == h->out_arrows(fs).end())
      throw ValidationError("not a digraph map: arrow '" + arr.id + "' has no image");
    t.arrows.push_back(ArrowImage::to_arrow(*it));
  }
  return QuiverMap(std::move(g), std::move(h), std::move(t));
}

Quiver box_product(const Quiver& a, const Quiver& b) {
  const std::size_t nb = b.vertex_count();
  std::vector<std::string> vertices;
  vertices.reserve(a.vertex_count() * nb);
  for (const std::string& x : a.vertices())
    for (const std::string& y : b.vertices()) vertices.push_back("(" + x + "," + y + ")");
  std::vector<Arrow> arrows;
  arrows.reserve(a.vertex_count() * b.arrow_count() + a.arrow_count() * nb);
  for (std::size_t x = 0; x < a.vertex_count(); ++x)
    for (const Arrow& beta : b.arrows())
      arrows.push_back({"(" + a.vertex_id(x) + "," + beta.id + ")", x * nb + beta.src,
                        x * nb + beta.tgt});
  for (const Arrow& alpha : a.arrows())
    for (std::size_t y = 0; y < nb; ++y)
      arrows.push_back({"[" + alpha.id + "," + b.vertex_id(y) + "]", alpha.src * nb + y,
                        alpha.tgt * nb + y});
  return Quiver(std::move(vertices), std::move(arrows));
}

QuiverMap box_maps(const QuiverMap& f, const QuiverMap& g) {
  const Quiver& a = f.source();
  const Quiver& b = g.source();
  const Quiver& a2 = f.target();
  const Quiver& b2 = g.target();
  auto src = std::make_shared<const Quiver>(box_product(a, b));
  auto tgt = std::make_shared<const Quiver>(box_product(a2, b2));
  const std::size_t nb = b.vertex_count(), nb2 = b2.vertex_count();
  const std::size_t eb = b.arrow_count(), eb2 = b2.arrow_count();
  MapTables t;
  for (std::size_t x = 0; x < a.vertex_count(); ++x)
    for (std::size_t y = 0; y < nb; ++y)
      t.vertices.push_back(f.vertex_image(x) * nb2 + g.vertex_image(y));
  for (std::size_t x = 0; x < a.vertex_count(); ++x) {
    const std::size_t fx = f.vertex_image(x);
    for (std::size_t beta = 0; beta < eb; ++beta) {
      ArrowImage gi = g.arrow_image(beta);
      t.arrows.push_back(gi.is_arrow() ? ArrowImage::to_arrow(fx * eb2 + gi.index)
                                       : ArrowImage::to_vertex(fx * nb2 + gi.index));
    }
  }
  const std::size_t offset2 = a2.vertex_count() * eb2;
  for (std::size_t alpha = 0; alpha < a.arrow_count(); ++alpha) {
    ArrowImage fi = f.arrow_image(alpha);
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t gy = g.vertex_image(y);
      t.arrows.push_back(fi.is_arrow() ? ArrowImage::to_arrow(offset2 + fi.index * nb2 + gy)
                                       : ArrowImage::to_vertex(fi.index * nb2 + gy));
    }
  }
  return QuiverMap(std::move(src), std::move(tgt), std::move(t));
}

Quotient quotient_by_map(const QuiverMap& f) {
  const Quiver& q = f.source();
  const Quiver& q2 = f.target();
  const std::size_t nv = q.vertex_count(), nv2 = q2.vertex_count();
  const std::size_t ne = q.arrow_count(), ne2 = q2.arrow_count();

  // Elements: source items first, then target items.
  UnionFind vuf(nv + nv2);
  for (std::size_t v = 0; v < nv; ++v) vuf.unite(v, nv + f.vertex_image(v));
  UnionFind auf(ne + ne2);
  std::vector<bool> collapsed(ne, false);
  for (std::size_t a = 0; a < ne; ++a) {
    ArrowImage img = f.arrow_image(a);
    if (img.is_arrow())
      auf.unite(a, ne + img.index);
    else
      collapsed[a] = true;
  }

  // Representative: smallest (side, index) with the target side first.
  auto rank_of = [](std::size_t elem, std::size_t n_source) {
    return elem >= n_source ? elem - n_source : n_source + elem + (std::size_t{1} << 40);
  };

  Quotient out;
  std::unordered_map<std::size_t, std::size_t> vroot_best;
  for (std::size_t e = 0; e < nv + nv2; ++e) {
    std::size_t r = vuf.find(e);
    auto [it, fresh] = vroot_best.emplace(r, e);
    if (!fresh && rank_of(e, nv) < rank_of(it->second, nv)) it->second = e;
  }
  std::vector<std::pair<std::size_t, std::size_t>> vclasses;  // (rank, root)
  for (auto [root, best] : vroot_best) vclasses.push_back({rank_of(best, nv), root});
  std::sort(vclasses.begin(), vclasses.end());
  std::unordered_map<std::size_t, std::size_t> vclass_index;
  std::vector<std::string> vertices;
  for (auto [rank, root] : vclasses) {
    vclass_index[root] = vertices.size();
    std::size_t best = vroot_best[root];
    vertices.push_back(best >= nv ? q2.vertex_id(best - nv) : q.vertex_id(best));
  }
  for (std::size_t v = 0; v < nv; ++v)
    out.source_vertex_class.push_back(vclass_index[vuf.find(v)]);
  for (std::size_t v = 0; v < nv2; ++v)
    out.target_vertex_class.push_back(vclass_index[vuf.find(nv + v)]);

  std::unordered_map<std::size_t, std::size_t> aroot_best;
  for (std::size_t e = 0; e < ne + ne2; ++e) {
    if (e < ne && collapsed[e]) continue;
    std::size_t r = auf.find(e);
    auto [it, fresh] = aroot_best.emplace(r, e);
    if (!fresh && rank_of(e, ne) < rank_of(it->second, ne)) it->second = e;
  }
  std::vector<std::pair<std::size_t, std::size_t>> aclasses;
  for (auto [root, best] : aroot_best) aclasses.push_back({rank_of(best, ne), root});
  std::sort(aclasses.begin(), aclasses.end());
  std::unordered_map<std::size_t, std::size_t> aclass_index;
  std::vector<Arrow> arrows;
  for (auto [rank, root] : aclasses) {
    aclass_index[root] = arrows.size();
    std::size_t best = aroot_best[root];
    if (best >= ne) {
      const Arrow& arr = q2.arrow(best - ne);
      arrows.push_back({arr.id, out.target_vertex_class[arr.src],
                        out.target_vertex_class[arr.tgt]});
    } else {
      const Arrow& arr = q.arrow(best);
      arrows.push_back({arr.id, out.source_vertex_class[arr.src],
                        out.source_vertex_class[arr.tgt]});
    }
  }
  for (std::size_t a = 0; a < ne; ++a) {
    if (collapsed[a])
      out.source_arrow_class.push_back(std::nullopt);
    else
      out.source_arrow_class.push_back(aclass_index[auf.find(a)]);
  }
  for (std::size_t a = 0; a < ne2; ++a)
    out.target_arrow_class.push_back(aclass_index[auf.find(ne + a)]);
  out.quiver = Quiver(std::move(vertices), std::move(arrows));
  return out;
}

void enumerate_quiver_maps(const Quiver& source, const Quiver& target,
                           const std::function<bool(const MapTables&)>& visit) {
  const std::size_t nv = source.vertex_count();
  const std::size_t nt = target.vertex_count();
  if (nv > 0 && nt == 0) return;

  // Target arrows per ordered pair, in index order.
  std::vector<std::vector<std::size_t>> between(nt * nt);
  for (std::size_t b = 0; b < target.arrow_count(); ++b)
    between[target.arrow(b).src * nt + target.arrow(b).tgt].push_back(b);

  // Arrows checked once their later endpoint is assigned.
  std::vector<std::vector<std::size_t>> closing(nv);
  for (std::size_t a = 0; a < source.arrow_count(); ++a) {
    const Arrow& arr = source.arrow(a);
    closing[std::max(arr.src, arr.tgt)].push_back(a);
  }

  MapTables tables;
  tables.vertices.assign(nv, 0);
  tables.arrows.assign(source.arrow_count(), ArrowImage{});
  bool stop = false;

  auto option_count = [&](std::size_t a) {
    const Arrow& arr = source.arrow(a);
    std::size_t fs = tables.vertices[arr.src], ft = tables.vertices[arr.tgt];
    return between[fs * nt + ft].size() + (fs == ft ? 1 : 0);
  };
  auto option = [&](std::size_t a, std::size_t k) {
    const Arrow& arr = source.arrow(a);
    std::size_t fs = tables.vertices[arr.src], ft = tables.vertices[arr.tgt];
    if (fs == ft) {
      if (k == 0) return ArrowImage::to_vertex(fs);
      --k;
    }
    return ArrowImage::to_arrow(between[fs * nt + ft][k]);
  };

  auto emit_arrow_choices = [&]() {
    const std::size_t ne = source.arrow_count();
    std::vector<std::size_t> counts(ne), choice(ne, 0);
    for (std::size_t a = 0; a < ne; ++a) {
      counts[a] = option_count(a);
      if (counts[a] == 0) return;
      tables.arrows[a] = option(a, 0);
    }
    while (true) {
      if (!visit(tables)) {
        stop = true;
        return;
      }
      // Odometer with the last arrow varying fastest.
      std::size_t a = ne;
      while (a > 0) {
        --a;
        if (++choice[a] < counts[a]) {
          tables.arrows[a] = option(a, choice[a]);
          break;
        }
        choice[a] = 0;
        tables.arrows[a] = option(a, 0);
        if (a == 0) return;
      }
      if (ne == 0) return;
    }
  };

  std::function<void(std::size_t)> assign = [&](std::size_t v) {
    if (stop) return;
    if (v == nv) {
      emit_arrow_choices();
      return;
    }
    for (std::size_t x = 0; x < nt && !stop; ++x) {
      tables.vertices[v] = x;
      bool ok = true;
      for (std::size_t a : closing[v]) {
        if (option_count(a) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) assign(v + 1);
    }
  };
  assign(0);
}

std::vector<MapTables> all_quiver_maps(const Quiver& source, const Quiver& target) {
  std::vector<MapTables> out;
  enumerate_quiver_maps(source, target, [&](const MapTables& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Quiver& a, const Quiver& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.arrow_count() != b.arrow_count()) return std::nullopt;

  auto multiplicities = [](const Quiver& q) {
    const std::size_t m = q.vertex_count();
    std::vector<std::size_t> mu(m * m, 0);
    for (const Arrow& arr : q.arrows()) ++mu[arr.src * m + arr.tgt];
    return mu;
  };
  const std::vector<std::size_t> ma = multiplicities(a), mb = multiplicities(b);

  auto signature = [n](const std::vector<std::size_t>& mu, std::size_t v) {
    std::vector<std::size_t> outs, ins;
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v) continue;
      outs.push_back(mu[v * n + w]);
      ins.push_back(mu[w * n + v]);
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    return std::make_tuple(mu[v * n + v], outs, ins);
  };
  std::vector<decltype(signature(ma, 0))> sa, sb;
  for (std::size_t v = 0; v < n; ++v) {
    sa.push_back(signature(ma, v));
    sb.push_back(signature(mb, v));
  }

  std::vector<std::size_t> image(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x] || sa[v] != sb[x]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        ok = ma[v * n + u] == mb[x * n + image[u]] && ma[u * n + v] == mb[image[u] * n + x];
      }
      if (!ok) continue;
      image[v] = x;
      used[x] = true;
      if (extend(v + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

std::size_t connected_components(const Quiver& q) {
  UnionFind uf(q.vertex_count());
  std::size_t count = q.vertex_count();
  for (const Arrow& arr : q.arrows())
    if (uf.unite(arr.src, arr.tgt)) --count;
  return count;
}

}  // namespace cubiq
