#include "cubiq/mpath_homology.hpp"

#include <algorithm>
#include <functional>

namespace cubiq {

Completion completion(const Quiver& q, const CompletionConfig& cfg) {
  const std::size_t mu = q.max_multiplicity();
  const std::size_t m = cfg.power ? *cfg.power : std::max<std::size_t>(mu, 1);
  if (m < mu || m == 0)
    throw ValidationError("power " + std::to_string(m) + " is below the arrow multiplicity " +
                          std::to_string(mu));
  const std::size_t nv = q.vertex_count();
  std::vector<Arrow> arrows = q.arrows();
  Completion c;
  c.original_arrows = arrows.size();
  c.power = m;
  c.between.assign(nv, std::vector<std::vector<std::size_t>>(nv));
  for (std::size_t a = 0; a < arrows.size(); ++a) c.between[arrows[a].src][arrows[a].tgt].push_back(a);
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = 0; w < nv; ++w) {
      if (v == w && !cfg.include_loops) continue;
      for (std::size_t slot = c.between[v][w].size(); slot < m; ++slot) {
        c.between[v][w].push_back(arrows.size());
        arrows.push_back({"~" + q.vertex_id(v) + ">" + q.vertex_id(w) + "#" + std::to_string(slot),
                          v, w});
      }
    }
  c.quiver = std::make_shared<const Quiver>(q.vertices(), std::move(arrows));
  return c;
}

std::vector<PathKey> arrow_paths(const Quiver& q, int n) {
  std::vector<PathKey> out;
  if (n < 0) return out;
  if (n == 0) {
    for (std::size_t v = 0; v < q.vertex_count(); ++v) out.push_back({static_cast<std::int64_t>(v)});
    return out;
  }
  PathKey cur;
  std::function<void(std::size_t)> extend = [&](std::size_t a) {
    cur.push_back(static_cast<std::int64_t>(a));
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
    } else {
      for (std::size_t b : q.out_arrows(q.arrow(a).tgt)) extend(b);
    }
    cur.pop_back();
  };
  for (std::size_t a = 0; a < q.arrow_count(); ++a) extend(a);
  return out;
}

SparseChain completion_boundary(const Completion& c, int n, const PathKey& path) {
  SparseChain out;
  if (n == 0) return out;
  const Quiver& q = *c.quiver;
  const Rational m(static_cast<long>(c.power));
  auto arrow = [&](std::int64_t a) -> const Arrow& { return q.arrow(static_cast<std::size_t>(a)); };
  if (n == 1) {
    out[{static_cast<std::int64_t>(arrow(path[0]).tgt)}] += m;
    out[{static_cast<std::int64_t>(arrow(path[0]).src)}] -= m;
    return out;
  }
  out[PathKey(path.begin() + 1, path.end())] += m;
  out[PathKey(path.begin(), path.end() - 1)] += (n % 2 ? -m : m);
  for (int i = 1; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const Rational sign = i % 2 ? -1 : 1;
    for (std::size_t merged : c.between[arrow(path[ui - 1]).src][arrow(path[ui]).tgt]) {
      PathKey face(path.begin(), path.begin() + i - 1);
      face.push_back(static_cast<std::int64_t>(merged));
      face.insert(face.end(), path.begin() + i + 1, path.end());
      out[face] += sign;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

MPathComplex mpath_complex(const Quiver& q, const CompletionConfig& cfg, int p_max) {
  if (p_max < 0) throw Error("degree bound must be nonnegative");
  MPathComplex out{completion(q, cfg), {}};
  std::vector<std::vector<PathKey>> allowed;
  for (int p = 0; p <= p_max; ++p) allowed.push_back(arrow_paths(q, p));
  const bool next_empty = arrow_paths(q, p_max + 1).empty();
  const Completion& c = out.completion;
  auto boundary = [&c](int p, const PathKey& path) { return completion_boundary(c, p, path); };
  auto label = [&q](int p, const PathKey& path) {
    std::string s = "(";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) s += ",";
      const auto x = static_cast<std::size_t>(path[i]);
      s += p == 0 ? q.vertex_id(x) : q.arrow(x).id;
    }
    return s + ")";
  };
  out.omega = build_omega_complex(std::move(allowed), boundary, next_empty, label);
  return out;
}

bool mpath_boundary_squared_zero(const Completion& c, int max_len, bool whole_completion) {
  const Quiver& full = *c.quiver;
  for (int n = 2; n <= max_len; ++n) {
    for (const PathKey& path : arrow_paths(full, n)) {
      if (!whole_completion) {
        bool original = true;
        for (std::int64_t a : path) original = original && static_cast<std::size_t>(a) < c.original_arrows;
        if (!original) continue;
      }
      SparseChain twice;
      for (const auto& [face, x] : completion_boundary(c, n, path))
        for (const auto& [face2, y] : completion_boundary(c, n - 1, face)) twice[face2] += x * y;
      for (const auto& [key, v] : twice)
        if (v != 0) return false;
    }
  }
  return true;
}

}  // namespace cubiq
