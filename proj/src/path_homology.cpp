#include "cubiq/path_homology.hpp"

#include <algorithm>

namespace cubiq {

namespace {

std::string combination_label(const std::vector<Rational>& v, const std::vector<PathKey>& keys,
                              int p, const LabelFn& label) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) s += c.get_str() + "*";
    s += label(p, keys[i]);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::vector<std::size_t> OmegaComplex::omega_ranks() const {
  std::vector<std::size_t> r;
  for (const RankKernel& k : omega) r.push_back(k.kernel.size());
  return r;
}

std::vector<Rational> omega_coordinates(const RankKernel& omega, const std::vector<Rational>& v) {
  std::vector<Rational> c;
  for (std::size_t f : omega.free_columns) c.push_back(v[f]);
  std::vector<Rational> back(v.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0)
      for (std::size_t i = 0; i < v.size(); ++i) back[i] += c[j] * omega.kernel[j][i];
  if (back != v) throw Error("chain does not lie in the Omega subspace");
  return c;
}

OmegaComplex build_omega_complex(std::vector<std::vector<PathKey>> allowed,
                                 const BoundaryFn& boundary, bool next_empty,
                                 const LabelFn& label) {
  const int top = static_cast<int>(allowed.size()) - 1;
  OmegaComplex out;
  std::vector<std::map<PathKey, std::size_t>> index(allowed.size());
  for (std::size_t p = 0; p < allowed.size(); ++p)
    for (std::size_t i = 0; i < allowed[p].size(); ++i) index[p][allowed[p][i]] = i;

  // Boundaries of allowed paths in A_{p-1} coordinates, and the kernels.
  std::vector<std::vector<SparseChain>> images(allowed.size());
  for (int p = 0; p <= top; ++p) {
    const auto up = static_cast<std::size_t>(p);
    std::map<PathKey, std::size_t> forbidden;
    for (const PathKey& key : allowed[up]) {
      images[up].push_back(p == 0 ? SparseChain{} : boundary(p, key));
      for (const auto& [face, c] : images[up].back())
        if (c != 0 && !index[up - 1].count(face)) forbidden.emplace(face, forbidden.size());
    }
    ExactMatrix d(forbidden.size(), allowed[up].size());
    for (std::size_t col = 0; col < allowed[up].size(); ++col)
      for (const auto& [face, c] : images[up][col]) {
        auto it = forbidden.find(face);
        if (it != forbidden.end()) d.add(it->second, col, c);
      }
    std::vector<std::size_t> rows(forbidden.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
    out.omega.push_back(restricted_kernel(d, rows));
  }

  std::vector<std::vector<std::string>> basis;
  std::vector<ExactMatrix> bd;
  for (int p = 0; p <= top; ++p) {
    const auto up = static_cast<std::size_t>(p);
    const RankKernel& om = out.omega[up];
    std::vector<std::string> labels;
    for (const auto& v : om.kernel) labels.push_back(combination_label(v, allowed[up], p, label));
    const std::size_t below = p == 0 ? 0 : out.omega[up - 1].kernel.size();
    ExactMatrix d(below, om.kernel.size());
    if (p > 0) {
      for (std::size_t col = 0; col < om.kernel.size(); ++col) {
        std::vector<Rational> image(allowed[up - 1].size());
        SparseChain rest;
        for (std::size_t j = 0; j < allowed[up].size(); ++j) {
          if (om.kernel[col][j] == 0) continue;
          for (const auto& [face, c] : images[up][j]) {
            auto it = index[up - 1].find(face);
            if (it != index[up - 1].end())
              image[it->second] += om.kernel[col][j] * c;
            else
              rest[face] += om.kernel[col][j] * c;
          }
        }
        for (const auto& [face, c] : rest)
          if (c != 0) throw Error("Omega element has a non-allowed boundary term");
        const auto coords = omega_coordinates(out.omega[up - 1], image);
        for (std::size_t r = 0; r < coords.size(); ++r) d.set(r, col, coords[r]);
      }
    }
    basis.push_back(std::move(labels));
    bd.push_back(std::move(d));
  }
  out.complex = ChainComplex(Field::rationals(), std::move(basis), std::move(bd),
                             next_empty ? top : top - 1);
  out.allowed = std::move(allowed);
  return out;
}

std::vector<PathKey> allowed_paths(const Digraph& g, int p) {
  std::vector<PathKey> out;
  if (p < 0) return out;
  const Quiver& q = g.quiver();
  PathKey cur;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    cur.push_back(static_cast<std::int64_t>(v));
    if (static_cast<int>(cur.size()) == p + 1) {
      out.push_back(cur);
    } else {
      std::vector<std::size_t> next;
      for (std::size_t a : q.out_arrows(v)) next.push_back(q.arrow(a).tgt);
      std::sort(next.begin(), next.end());
      for (std::size_t w : next) walk(w);
    }
    cur.pop_back();
  };
  for (std::size_t v = 0; v < q.vertex_count(); ++v) walk(v);
  return out;
}

OmegaComplex path_complex(const Digraph& g, int p_max) {
  if (p_max < 0) throw Error("degree bound must be nonnegative");
  std::vector<std::vector<PathKey>> allowed;
  for (int p = 0; p <= p_max; ++p) allowed.push_back(allowed_paths(g, p));
  const bool next_empty = allowed_paths(g, p_max + 1).empty();
  auto boundary = [](int, const PathKey& path) {
    SparseChain out;
    for (std::size_t q = 0; q < path.size(); ++q) {
      if (q > 0 && q + 1 < path.size() && path[q - 1] == path[q + 1]) continue;
      PathKey face = path;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(q));
      out[face] += q % 2 ? -1 : 1;
    }
    return out;
  };
  const Quiver& q = g.quiver();
  auto label = [&q](int, const PathKey& path) {
    std::string s = "e(";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) s += ",";
      s += q.vertex_id(static_cast<std::size_t>(path[i]));
    }
    return s + ")";
  };
  return build_omega_complex(std::move(allowed), boundary, next_empty, label);
}

ChainMap induced_path_chain_map(const QuiverMap& f, const OmegaComplex& source,
                                const OmegaComplex& target) {
  ChainMap out;
  const std::size_t top = std::min(source.allowed.size(), target.allowed.size());
  for (std::size_t p = 0; p < top; ++p) {
    std::map<PathKey, std::size_t> index;
    for (std::size_t i = 0; i < target.allowed[p].size(); ++i) index[target.allowed[p][i]] = i;
    const RankKernel& om = source.omega[p];
    ExactMatrix m(target.omega[p].kernel.size(), om.kernel.size());
    for (std::size_t col = 0; col < om.kernel.size(); ++col) {
      std::vector<Rational> image(target.allowed[p].size());
      for (std::size_t j = 0; j < source.allowed[p].size(); ++j) {
        if (om.kernel[col][j] == 0) continue;
        PathKey img;
        bool regular = true;
        for (std::int64_t v : source.allowed[p][j]) {
          const auto w = static_cast<std::int64_t>(f.vertex_image(static_cast<std::size_t>(v)));
          if (!img.empty() && img.back() == w) regular = false;
          img.push_back(w);
        }
        if (!regular) continue;
        auto it = index.find(img);
        if (it == index.end()) throw Error("image path is not allowed in the target");
        image[it->second] += om.kernel[col][j];
      }
      const auto coords = omega_coordinates(target.omega[p], image);
      for (std::size_t r = 0; r < coords.size(); ++r) m.set(r, col, coords[r]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace cubiq
