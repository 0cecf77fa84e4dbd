#include "cubiq/cubical.hpp"

#include <algorithm>
#include <functional>

namespace cubiq {

std::vector<int> canonical_degeneracies(std::vector<int> word) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < word.size(); ++t) {
      if (word[t] <= word[t + 1]) {
        const int i = word[t], j = word[t + 1];
        word[t] = j + 1;
        word[t + 1] = i;
        changed = true;
      }
    }
  }
  return word;
}

namespace {

// A word eps_{j_1} ... eps_{j_l} on a cube of dimension m is defined when the
// innermost index fits dimension m + 1, the next one m + 2, and so on.
bool word_fits(const std::vector<int>& word, int base_dim) {
  const int l = static_cast<int>(word.size());
  for (int t = 0; t < l; ++t) {
    const int j = word[static_cast<std::size_t>(t)];
    if (j < 1 || j > base_dim + (l - t)) return false;
  }
  return true;
}

std::string word_text(const std::vector<int>& word) {
  std::string s;
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(word[t]);
  }
  return s;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

CubicalSet CubicalSet::build(std::vector<GeneratorSpec> specs, std::optional<int> truncated_at) {
  std::stable_sort(specs.begin(), specs.end(),
                   [](const GeneratorSpec& a, const GeneratorSpec& b) { return a.dim < b.dim; });
  CubicalSet k;
  k.truncated_at_ = truncated_at;
  for (std::size_t g = 0; g < specs.size(); ++g) {
    const GeneratorSpec& s = specs[g];
    if (s.dim < 0) throw ValidationError("generator '" + s.id + "' has negative dimension");
    if (truncated_at && s.dim > *truncated_at)
      throw ValidationError("generator '" + s.id + "' lies above the truncation bound");
    if (!k.index_.emplace(s.id, g).second)
      throw ValidationError("duplicate generator id '" + s.id + "'");
  }
  for (const GeneratorSpec& s : specs) {
    Generator gen{s.id, s.dim, {}};
    if (s.faces.size() != static_cast<std::size_t>(2 * s.dim))
      throw ValidationError("generator '" + s.id + "' of dimension " + std::to_string(s.dim) +
                            " needs " + std::to_string(2 * s.dim) + " faces, got " +
                            std::to_string(s.faces.size()));
    for (std::size_t f = 0; f < s.faces.size(); ++f) {
      const FaceSpec& face = s.faces[f];
      const std::string where = "generator '" + s.id + "' face " + std::to_string(f / 2 + 1) +
                                (f % 2 ? "+" : "-");
      auto it = k.index_.find(face.gen);
      if (it == k.index_.end())
        throw ValidationError(where + " refers to unknown generator '" + face.gen + "'");
      const int base = specs[it->second].dim;
      if (base + static_cast<int>(face.degens.size()) != s.dim - 1)
        throw ValidationError(where + " has dimension " +
                              std::to_string(base + static_cast<int>(face.degens.size())) +
                              ", expected " + std::to_string(s.dim - 1));
      if (!word_fits(face.degens, base))
        throw ValidationError(where + " has an invalid degeneracy word [" +
                              word_text(face.degens) + "]");
      gen.faces.push_back({it->second, canonical_degeneracies(face.degens)});
    }
    const auto d = static_cast<std::size_t>(s.dim);
    if (k.by_dim_.size() <= d) k.by_dim_.resize(d + 1);
    k.position_.push_back(k.by_dim_[d].size());
    k.by_dim_[d].push_back(k.gens_.size());
    k.gens_.push_back(std::move(gen));
  }
  return k;
}

const std::vector<std::size_t>& CubicalSet::of_dim(int n) const {
  static const std::vector<std::size_t> empty;
  if (n < 0 || static_cast<std::size_t>(n) >= by_dim_.size()) return empty;
  return by_dim_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> CubicalSet::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<GeneratorSpec> CubicalSet::specs() const {
  std::vector<GeneratorSpec> out;
  out.reserve(gens_.size());
  for (const Generator& g : gens_) {
    GeneratorSpec s{g.id, g.dim, {}};
    for (const FormalCube& f : g.faces) s.faces.push_back({gens_[f.gen].id, f.degens});
    out.push_back(std::move(s));
  }
  return out;
}

std::string CubicalSet::describe(const FormalCube& c) const {
  if (c.degens.empty()) return gens_[c.gen].id;
  return "eps[" + word_text(c.degens) + "](" + gens_[c.gen].id + ")";
}

bool operator==(const CubicalSet& a, const CubicalSet& b) {
  if (a.truncated_at_ != b.truncated_at_ || a.gens_.size() != b.gens_.size()) return false;
  for (std::size_t g = 0; g < a.gens_.size(); ++g) {
    const auto& x = a.gens_[g];
    const auto& y = b.gens_[g];
    if (x.id != y.id || x.dim != y.dim || x.faces != y.faces) return false;
  }
  return true;
}

FormalCube canonical_face(const CubicalSet& k, const FormalCube& c, int i, int alpha) {
  const int n = k.dim(c);
  if (i < 1 || i > n || (alpha != 0 && alpha != 1))
    throw Error("face index (" + std::to_string(i) + "," + std::to_string(alpha) +
                ") out of range for a cube of dimension " + std::to_string(n));
  std::vector<int> prefix;
  int cur = i;
  for (std::size_t t = 0; t < c.degens.size(); ++t) {
    const int j = c.degens[t];
    if (cur < j) {
      prefix.push_back(j - 1);
    } else if (cur > j) {
      prefix.push_back(j);
      --cur;
    } else {
      std::vector<int> rest(c.degens.begin() + static_cast<std::ptrdiff_t>(t) + 1,
                            c.degens.end());
      return {c.gen, canonical_degeneracies(concat(prefix, rest))};
    }
  }
  const FormalCube& f = k.face(c.gen, cur, alpha);
  return {f.gen, canonical_degeneracies(concat(prefix, f.degens))};
}

FormalCube degenerate(const CubicalSet& k, const FormalCube& c, int i) {
  const int n = k.dim(c);
  if (i < 1 || i > n + 1)
    throw Error("degeneracy index " + std::to_string(i) + " out of range for dimension " +
                std::to_string(n));
  return {c.gen, canonical_degeneracies(concat({i}, c.degens))};
}

ValidationReport validate_cubical(const CubicalSet& k) {
  ValidationReport report;
  for (std::size_t g = 0; g < k.size(); ++g) {
    const int n = k.generator(g).dim;
    if (n < 2) continue;
    const FormalCube self{g, {}};
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            FormalCube lhs = canonical_face(k, canonical_face(k, self, j, b), i, a);
            FormalCube rhs = canonical_face(k, canonical_face(k, self, i, a), j - 1, b);
            if (lhs != rhs)
              report.violations.push_back(
                  "generator '" + k.generator(g).id + "': d_" + std::to_string(i) + "^" +
                  std::to_string(a) + " d_" + std::to_string(j) + "^" + std::to_string(b) +
                  " = " + k.describe(lhs) + " but d_" + std::to_string(j - 1) + "^" +
                  std::to_string(b) + " d_" + std::to_string(i) + "^" + std::to_string(a) +
                  " = " + k.describe(rhs));
          }
  }
  return report;
}

CubicalSet skeleton(const CubicalSet& k, int q) {
  std::vector<GeneratorSpec> specs;
  for (GeneratorSpec& s : k.specs())
    if (s.dim <= q) specs.push_back(std::move(s));
  std::optional<int> trunc;
  if (k.truncated_at() && q > *k.truncated_at()) trunc = k.truncated_at();
  return CubicalSet::build(std::move(specs), trunc);
}

bool is_simple_cubical(const CubicalSet& k) {
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e : k.of_dim(1)) {
    const std::size_t start = k.face(e, 1, 0).gen;
    const std::size_t end = k.face(e, 1, 1).gen;
    if (start == end) return false;
    seen.push_back({end, start});
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

CubicalMap::CubicalMap(std::shared_ptr<const CubicalSet> source,
                       std::shared_ptr<const CubicalSet> target,
                       std::vector<FormalCube> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_->size())
    throw ValidationError("cubical map assigns " + std::to_string(assignment_.size()) +
                          " images to " + std::to_string(source_->size()) + " generators");
  for (std::size_t g = 0; g < assignment_.size(); ++g) {
    FormalCube& c = assignment_[g];
    if (c.gen >= target_->size()) throw ValidationError("cubical map image out of range");
    if (!word_fits(c.degens, target_->generator(c.gen).dim))
      throw ValidationError("cubical map image has an invalid degeneracy word");
    c.degens = canonical_degeneracies(std::move(c.degens));
    if (target_->dim(c) != source_->generator(g).dim)
      throw ValidationError("cubical map changes the dimension of '" +
                            source_->generator(g).id + "'");
  }
}

CubicalMap CubicalMap::identity(std::shared_ptr<const CubicalSet> k) {
  std::vector<FormalCube> a;
  for (std::size_t g = 0; g < k->size(); ++g) a.push_back({g, {}});
  return CubicalMap(k, k, std::move(a));
}

FormalCube CubicalMap::apply(const FormalCube& c) const {
  const FormalCube& img = assignment_[c.gen];
  return {img.gen, canonical_degeneracies(concat(c.degens, img.degens))};
}

CubicalMap compose(const CubicalMap& g, const CubicalMap& f) {
  if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source()))
    throw ValidationError("cannot compose cubical maps: target and source differ");
  std::vector<FormalCube> a;
  a.reserve(f.source().size());
  for (std::size_t x = 0; x < f.source().size(); ++x) a.push_back(g.apply(f.image(x)));
  return CubicalMap(f.source_ptr(), g.target_ptr(), std::move(a));
}

ValidationReport validate_cubical_map(const CubicalMap& f) {
  ValidationReport report;
  const CubicalSet& k = f.source();
  const CubicalSet& t = f.target();
  for (std::size_t g = 0; g < k.size(); ++g) {
    const int n = k.generator(g).dim;
    for (int i = 1; i <= n; ++i)
      for (int a = 0; a < 2; ++a) {
        FormalCube lhs = canonical_face(t, f.image(g), i, a);
        FormalCube rhs = f.apply(k.face(g, i, a));
        if (lhs != rhs)
          report.violations.push_back("generator '" + k.generator(g).id + "': face (" +
                                      std::to_string(i) + "," + std::to_string(a) +
                                      ") of the image is " + t.describe(lhs) +
                                      " but the image of the face is " + t.describe(rhs));
      }
  }
  return report;
}

std::vector<FormalCube> all_cubes(const CubicalSet& k, int n) {
  std::vector<FormalCube> out;
  for (int m = 0; m <= n; ++m) {
    const int l = n - m;
    // Strictly decreasing words of length l over {1..n}.
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int hi) {
      if (static_cast<int>(cur.size()) == l) {
        words.push_back(cur);
        return;
      }
      for (int j = hi; j >= 1; --j) {
        cur.push_back(j);
        grow(j - 1);
        cur.pop_back();
      }
    };
    grow(n);
    for (std::size_t g : k.of_dim(m))
      for (const auto& w : words) out.push_back({g, w});
  }
  return out;
}

std::vector<CubicalMap> enumerate_cubical_maps(std::shared_ptr<const CubicalSet> source,
                                               std::shared_ptr<const CubicalSet> target) {
  if (target->truncated_at() && *target->truncated_at() < source->max_dim())
    throw Error("target truncation is below the source dimension");
  std::vector<std::vector<FormalCube>> candidates;
  for (int n = 0; n <= source->max_dim(); ++n) candidates.push_back(all_cubes(*target, n));

  std::vector<CubicalMap> out;
  std::vector<FormalCube> assignment(source->size());
  auto image_of = [&](const FormalCube& c) {
    const FormalCube& img = assignment[c.gen];
    return FormalCube{img.gen, canonical_degeneracies(concat(c.degens, img.degens))};
  };
  std::function<void(std::size_t)> extend = [&](std::size_t g) {
    if (g == source->size()) {
      out.emplace_back(source, target, assignment);
      return;
    }
    const int n = source->generator(g).dim;
    for (const FormalCube& cand : candidates[static_cast<std::size_t>(n)]) {
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i)
        for (int a = 0; a < 2 && ok; ++a)
          ok = canonical_face(*target, cand, i, a) == image_of(source->face(g, i, a));
      if (!ok) continue;
      assignment[g] = cand;
      extend(g + 1);
    }
  };
  extend(0);
  return out;
}

}  // namespace cubiq
