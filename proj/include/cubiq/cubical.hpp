#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cubiq/error.hpp"

namespace cubiq {

/**
 * A cube eps_{j_1} ... eps_{j_l}(g) of a presented cubical set: a
 * nondegenerate generator g and a degeneracy word written outermost first.
 * In canonical form the word is strictly decreasing, so structural equality
 * is equality of cubes.
 */
struct FormalCube {
  std::size_t gen = 0;
  std::vector<int> degens;

  bool degenerate() const { return !degens.empty(); }
  friend auto operator<=>(const FormalCube&, const FormalCube&) = default;
};

/// Normal form of a degeneracy word under eps_i eps_j = eps_{j+1} eps_i
/// (i <= j).
std::vector<int> canonical_degeneracies(std::vector<int> word);

/// Face of a generator as written in files: target generator id and its
/// degeneracy word.
struct FaceSpec {
  std::string gen;
  std::vector<int> degens;
};

struct GeneratorSpec {
  std::string id;
  int dim = 0;
  /// 2 * dim entries; entry 2(i-1) + alpha holds the face (i, alpha).
  std::vector<FaceSpec> faces;
};

/**
 * Finitely presented cubical set: nondegenerate generators per dimension and
 * their faces as (possibly degenerate) formal cubes. Degenerate cubes are
 * never stored.
 *
 * A presentation may carry a truncation bound: the singular cubical set of a
 * quiver is infinite, and only its generators up to that dimension are
 * present.
 */
class CubicalSet {
 public:
  struct Generator {
    std::string id;
    int dim = 0;
    std::vector<FormalCube> faces;
  };

  CubicalSet() = default;

  /// Resolves face references and checks dimensions and degeneracy words.
  /// Generators are stored ordered by dimension, stable within a dimension.
  /// The cubical identities are not checked here; see validate_cubical.
  static CubicalSet build(std::vector<GeneratorSpec> specs,
                          std::optional<int> truncated_at = std::nullopt);

  std::size_t size() const { return gens_.size(); }
  const Generator& generator(std::size_t g) const { return gens_[g]; }
  const std::vector<Generator>& generators() const { return gens_; }
  /// Generators of dimension n (empty beyond the top dimension).
  const std::vector<std::size_t>& of_dim(int n) const;
  /// -1 for the empty presentation.
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::optional<std::size_t> find(std::string_view id) const;
  /// Position of generator g among the generators of its dimension.
  std::size_t position(std::size_t g) const { return position_[g]; }

  int dim(const FormalCube& c) const {
    return gens_[c.gen].dim + static_cast<int>(c.degens.size());
  }
  /// Stored face (i, alpha) of a generator, 1 <= i <= dim, alpha in {0, 1}.
  const FormalCube& face(std::size_t g, int i, int alpha) const {
    return gens_[g].faces[static_cast<std::size_t>(2 * (i - 1) + alpha)];
  }

  std::optional<int> truncated_at() const { return truncated_at_; }

  std::vector<GeneratorSpec> specs() const;
  std::string describe(const FormalCube& c) const;

  friend bool operator==(const CubicalSet& a, const CubicalSet& b);

 private:
  std::vector<Generator> gens_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::vector<std::size_t> position_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<int> truncated_at_;
};

/// Face d_i^alpha of a formal cube, commuted past its degeneracies and
/// returned in canonical form. Throws on an index out of range.
FormalCube canonical_face(const CubicalSet& k, const FormalCube& c, int i, int alpha);

/// eps_i applied to a formal cube, 1 <= i <= dim(c) + 1.
FormalCube degenerate(const CubicalSet& k, const FormalCube& c, int i);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks d_i^a d_j^b = d_{j-1}^b d_i^a (i < j) on every generator.
ValidationReport validate_cubical(const CubicalSet& k);

/// Generators of dimension <= q with their faces.
CubicalSet skeleton(const CubicalSet& k, int q);

/// Every 1-generator has distinct endpoints and no two share the ordered
/// endpoint pair.
bool is_simple_cubical(const CubicalSet& k);

/**
 * Morphism of presented cubical sets, determined by the images of the
 * generators. Images are formal cubes of the same dimension in the target.
 */
class CubicalMap {
 public:
  CubicalMap(std::shared_ptr<const CubicalSet> source,
             std::shared_ptr<const CubicalSet> target,
             std::vector<FormalCube> assignment);

  static CubicalMap identity(std::shared_ptr<const CubicalSet> k);

  const CubicalSet& source() const { return *source_; }
  const CubicalSet& target() const { return *target_; }
  const std::shared_ptr<const CubicalSet>& source_ptr() const { return source_; }
  const std::shared_ptr<const CubicalSet>& target_ptr() const { return target_; }
  const FormalCube& image(std::size_t g) const { return assignment_[g]; }
  const std::vector<FormalCube>& assignment() const { return assignment_; }

  /// Image of an arbitrary cube of the source.
  FormalCube apply(const FormalCube& c) const;

  friend bool operator==(const CubicalMap& a, const CubicalMap& b) {
    return a.assignment_ == b.assignment_;
  }

 private:
  std::shared_ptr<const CubicalSet> source_;
  std::shared_ptr<const CubicalSet> target_;
  std::vector<FormalCube> assignment_;
};

/// g o f.
CubicalMap compose(const CubicalMap& g, const CubicalMap& f);

/// Naturality with respect to faces, on every generator.
ValidationReport validate_cubical_map(const CubicalMap& f);

/// Every formal cube of dimension n in k (generators of dimension m <= n
/// with every canonical degeneracy word of length n - m).
std::vector<FormalCube> all_cubes(const CubicalSet& k, int n);

/// Exhaustive list of cubical maps source -> target. The target must contain
/// every dimension up to source.max_dim() (truncation permitting).
std::vector<CubicalMap> enumerate_cubical_maps(std::shared_ptr<const CubicalSet> source,
                                               std::shared_ptr<const CubicalSet> target);

}  // namespace cubiq
