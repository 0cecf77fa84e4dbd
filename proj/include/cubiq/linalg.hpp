#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cubiq/error.hpp"

namespace cubiq {

using Rational = mpq_class;

/// Coefficient field: the rationals (p = 0) or GF(p) for a prime p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }
  /// Representative of x in this field (a residue 0..p-1 for GF(p)).
  Rational reduce(const Rational& x) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t p_ = 0;
};

/// Dense matrix with exact entries. Over GF(p) entries are kept reduced.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, Field field = {});
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries, Field field = {});

  static ExactMatrix identity(std::size_t n, Field field = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Rational& x) { data_[r * cols_ + c] = field_.reduce(x); }
  void add(std::size_t r, std::size_t c, const Rational& x) {
    data_[r * cols_ + c] = field_.reduce(data_[r * cols_ + c] + x);
  }

  bool is_zero() const;
  std::vector<Rational> column(std::size_t c) const;
  ExactMatrix transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Rational> data_;
};

/**
 * Rank and kernel. Kernel vectors are echelon-normalized: vector j has a 1 at
 * free_columns[j] and 0 at every other free column, so the coordinates of a
 * kernel element in this basis are its entries at the free columns.
 */
struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> kernel;
  std::vector<std::size_t> free_columns;
};

RankKernel rank_kernel(const ExactMatrix& a);
std::size_t rank(const ExactMatrix& a);

/// Basis of {v : (Av)_r = 0 for r in forbidden_rows}, echelon-normalized as
/// in rank_kernel.
RankKernel restricted_kernel(const ExactMatrix& a, const std::vector<std::size_t>& forbidden_rows);

/// True iff v lies in the column span of a.
bool in_column_span(const ExactMatrix& a, const std::vector<Rational>& v);

}  // namespace cubiq
