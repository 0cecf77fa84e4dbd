#include "cubiq/linalg.hpp"

#include <utility>

namespace cubiq {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t residue(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

// Row reduction to reduced echelon form. Returns pivot columns.
std::vector<std::size_t> rref_rational(std::vector<Rational>& m, std::size_t rows,
                                       std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    const Rational inv = 1 / m[r * cols + c];
    for (std::size_t j = c; j < cols; ++j) m[r * cols + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      const Rational f = m[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) m[i * cols + j] -= f * m[r * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_prime(std::vector<std::uint64_t>& m, std::size_t rows,
                                    std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    const std::uint64_t inv = powmod(m[r * cols + c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = mulmod(m[r * cols + j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      const std::uint64_t f = m[i * cols + c];
      for (std::size_t j = c; j < cols; ++j)
        m[i * cols + j] = (m[i * cols + j] + p - mulmod(f, m[r * cols + j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not a prime");
  if (p >= (std::uint64_t{1} << 62)) throw ValidationError("prime too large");
  Field f;
  f.p_ = p;
  return f;
}

Rational Field::reduce(const Rational& x) const {
  if (p_ == 0) return x;
  const std::uint64_t den = residue(x.get_den(), p_);
  if (den == 0) throw Error("denominator divisible by the characteristic " + std::to_string(p_));
  const std::uint64_t num = residue(x.get_num(), p_);
  return Rational(std::to_string(mulmod(num, powmod(den, p_ - 2, p_), p_)));
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries,
                         Field field)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw Error("matrix entry count does not match its shape");
  for (Rational& x : data_) x = field_.reduce(x);
}

ExactMatrix ExactMatrix::identity(std::size_t n, Field field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const Rational& x : data_)
    if (x != 0) return false;
  return true;
}

std::vector<Rational> ExactMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) throw Error("matrix product shape mismatch");
  ExactMatrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b.at(k, j) != 0) out.data_[i * out.cols_ + j] += x * b.at(k, j);
    }
  for (Rational& x : out.data_) x = out.field_.reduce(x);
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
    throw Error("matrix sum shape mismatch");
  ExactMatrix out(a.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    out.data_[i] = a.field_.reduce(a.data_[i] + b.data_[i]);
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  return a + Rational(-1) * b;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
  ExactMatrix out = a;
  for (Rational& x : out.data_) x = a.field_.reduce(s * x);
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

RankKernel rank_kernel(const ExactMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Rational> m(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r * cols + c] = a.at(r, c);
  std::vector<std::size_t> pivots;
  if (a.field().is_rational()) {
    pivots = rref_rational(m, rows, cols);
  } else {
    const std::uint64_t p = a.field().characteristic();
    std::vector<std::uint64_t> mm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) mm[i] = residue(m[i].get_num(), p);
    pivots = rref_prime(mm, rows, cols, p);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = Rational(std::to_string(mm[i]));
  }
  RankKernel out;
  out.rank = pivots.size();
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = a.field().reduce(-m[r * cols + f]);
    out.kernel.push_back(std::move(v));
    out.free_columns.push_back(f);
  }
  return out;
}

std::size_t rank(const ExactMatrix& a) { return rank_kernel(a).rank; }

RankKernel restricted_kernel(const ExactMatrix& a, const std::vector<std::size_t>& forbidden_rows) {
  ExactMatrix sub(forbidden_rows.size(), a.cols(), a.field());
  for (std::size_t i = 0; i < forbidden_rows.size(); ++i) {
    if (forbidden_rows[i] >= a.rows()) throw Error("restricted row out of range");
    for (std::size_t c = 0; c < a.cols(); ++c) sub.set(i, c, a.at(forbidden_rows[i], c));
  }
  return rank_kernel(sub);
}

bool in_column_span(const ExactMatrix& a, const std::vector<Rational>& v) {
  if (v.size() != a.rows()) throw Error("vector length does not match the matrix");
  ExactMatrix ext(a.rows(), a.cols() + 1, a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) ext.set(r, c, a.at(r, c));
    ext.set(r, a.cols(), v[r]);
  }
  return rank(ext) == rank(a);
}

}  // namespace cubiq
