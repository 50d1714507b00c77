#include "csurg/matrix.hpp"

#include "csurg/error.hpp"

#include <string>
#include <utility>

namespace csurg {

SquareMatrix::SquareMatrix(std::size_t dimension, std::vector<Rational> entries)
    : dim_(dimension), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix of dimension " + std::to_string(dim_) + " needs " +
                                                  std::to_string(dim_ * dim_) + " entries, got " +
                                                  std::to_string(entries_.size()));
  }
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

SquareMatrix SquareMatrix::identity(std::size_t dimension) {
  std::vector<Rational> e(dimension * dimension);
  for (std::size_t i = 0; i < dimension; ++i) e[i * dimension + i] = 1;
  return SquareMatrix(dimension, std::move(e));
}

bool SquareMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool SquareMatrix::is_integral() const {
  for (const auto& e : entries_)
    if (!e.is_integer()) return false;
  return true;
}

RationalVector SquareMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  RationalVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < dim_; ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j) os << ',';
      os << m.at(i, j);
    }
    os << ']';
  }
  return os << ']';
}

namespace {

using IntRows = std::vector<std::vector<BigInt>>;

// Clears denominators row by row. Returns the product of the row multipliers.
BigInt integral_rows(const SquareMatrix& m, std::span<const Rational> rhs, IntRows& rows) {
  const std::size_t n = m.dimension();
  const std::size_t width = rhs.empty() ? n : n + 1;
  rows.assign(n, std::vector<BigInt>(width));
  BigInt scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt scale = 1;
    for (std::size_t j = 0; j < n; ++j) scale = lcm(scale, m.at(i, j).den());
    if (!rhs.empty()) scale = lcm(scale, rhs[i].den());
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j).num() * (scale / m.at(i, j).den());
    if (!rhs.empty()) rows[i][n] = rhs[i].num() * (scale / rhs[i].den());
    scale_product *= scale;
  }
  return scale_product;
}

// In-place Bareiss forward elimination on the leading n columns. After it
// returns, rows[k][k] holds the k-th leading principal minor of the
// (row-permuted) input and rows[n-1][n-1] the determinant up to `sign`.
// Returns false if some column has no nonzero pivot (singular).
bool bareiss(IntRows& rows, std::size_t n, int& sign) {
  sign = 1;
  BigInt previous = 1;
  const std::size_t width = n == 0 ? 0 : rows[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    if (rows[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && rows[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == n) return false;
      std::swap(rows[k], rows[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        // Exact division: Sylvester's identity guarantees divisibility.
        rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) / previous;
      }
      rows[i][k] = 0;
    }
    previous = rows[k][k];
  }
  return true;
}

}  // namespace

Rational det(const SquareMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return 1;
  IntRows rows;
  BigInt scale = integral_rows(m, {}, rows);
  int sign = 1;
  if (!bareiss(rows, n, sign)) return 0;
  return Rational(sign * rows[n - 1][n - 1], scale);
}

RationalVector solve(const SquareMatrix& m, std::span<const Rational> v) {
  const std::size_t n = m.dimension();
  if (v.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "right-hand side has length " + std::to_string(v.size()) + ", matrix dimension " + std::to_string(n));
  }
  if (n == 0) return {};
  IntRows rows;
  integral_rows(m, v, rows);
  int sign = 1;
  if (!bareiss(rows, n, sign)) throw Error(ErrorKind::SingularMatrix, "matrix is singular");

  RationalVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(rows[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(rows[ii][j]) * x[j];
    x[ii] = acc / Rational(rows[ii][ii]);
  }
  return x;
}

Rational inner_product(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "inner product of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace csurg
