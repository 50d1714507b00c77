#pragma once

#include "csurg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace csurg {

using RationalVector = std::vector<Rational>;

/// Immutable dense square matrix of exact rationals, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;

  /// Throws Error(DimensionMismatch) unless entries.size() == dimension^2.
  SquareMatrix(std::size_t dimension, std::vector<Rational> entries);

  /// Row-list construction; all rows must have the same length as the list.
  SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static SquareMatrix identity(std::size_t dimension);

  std::size_t dimension() const noexcept { return dim_; }
  const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  bool is_symmetric() const;
  bool is_integral() const;

  RationalVector operator*(std::span<const Rational> v) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m);

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. The empty matrix
/// has determinant 1.
Rational det(const SquareMatrix& m);

/// Unique x with m * x = v. Throws Error(SingularMatrix) when det(m) == 0 and
/// Error(DimensionMismatch) when v has the wrong length.
RationalVector solve(const SquareMatrix& m, std::span<const Rational> v);

/// Sum of a[i] * b[i]. Throws Error(DimensionMismatch) on unequal lengths.
Rational inner_product(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace csurg
