#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace csurg {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational number.
 *
 * Always stored in canonical form: the denominator is positive and coprime
 * to the numerator, and zero is 0/1. Every constructor and arithmetic
 * operator restores this form, so structural equality is value equality.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error on a zero denominator.
  Rational(BigInt num, BigInt den);

  /// Parses "p/q" or "n" (optional leading sign on p or n, no spaces).
  /// Throws Error(ParseError) on anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  /// Only meaningful when is_integer() and the value fits in 64 bits.
  std::int64_t to_int64() const;

  Rational abs() const { return Rational(num_ < 0 ? BigInt(-num_) : num_, den_, Canonical{}); }
  Rational reciprocal() const;

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error when b is zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(BigInt(-a.num_), a.den_, Canonical{}); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  struct Canonical {};
  Rational(BigInt num, BigInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Floor of a rational, rounding towards negative infinity.
BigInt floor(const Rational& r);

}  // namespace csurg
