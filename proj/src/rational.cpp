#include "csurg/rational.hpp"

#include "csurg/error.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace csurg {

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  BigInt l = a / gcd(a, b) * b;
  return l < 0 ? BigInt(-l) : l;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) return false;
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (!std::isdigit(c)) return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
    return Rational(num);
  }
  std::string_view den_text = text.substr(slash + 1);
  if (!parse_integer(text.substr(0, slash), num) || den_text.empty() || den_text[0] == '-' ||
      den_text[0] == '+' || !parse_integer(den_text, den)) {
    throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  }
  if (den.is_zero()) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t Rational::to_int64() const {
  if (den_ != 1) throw std::domain_error("Rational::to_int64: not an integer: " + to_string());
  if (num_ > std::numeric_limits<std::int64_t>::max() || num_ < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("Rational::to_int64: out of range: " + to_string());
  }
  return static_cast<std::int64_t>(num_);
}

Rational Rational::reciprocal() const {
  if (num_.is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(den_, num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt floor(const Rational& r) {
  BigInt q = r.num() / r.den();  // truncates towards zero
  if (r.num() < 0 && q * r.den() != r.num()) q -= 1;
  return q;
}

}  // namespace csurg
