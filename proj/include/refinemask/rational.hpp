#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace refinemask {

/// Exact rational number backed by GMP.
///
/// Values are always kept in lowest terms with a positive denominator, so
/// equality of two Rationals is equality of their numerators and
/// denominators.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}
  Rational(long value) : value_(value) {}
  Rational(long long value) : value_(static_cast<long>(value)) {}
  Rational(long numerator, long denominator);

  /// Parses `-?[0-9]+(/[0-9]+)?`. Non-reduced fractions are accepted and
  /// reduced; a zero denominator, whitespace or any other character is a
  /// ParseError.
  static Rational parse(std::string_view text);

  /// 2^exponent for any sign of exponent.
  static Rational pow2(long exponent);

  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  double to_double() const { return value_.get_d(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational pow(unsigned exponent) const;

  /// k such that *this == 2^k, if any.
  std::optional<long> exact_log2() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  friend Rational binomial(unsigned n, unsigned k);

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

/// Binomial coefficient C(n, k) as an exact rational; zero when k > n.
Rational binomial(unsigned n, unsigned k);

}  // namespace refinemask
