#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "refinemask/matrix.hpp"
#include "refinemask/rational.hpp"

namespace refinemask {

/// Dense rational polynomial, coefficients in ascending powers.
///
/// The leading coefficient is nonzero, except for the zero polynomial which
/// is stored as the single coefficient 0 and has no degree.
class Polynomial {
 public:
  /// The zero polynomial.
  Polynomial() : coeffs_{Rational(0)} {}
  /// Trailing zeros are trimmed; an empty vector gives the zero polynomial.
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
  /// t^k
  static Polynomial monomial(std::size_t k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  std::optional<std::size_t> degree() const;
  /// Coefficient of t^k, zero past the stored length.
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& c, const Polynomial& p);

/// Coefficients padded or truncated to exactly `length` entries.
Vector padded(const Polynomial& p, std::size_t length);

Rational eval(const Polynomial& p, const Rational& t);

/// t -> p(t - i)
Polynomial translate(const Polynomial& p, std::int64_t i);
/// t -> p(k t)
Polynomial shrink(const Polynomial& p, const Rational& k);

Polynomial derivative(const Polynomial& p);
/// Antiderivative with constant term zero.
Polynomial antiderivative(const Polynomial& p);

/// translate(p, 1) - p
Polynomial finite_difference(const Polynomial& p);

/// Scales p to leading coefficient 1. Throws DomainError on the zero polynomial.
Polynomial make_monic(const Polynomial& p);

/// Largest absolute coefficient.
Rational sup_norm(const Polynomial& p);

/// (n+1)x(n+1) matrix of t -> p(t - i) acting on coefficient vectors:
/// entry (j, k) = C(k, j) (-i)^{k-j} for j <= k.
Matrix translation_matrix(std::int64_t i, std::size_t n);
/// diag(1, k, ..., k^n)
Matrix shrink_matrix(const Rational& k, std::size_t n);

/// Column i is translate(p, i) for i = 0..deg p. Throws DomainError on the
/// zero polynomial.
Matrix shifted_poly_matrix(const Polynomial& p);

}  // namespace refinemask
