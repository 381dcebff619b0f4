#include "refinemask/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "refinemask/error.hpp"

namespace refinemask {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Polynomial Polynomial::monomial(std::size_t k) {
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  return Polynomial(std::move(c));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (is_zero()) return std::nullopt;
  return coeffs_.size() - 1;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  std::vector<Rational> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = p.coeff(k) + q.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + Rational(-1) * q; }

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.coeffs();
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Vector padded(const Polynomial& p, std::size_t length) {
  Vector v(length);
  for (std::size_t k = 0; k < length; ++k) v[k] = p.coeff(k);
  return v;
}

Rational eval(const Polynomial& p, const Rational& t) {
  Rational acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial translate(const Polynomial& p, std::int64_t i) {
  if (i == 0) return p;
  // Repeated synthetic division by (t + i): the Taylor shift p(t - i).
  std::vector<Rational> c = p.coeffs();
  const Rational shift(static_cast<long>(-i));
  const std::size_t n = c.size();
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    for (std::size_t k = n - 1; k > pass; --k) c[k - 1] += shift * c[k];
  }
  return Polynomial(std::move(c));
}

Polynomial shrink(const Polynomial& p, const Rational& k) {
  std::vector<Rational> c = p.coeffs();
  Rational power = 1;
  for (auto& x : c) {
    x *= power;
    power *= k;
  }
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Polynomial();
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c[k];
  return Polynomial(std::move(d));
}

Polynomial antiderivative(const Polynomial& p) {
  if (p.is_zero()) return p;
  const auto& c = p.coeffs();
  std::vector<Rational> a(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) a[k + 1] = c[k] / Rational(static_cast<long>(k + 1));
  return Polynomial(std::move(a));
}

Polynomial finite_difference(const Polynomial& p) { return translate(p, 1) - p; }

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no monic form");
  return (Rational(1) / p.leading()) * p;
}

Rational sup_norm(const Polynomial& p) {
  Rational best;
  for (const auto& c : p.coeffs()) best = std::max(best, c.abs());
  return best;
}

Matrix translation_matrix(std::int64_t i, std::size_t n) {
  const std::size_t size = n + 1;
  const Rational minus_i(static_cast<long>(-i));
  std::vector<Rational> e(size * size);
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = j; k < size; ++k) {
      e[j * size + k] = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) *
                        minus_i.pow(static_cast<unsigned>(k - j));
    }
  }
  return Matrix(size, size, std::move(e));
}

Matrix shrink_matrix(const Rational& k, std::size_t n) {
  Vector diag(n + 1);
  Rational power = 1;
  for (auto& d : diag) {
    d = power;
    power *= k;
  }
  return Matrix::diagonal(diag);
}

Matrix shifted_poly_matrix(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("shifted_poly_matrix needs a nonzero polynomial");
  const std::size_t n = *p.degree();
  std::vector<Vector> columns;
  columns.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) columns.push_back(padded(translate(p, static_cast<std::int64_t>(i)), n + 1));
  return Matrix::from_columns(columns);
}

}  // namespace refinemask
