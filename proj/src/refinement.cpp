#include "refinemask/refinement.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "refinemask/error.hpp"

namespace refinemask {

RefinablePair::RefinablePair(Mask mask, Polynomial poly) : mask_(std::move(mask)), poly_(std::move(poly)) {
  if (poly_.is_zero()) throw DomainError("a refinable pair needs a nonzero polynomial");
  if (!verify_refines(mask_, poly_)) throw DomainError("mask does not refine the polynomial");
}

Matrix refinement_matrix(const Mask& m, std::size_t n) {
  const std::size_t size = n + 1;

  // moments[r] = sum_i m_i (-i)^r
  Vector moments(size);
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Rational minus_i(static_cast<long>(-(m.offset() + static_cast<std::int64_t>(k))));
    Rational power = 1;
    for (std::size_t r = 0; r < size; ++r) {
      moments[r] += m.coeffs()[k] * power;
      power *= minus_i;
    }
  }

  std::vector<Rational> e(size * size);
  for (std::size_t j = 0; j < size; ++j) {
    const Rational scale = Rational::pow2(static_cast<long>(j) + 1);
    for (std::size_t k = j; k < size; ++k) {
      e[j * size + k] = scale * binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * moments[k - j];
    }
  }
  return Matrix(size, size, std::move(e));
}

Polynomial refine_apply(const Mask& m, const Polynomial& p) {
  if (p.is_zero() || m.is_zero()) return Polynomial();
  return Polynomial(mat_vec(refinement_matrix(m, *p.degree()), p.coeffs()));
}

bool verify_refines(const Mask& m, const Polynomial& p) { return refine_apply(m, p) == p; }

namespace {

// sum_j m_j f(-j)
Rational weighted_reflected_sum(const Mask& m, const Polynomial& f) {
  Rational acc;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const std::int64_t j = m.offset() + static_cast<std::int64_t>(k);
    acc += m.coeffs()[k] * eval(f, Rational(static_cast<long>(-j)));
  }
  return acc;
}

}  // namespace

Polynomial poly_from_mask(const Mask& m) {
  const int n = degree_from_sum(m);

  // Level k works with the mask 2^{n-k} m, whose sum is 2^{-k-1}.
  Polynomial p = Polynomial::constant(1);
  for (int k = 1; k <= n; ++k) {
    const Mask level = mask_scale(Rational::pow2(n - k), m);
    const Polynomial q = antiderivative(p);
    const Rational lead = q.leading();
    std::vector<Rational> c = q.coeffs();
    for (auto& x : c) x /= lead;
    c[0] = Rational(2) / (lead * (Rational(1) - Rational::pow2(-k))) * weighted_reflected_sum(level, q);
    p = Polynomial(std::move(c));
  }
  return p;
}

IntegrationConstant integration_constant(const Mask& m, const Polynomial& phi_antiderivative) {
  const Rational sum = mask_sum(m);
  const Rational weighted = weighted_reflected_sum(m, phi_antiderivative);
  if (sum != Rational(1)) {
    return {IntegrationConstant::Kind::unique, weighted / (Rational(1) - sum)};
  }
  if (weighted.is_zero()) return {IntegrationConstant::Kind::arbitrary, std::nullopt};
  return {IntegrationConstant::Kind::none, std::nullopt};
}

IntegrationConstant antiderivative_constant(const Mask& m, const Polynomial& phi) {
  if (!verify_refines(m, phi)) throw DomainError("mask does not refine the polynomial");
  return integration_constant(m, antiderivative(phi));
}

RefinablePair derivative_pair(const RefinablePair& pair) {
  if (pair.degree() == 0) throw DomainError("the derivative of a constant polynomial is zero");
  return RefinablePair(mask_scale(2, pair.mask()), derivative(pair.poly()));
}

RefinablePair antiderivative_pair(const RefinablePair& pair) {
  const Polynomial phi = antiderivative(pair.poly());
  const IntegrationConstant c = antiderivative_constant(pair.mask(), pair.poly());
  switch (c.kind) {
    case IntegrationConstant::Kind::unique:
      return RefinablePair(mask_scale(Rational(1, 2), pair.mask()), phi + Polynomial::constant(*c.value));
    case IntegrationConstant::Kind::arbitrary:
      return RefinablePair(mask_scale(Rational(1, 2), pair.mask()), phi);
    case IntegrationConstant::Kind::none:
      break;
  }
  throw DomainError("no integration constant makes the antiderivative refinable");
}

Mask mask_from_poly(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no canonical mask");
  const std::size_t n = *p.degree();
  const std::size_t size = n + 1;

  // Column c of the permuted matrix is d^{n-c} p, so row r is zero left of
  // column r.
  std::vector<Vector> differences;
  differences.reserve(size);
  Polynomial d = p;
  for (std::size_t k = 0; k < size; ++k) {
    differences.push_back(padded(d, size));
    d = finite_difference(d);
  }
  std::reverse(differences.begin(), differences.end());
  const Matrix upper = Matrix::from_columns(differences);

  const Vector rhs = padded(Rational(1, 2) * shrink(p, Rational(1, 2)), size);
  Vector y = solve_upper_triangular(upper, rhs);
  std::reverse(y.begin(), y.end());

  // Apply L_n^{-1} first, L_1^{-1} last; L_j^{-1} replaces y_i by
  // y_i - y_{i+1} for i >= j-1.
  for (std::size_t j = n; j >= 1; --j) {
    for (std::size_t i = j - 1; i + 1 < size; ++i) y[i] -= y[i + 1];
  }
  return Mask(0, std::move(y));
}

Mask mask_from_poly_at_nodes(const Polynomial& p, std::span<const std::int64_t> nodes) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no canonical mask");
  const std::size_t n = *p.degree();
  const std::size_t size = n + 1;
  if (nodes.size() != size) {
    throw DomainError("a degree-" + std::to_string(n) + " polynomial needs " + std::to_string(size) + " nodes");
  }
  if (std::set<std::int64_t>(nodes.begin(), nodes.end()).size() != size) {
    throw DomainError("nodes must be pairwise distinct");
  }

  // A with reversed columns is upper triangular: A_{i, n-c} = 0 for c < i.
  std::vector<Rational> a(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) {
      a[i * size + (n - j)] = binomial(static_cast<unsigned>(i + j), static_cast<unsigned>(i)) * p.coeff(i + j);
    }
  }
  const Vector rhs = padded(Rational(1, 2) * shrink(p, Rational(1, 2)), size);
  Vector w = solve_upper_triangular(Matrix(size, size, std::move(a)), rhs);
  std::reverse(w.begin(), w.end());

  Vector vandermonde_nodes(size);
  for (std::size_t j = 0; j < size; ++j) vandermonde_nodes[j] = Rational(static_cast<long>(-nodes[j]));
  const Vector weights = solve_vandermonde(vandermonde_nodes, w);

  const auto [lo, hi] = std::minmax_element(nodes.begin(), nodes.end());
  std::vector<Rational> c(static_cast<std::size_t>(*hi - *lo + 1));
  for (std::size_t j = 0; j < size; ++j) c[static_cast<std::size_t>(nodes[j] - *lo)] = weights[j];
  return Mask(*lo, std::move(c));
}

Mask extend_mask(const Mask& m, const Mask& v, int n) {
  return mask_add(m, mask_convolve(v, difference_power(n + 1)));
}

std::optional<Mask> equivalence_witness(const Mask& a, const Mask& b) {
  const auto na = try_degree_from_sum(a);
  const auto nb = try_degree_from_sum(b);
  if (!na || !nb || *na != *nb) return std::nullopt;
  const MaskDivision da = reduce_mod_difference(a, *na);
  const MaskDivision db = reduce_mod_difference(b, *nb);
  if (da.remainder != db.remainder) return std::nullopt;
  return da.quotient - db.quotient;
}

bool masks_equivalent(const Mask& a, const Mask& b) { return equivalence_witness(a, b).has_value(); }

CascadeReport cascade(const Mask& m, const Polynomial& p0, std::size_t max_iter, const Rational& tol) {
  const int n = degree_from_sum(m);
  if (!p0.degree() || *p0.degree() != static_cast<std::size_t>(n)) {
    throw DomainError("cascade start polynomial must have degree " + std::to_string(n));
  }
  if (tol.sign() <= 0) throw DomainError("cascade tolerance must be positive");

  const Matrix step = refinement_matrix(m, static_cast<std::size_t>(n));
  CascadeReport report{p0, 0, Rational(0), false};
  while (report.iterations < max_iter) {
    Polynomial next(mat_vec(step, padded(report.result, step.cols())));
    report.final_delta = sup_norm(next - report.result);
    report.result = std::move(next);
    ++report.iterations;
    if (report.final_delta < tol) {
      report.converged = true;
      break;
    }
  }
  return report;
}

CascadeReport cascade(const Mask& m, std::size_t max_iter, const Rational& tol) {
  return cascade(m, Polynomial::monomial(static_cast<std::size_t>(degree_from_sum(m))), max_iter, tol);
}

Polynomial poly_convolve_via_masks(const Polynomial& p, const Polynomial& q) {
  return poly_from_mask(mask_convolve(mask_from_poly(p), mask_from_poly(q)));
}

}  // namespace refinemask
