#include <doctest.h>

#include "refinemask/error.hpp"
#include "refinemask/refinement.hpp"
#include "support/oracles.hpp"

using namespace refinemask;

namespace {

Mask scaled_1331(long denominator) {
  return Mask(0, {Rational(1, denominator), Rational(3, denominator), Rational(3, denominator), Rational(1, denominator)});
}

const Polynomial kQuadratic({Rational(5, 2), -3, 1});
const Polynomial kLinear({Rational(-3, 2), 1});
const Mask kShortMask(0, {Rational(1, 32), 0, Rational(3, 32)});

}  // namespace

TEST_CASE("refine_apply") {
  const Mask intro(0, {Rational(3, 8), Rational(-3, 8), Rational(1, 8)});
  const Polynomial square({1, 2, 1});
  CHECK(refine_apply(intro, square) == square);
  CHECK(refine_apply(scaled_1331(64), kQuadratic) == kQuadratic);
  CHECK(refine_apply(Mask(), kQuadratic).is_zero());
  CHECK(refine_apply(intro, Polynomial()).is_zero());

  testing::Generator gen(31);
  for (int i = 0; i < 60; ++i) {
    const Mask m = gen.mask(static_cast<std::size_t>(gen.integer(1, 6)));
    const Polynomial p = gen.polynomial(static_cast<std::size_t>(gen.integer(0, 5)));
    CHECK(refine_apply(m, p) == testing::refine_by_definition(m, p));
  }
}

TEST_CASE("verify_refines") {
  CHECK(verify_refines(scaled_1331(32), kLinear));
  CHECK_FALSE(verify_refines(scaled_1331(16), Polynomial::monomial(1)));
  CHECK(verify_refines(kShortMask, kQuadratic));
  CHECK(verify_refines(Mask(), Polynomial()));
}

TEST_CASE("refinement_matrix") {
  CHECK(refinement_matrix(Mask::delta(0, Rational(1, 2)), 0) == Matrix(1, 1, {1}));
  const Matrix r = refinement_matrix(scaled_1331(64), 2);
  CHECK(r.diagonal_entries() == Vector{Rational(1, 4), Rational(1, 2), 1});
  CHECK(mat_vec(r, kQuadratic.coeffs()) == kQuadratic.coeffs());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < i; ++j) CHECK(r(i, j) == Rational(0));
  }

  testing::Generator gen(37);
  for (int i = 0; i < 40; ++i) {
    const Mask m = gen.mask(static_cast<std::size_t>(gen.integer(1, 7)));
    const auto n = static_cast<std::size_t>(gen.integer(0, 5));
    CHECK(refinement_matrix(m, n) == testing::refinement_matrix_by_definition(m, n));
  }
}

TEST_CASE("poly_from_mask") {
  CHECK(poly_from_mask(scaled_1331(16)) == Polynomial::constant(1));
  CHECK(poly_from_mask(scaled_1331(32)) == kLinear);
  CHECK(poly_from_mask(scaled_1331(64)) == kQuadratic);
  CHECK(poly_from_mask(Mask(0, {Rational(3, 8), Rational(-3, 8), Rational(1, 8)})) == Polynomial({1, 2, 1}));
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(poly_from_mask(Mask::delta(0, Rational::pow2(-static_cast<long>(k) - 1))) == Polynomial::monomial(k));
  }
  CHECK_THROWS_AS(poly_from_mask(scaled_1331(8)), NotRefiningPolynomial);
  CHECK_THROWS_AS(poly_from_mask(Mask()), NotRefiningPolynomial);
}

TEST_CASE("poly_from_mask matches the monic fixed point found by elimination") {
  testing::Generator gen(41);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(gen.integer(0, 5));
    const Mask m = gen.mask_with_degree(n, static_cast<std::size_t>(gen.integer(1, 9)));
    CHECK(poly_from_mask(m) == testing::monic_fixed_point(m, static_cast<std::size_t>(n)));
  }
}

TEST_CASE("integration constants") {
  const auto c1 = antiderivative_constant(scaled_1331(16), Polynomial::constant(1));
  REQUIRE(c1.kind == IntegrationConstant::Kind::unique);
  CHECK(*c1.value == Rational(-3, 2));

  // Phi = -3t/2 + t^2/2 takes 0, 2, 5, 9 at 0, -1, -2, -3; the weighted sum
  // is 30/32 and 1 - 1/4 = 3/4.
  const auto c2 = antiderivative_constant(scaled_1331(32), kLinear);
  REQUIRE(c2.kind == IntegrationConstant::Kind::unique);
  CHECK(*c2.value == Rational(5, 4));
  CHECK(verify_refines(scaled_1331(64), antiderivative(kLinear) + Polynomial::constant(*c2.value)));

  const auto arbitrary = integration_constant(Mask::delta(), Polynomial::monomial(1));
  CHECK(arbitrary.kind == IntegrationConstant::Kind::arbitrary);
  CHECK_FALSE(arbitrary.value.has_value());

  const auto none = integration_constant(Mask::delta(1), Polynomial::monomial(1));
  CHECK(none.kind == IntegrationConstant::Kind::none);

  CHECK_THROWS_AS(antiderivative_constant(scaled_1331(16), Polynomial::monomial(1)), DomainError);
}

TEST_CASE("derivative_pair") {
  const RefinablePair quad(scaled_1331(64), kQuadratic);
  const RefinablePair d = derivative_pair(quad);
  CHECK(d.mask() == scaled_1331(32));
  CHECK(d.poly() == Polynomial({-3, 2}));

  const RefinablePair d2 = derivative_pair(RefinablePair(scaled_1331(32), kLinear));
  CHECK(d2.mask() == scaled_1331(16));
  CHECK(d2.poly() == Polynomial::constant(1));

  CHECK_THROWS_AS(derivative_pair(d2), DomainError);
  CHECK_THROWS_AS(RefinablePair(scaled_1331(16), kLinear), DomainError);
  CHECK_THROWS_AS(RefinablePair(scaled_1331(16), Polynomial()), DomainError);
}

TEST_CASE("antiderivative_pair") {
  const RefinablePair a1 = antiderivative_pair(RefinablePair(scaled_1331(16), Polynomial::constant(1)));
  CHECK(a1.mask() == scaled_1331(32));
  CHECK(a1.poly() == kLinear);

  const RefinablePair a2 = antiderivative_pair(a1);
  CHECK(a2.mask() == scaled_1331(64));
  CHECK(verify_refines(a2.mask(), a2.poly()));
  CHECK(make_monic(a2.poly()) == kQuadratic);

  testing::Generator gen(43);
  for (int i = 0; i < 40; ++i) {
    const int n = static_cast<int>(gen.integer(0, 4));
    const Mask m = gen.mask_with_degree(n, static_cast<std::size_t>(gen.integer(1, 7)));
    const RefinablePair pair(m, Rational(gen.nonzero_rational(20)) * poly_from_mask(m));
    const RefinablePair up = antiderivative_pair(pair);
    CHECK(verify_refines(up.mask(), up.poly()));
    CHECK(derivative_pair(up) == pair);
    if (n > 0) CHECK(verify_refines(derivative_pair(pair).mask(), derivative_pair(pair).poly()));
  }
}

TEST_CASE("mask_from_poly") {
  CHECK(mask_from_poly(Polynomial::constant(1)) == Mask::delta(0, Rational(1, 2)));
  CHECK(mask_from_poly(kQuadratic) == kShortMask);
  CHECK(mask_from_poly(kLinear) == Mask(0, {Rational(-1, 8), Rational(3, 8)}));
  CHECK(mask_from_poly(kLinear) == reduce_mod_difference(scaled_1331(32), 1).remainder);
  CHECK(mask_from_poly(Polynomial::monomial(1)) == Mask::delta(0, Rational(1, 4)));
  CHECK_THROWS_AS(mask_from_poly(Polynomial()), DomainError);

  testing::Generator gen(47);
  for (int i = 0; i < 60; ++i) {
    const Polynomial p = gen.polynomial(static_cast<std::size_t>(gen.integer(0, 6)));
    const Mask m = mask_from_poly(p);
    CHECK(m == testing::mask_by_general_solve(p));
    CHECK(testing::refine_by_definition(m, p) == p);
  }
}

TEST_CASE("mask_from_poly_at_nodes") {
  const std::vector<std::int64_t> base{0, 1, 2};
  CHECK(mask_from_poly_at_nodes(kQuadratic, base) == kShortMask);
  const std::vector<std::int64_t> shifted{1, 2, 3};
  const Mask m = mask_from_poly_at_nodes(kQuadratic, shifted);
  CHECK(m.offset() == 1);
  CHECK(verify_refines(m, kQuadratic));
  const std::vector<std::int64_t> five{5};
  CHECK(mask_from_poly_at_nodes(Polynomial::constant(1), five) == Mask::delta(5, Rational(1, 2)));

  const std::vector<std::int64_t> scattered{3, -4, 0};
  const Mask s = mask_from_poly_at_nodes(kQuadratic, scattered);
  CHECK(verify_refines(s, kQuadratic));
  CHECK(masks_equivalent(s, kShortMask));

  const std::vector<std::int64_t> too_few{0, 1};
  const std::vector<std::int64_t> duplicate{0, 1, 1};
  CHECK_THROWS_AS(mask_from_poly_at_nodes(kQuadratic, too_few), DomainError);
  CHECK_THROWS_AS(mask_from_poly_at_nodes(kQuadratic, duplicate), DomainError);
  CHECK_THROWS_AS(mask_from_poly_at_nodes(Polynomial(), five), DomainError);
}

TEST_CASE("extend_mask and masks_equivalent") {
  CHECK(extend_mask(kShortMask, Mask(), 2) == kShortMask);
  CHECK(extend_mask(kShortMask, Mask::delta(0, Rational(-1, 64)), 2) == scaled_1331(64));

  CHECK(masks_equivalent(scaled_1331(64), kShortMask));
  CHECK(equivalence_witness(scaled_1331(64), kShortMask) == Mask::delta(0, Rational(-1, 64)));
  CHECK(masks_equivalent(scaled_1331(64), scaled_1331(64)));
  CHECK_FALSE(masks_equivalent(scaled_1331(64), scaled_1331(32)));
  CHECK_FALSE(masks_equivalent(scaled_1331(8), scaled_1331(8)));
  // Same sum, different polynomials.
  CHECK_FALSE(masks_equivalent(Mask::delta(0, Rational(1, 4)), Mask::delta(1, Rational(1, 4))));

  testing::Generator gen(53);
  for (int i = 0; i < 60; ++i) {
    const Polynomial p = gen.polynomial(static_cast<std::size_t>(gen.integer(0, 5)));
    const int n = static_cast<int>(*p.degree());
    const Mask v = gen.mask(static_cast<std::size_t>(gen.integer(0, 4)));
    const Mask base = mask_from_poly(p);
    const Mask extended = extend_mask(base, v, n);
    CHECK(verify_refines(extended, p));
    CHECK(masks_equivalent(extended, base));
    CHECK(extend_mask(base, *equivalence_witness(extended, base), n) == extended);
  }
}

TEST_CASE("every mask on a wider window that refines p reduces to the canonical mask") {
  testing::Generator gen(59);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(0, 4));
    const Polynomial p = gen.polynomial(n, 20);
    // Unknowns m_{-2..n+2}; choose the four outer ones freely and solve the
    // refinement equations for m_0..m_n by generic elimination.
    std::vector<Vector> columns;
    for (std::size_t j = 0; j <= n; ++j) {
      columns.push_back(padded(testing::refine_by_definition(Mask::delta(static_cast<std::int64_t>(j)), p), n + 1));
    }
    Polynomial rhs = p;
    std::vector<std::pair<std::int64_t, Rational>> outer;
    for (std::int64_t j : {std::int64_t{-2}, std::int64_t{-1}, static_cast<std::int64_t>(n) + 1, static_cast<std::int64_t>(n) + 2}) {
      const Rational value = gen.rational(20);
      outer.emplace_back(j, value);
      rhs = rhs - value * testing::refine_by_definition(Mask::delta(j), p);
    }
    const Vector inner = solve_general(Matrix::from_columns(columns), padded(rhs, n + 1));
    Mask wide(0, inner);
    for (const auto& [j, value] : outer) wide = wide + Mask::delta(j, value);

    REQUIRE(testing::refine_by_definition(wide, p) == p);
    CHECK(reduce_mod_difference(wide, static_cast<int>(n)).remainder == mask_from_poly(p));
  }
}

TEST_CASE("eigenstructure of the refinement matrix") {
  testing::Generator gen(61);
  for (int i = 0; i < 40; ++i) {
    const int n = static_cast<int>(gen.integer(1, 5));
    const Mask m = gen.mask_with_degree(n, static_cast<std::size_t>(gen.integer(1, 9)));
    const Matrix r = refinement_matrix(m, static_cast<std::size_t>(n));
    const Vector diag = r.diagonal_entries();
    for (int j = 0; j <= n; ++j) CHECK(diag[static_cast<std::size_t>(j)] == Rational::pow2(j - n));
    // Pairwise distinct diagonal entries: eigenvalue 1 is simple.
    for (std::size_t a = 0; a < diag.size(); ++a) {
      for (std::size_t b = a + 1; b < diag.size(); ++b) CHECK(diag[a] != diag[b]);
    }
    const Polynomial p = poly_from_mask(m);
    const Polynomial dp = derivative(p);
    CHECK(Polynomial(mat_vec(r, padded(dp, r.cols()))) == Rational(1, 2) * dp);
  }
}

TEST_CASE("cascade") {
  const Mask m = scaled_1331(64);
  const Rational tol = Rational::pow2(-40);
  const CascadeReport report = cascade(m, Polynomial::monomial(2), 200, tol);
  CHECK(report.converged);
  CHECK(report.final_delta < tol);
  CHECK(testing::sup_distance(report.result, kQuadratic) < tol);
  CHECK(report.result.leading() == Rational(1));

  const CascadeReport fixed = cascade(m, kQuadratic, 200, tol);
  CHECK(fixed.converged);
  CHECK(fixed.iterations == 1);
  CHECK(fixed.final_delta == Rational(0));

  const CascadeReport constant = cascade(scaled_1331(16), Polynomial::constant(1), 10, tol);
  CHECK(constant.iterations == 1);
  CHECK(constant.result == Polynomial::constant(1));

  const CascadeReport short_run = cascade(m, 3, tol);
  CHECK_FALSE(short_run.converged);
  CHECK(short_run.iterations == 3);

  CHECK_THROWS_AS(cascade(scaled_1331(8), Polynomial::constant(1), 10, tol), NotRefiningPolynomial);
  CHECK_THROWS_AS(cascade(m, Polynomial::monomial(1), 10, tol), DomainError);
  CHECK_THROWS_AS(cascade(m, Polynomial::monomial(2), 10, Rational(0)), DomainError);
}

TEST_CASE("cascade keeps the leading coefficient and contracts at rate 1/2") {
  testing::Generator gen(67);
  for (int i = 0; i < 20; ++i) {
    const int n = static_cast<int>(gen.integer(1, 4));
    const Mask m = gen.mask_with_degree(n, static_cast<std::size_t>(gen.integer(1, 6)), 2, 10);
    const Polynomial target = poly_from_mask(m);
    const Polynomial p0 = Rational(gen.nonzero_rational(10)) * Polynomial::monomial(static_cast<std::size_t>(n));
    Polynomial p = p0;
    const Matrix r = refinement_matrix(m, static_cast<std::size_t>(n));
    for (int j = 0; j < 10; ++j) {
      p = Polynomial(mat_vec(r, padded(p, r.cols())));
      CHECK(p.coeff(static_cast<std::size_t>(n)) == p0.leading());
    }

    // Distance to the monic limit with p0 = t^n; faster modes have died out by step 20.
    Polynomial q = Polynomial::monomial(static_cast<std::size_t>(n));
    Rational previous;
    for (int j = 1; j <= 40; ++j) {
      q = Polynomial(mat_vec(r, padded(q, r.cols())));
      const Rational err = testing::sup_distance(q, target);
      if (j > 20) CHECK(err <= Rational(51, 100) * previous);
      previous = err;
    }
  }
}

TEST_CASE("poly_convolve_via_masks") {
  CHECK(poly_convolve_via_masks(Polynomial::constant(1), Polynomial::constant(1)) == Polynomial::monomial(1));

  testing::Generator gen(71);
  for (int i = 0; i < 30; ++i) {
    const Polynomial p = gen.polynomial(static_cast<std::size_t>(gen.integer(0, 3)));
    const Polynomial q = gen.polynomial(static_cast<std::size_t>(gen.integer(0, 3)));
    const Mask h = mask_from_poly(p);
    const Mask g = mask_from_poly(q);
    const Mask hg = mask_convolve(h, g);
    CHECK(mask_sum(hg) == Rational::pow2(-static_cast<long>(*p.degree() + *q.degree() + 1) - 1));
    const Polynomial c = poly_convolve_via_masks(p, q);
    CHECK(c.degree() == *p.degree() + *q.degree() + 1);
    CHECK(c.leading() == Rational(1));
    CHECK(verify_refines(hg, c));
  }
}

TEST_CASE("convolution of masks adds degrees") {
  testing::Generator gen(73);
  for (int i = 0; i < 30; ++i) {
    const int a = static_cast<int>(gen.integer(0, 3));
    const int b = static_cast<int>(gen.integer(0, 3));
    const Mask h = gen.mask_with_degree(a, static_cast<std::size_t>(gen.integer(1, 4)));
    const Mask g = gen.mask_with_degree(b, static_cast<std::size_t>(gen.integer(1, 4)));
    CHECK(poly_from_mask(mask_convolve(h, g)).degree() == static_cast<std::size_t>(a + b + 1));
  }
}
