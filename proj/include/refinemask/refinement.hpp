#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "refinemask/mask.hpp"
#include "refinemask/matrix.hpp"
#include "refinemask/polynomial.hpp"
#include "refinemask/rational.hpp"

namespace refinemask {

/// A mask together with a nonzero polynomial it refines. The refinement
/// relation is checked on construction; a failing pair throws DomainError.
class RefinablePair {
 public:
  RefinablePair(Mask mask, Polynomial poly);

  const Mask& mask() const { return mask_; }
  const Polynomial& poly() const { return poly_; }
  std::size_t degree() const { return *poly_.degree(); }

  friend bool operator==(const RefinablePair&, const RefinablePair&) = default;

 private:
  Mask mask_;
  Polynomial poly_;
};

/// The polynomial t -> 2 sum_j m_j p(2t - j).
Polynomial refine_apply(const Mask& m, const Polynomial& p);

/// refine_apply(m, p) == p, exactly.
bool verify_refines(const Mask& m, const Polynomial& p);

/// The (n+1)x(n+1) matrix of refine_apply on degree-n coefficient vectors.
/// It is upper triangular with diagonal entry j equal to 2^{j+1} mask_sum(m).
Matrix refinement_matrix(const Mask& m, std::size_t n);

/// The unique monic polynomial refined by m. Builds it degree by degree:
/// each step integrates the previous monic solution and fixes the constant
/// term so the antiderivative is refined by the halved mask.
/// Throws NotRefiningPolynomial unless mask_sum(m) == 2^{-n-1}.
Polynomial poly_from_mask(const Mask& m);

/// Outcome of choosing the constant c that makes t -> Phi(t) + c refinable
/// with respect to m/2, where Phi is an antiderivative of a function refined
/// by m.
struct IntegrationConstant {
  enum class Kind { unique, arbitrary, none };
  Kind kind;
  /// Set only for Kind::unique.
  std::optional<Rational> value;
};

/// Case analysis on the sum of m for a given antiderivative Phi:
///   sum != 1                      -> unique c = (sum_j m_j Phi(-j)) / (1 - sum)
///   sum == 1, sum_j m_j Phi(-j) == 0 -> arbitrary
///   sum == 1 otherwise            -> none
/// Does not check that Phi' is refined by m.
IntegrationConstant integration_constant(const Mask& m, const Polynomial& phi_antiderivative);

/// integration_constant for Phi = antiderivative(phi), after checking that m
/// refines phi. Throws DomainError when it does not.
IntegrationConstant antiderivative_constant(const Mask& m, const Polynomial& phi);

/// (2 m, p'). Throws DomainError for a constant polynomial.
RefinablePair derivative_pair(const RefinablePair& pair);

/// (m / 2, Phi + c) with c from antiderivative_constant; c = 0 when any
/// constant works. Throws DomainError when no constant works.
RefinablePair antiderivative_pair(const RefinablePair& pair);

/// The unique mask supported in {0, ..., deg p} that refines p.
///
/// Solves P m = (1/2) shrink(p, 1/2) for the matrix P of shifted copies of p
/// without forming P: with U = (p, dp, ..., d^n p) of successive finite
/// differences, P = U L_n ... L_1 where every L_j^{-1} takes adjacent
/// differences. U is anti-triangular, so reversing its columns gives an upper
/// triangular back-substitution. Trailing zeros are trimmed.
/// Throws DomainError on the zero polynomial.
Mask mask_from_poly(const Polynomial& p);

/// The unique mask supported on the given integer nodes that refines p, via
/// P = A V with A_{i,j} = C(i+j, i) p_{i+j} and V_{i,j} = (-node_j)^i.
/// Throws DomainError unless there are deg p + 1 pairwise distinct nodes.
Mask mask_from_poly_at_nodes(const Polynomial& p, std::span<const std::int64_t> nodes);

/// m + v * (1,-1)^{n+1}
Mask extend_mask(const Mask& m, const Mask& v, int n);

/// v with a == b + v * (1,-1)^{n+1}, when both masks have sum 2^{-n-1} for
/// the same n and the same remainder modulo (1,-1)^{n+1}.
std::optional<Mask> equivalence_witness(const Mask& a, const Mask& b);

/// Whether a and b refine the same polynomial.
bool masks_equivalent(const Mask& a, const Mask& b);

struct CascadeReport {
  Polynomial result;
  std::size_t iterations = 0;
  /// Sup-norm of the coefficient change in the last iteration.
  Rational final_delta;
  bool converged = false;
};

/// Power iteration p_{j+1} = refinement_matrix(m, n) p_j in exact arithmetic,
/// stopping once the sup-norm change drops below tol or after max_iter steps.
/// p0 must have degree n = degree_from_sum(m) and tol must be positive.
CascadeReport cascade(const Mask& m, const Polynomial& p0, std::size_t max_iter, const Rational& tol);

/// cascade started from t^n, which is never orthogonal to the monic limit.
CascadeReport cascade(const Mask& m, std::size_t max_iter, const Rational& tol);

/// Experimental: poly_from_mask(mask_from_poly(p) * mask_from_poly(q)).
/// Depends on the choice of masks, so it is neither canonical nor
/// distributive over addition.
Polynomial poly_convolve_via_masks(const Polynomial& p, const Polynomial& q);

}  // namespace refinemask
