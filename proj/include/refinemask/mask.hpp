#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "refinemask/rational.hpp"

namespace refinemask {

/// Finitely supported rational sequence over the integers, i.e. a Laurent
/// polynomial. Stored trimmed: the first and last coefficients are nonzero,
/// and the zero mask has no coefficients and offset 0.
class Mask {
 public:
  Mask() = default;
  /// Coefficient k sits at index offset + k. Leading and trailing zeros are
  /// trimmed away.
  Mask(std::int64_t offset, std::vector<Rational> coeffs);

  /// value * delta_index
  static Mask delta(std::int64_t index = 0, Rational value = 1);

  std::int64_t offset() const { return offset_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  /// Index of the last stored coefficient; meaningless for the zero mask.
  std::int64_t last_index() const { return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }

  /// Coefficient at index j, zero outside the support.
  Rational operator[](std::int64_t j) const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  std::int64_t offset_ = 0;
  std::vector<Rational> coeffs_;
};

Rational mask_sum(const Mask& m);

/// n with mask_sum(m) == 2^{-n-1}, or nullopt when no such n >= 0 exists.
std::optional<int> try_degree_from_sum(const Mask& m);
/// Throws NotRefiningPolynomial when try_degree_from_sum fails.
int degree_from_sum(const Mask& m);

Mask mask_convolve(const Mask& h, const Mask& g);
Mask mask_add(const Mask& h, const Mask& g);
Mask mask_scale(const Rational& c, const Mask& m);
Mask mask_translate(const Mask& m, std::int64_t k);

inline Mask operator+(const Mask& h, const Mask& g) { return mask_add(h, g); }
inline Mask operator-(const Mask& h, const Mask& g) { return mask_add(h, mask_scale(-1, g)); }
inline Mask operator*(const Rational& c, const Mask& m) { return mask_scale(c, m); }

/// (1,-1)^n: the n-fold convolution of delta_0 - delta_1, at offset 0.
/// Throws DomainError for n < 0.
Mask difference_power(int n);

struct MaskDivision {
  Mask remainder;
  Mask quotient;
};

/// Laurent division by (1,-1)^{n+1}: m == remainder + quotient * (1,-1)^{n+1}
/// with the remainder supported in {0, ..., n}.
MaskDivision reduce_mod_difference(const Mask& m, int n);

}  // namespace refinemask
