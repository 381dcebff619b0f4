#include "refinemask/mask.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "refinemask/error.hpp"

namespace refinemask {

Mask::Mask(std::int64_t offset, std::vector<Rational> coeffs) {
  auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return !c.is_zero(); });
  if (first == coeffs.end()) return;
  auto last = std::find_if(coeffs.rbegin(), coeffs.rend(), [](const Rational& c) { return !c.is_zero(); });
  offset_ = offset + (first - coeffs.begin());
  coeffs_.assign(std::make_move_iterator(first), std::make_move_iterator(last.base()));
}

Mask Mask::delta(std::int64_t index, Rational value) { return Mask(index, {std::move(value)}); }

Rational Mask::operator[](std::int64_t j) const {
  if (is_zero() || j < offset_ || j > last_index()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(j - offset_)];
}

Rational mask_sum(const Mask& m) {
  Rational s;
  for (const auto& c : m.coeffs()) s += c;
  return s;
}

std::optional<int> try_degree_from_sum(const Mask& m) {
  auto log2 = mask_sum(m).exact_log2();
  if (!log2 || *log2 > -1) return std::nullopt;
  return static_cast<int>(-*log2 - 1);
}

int degree_from_sum(const Mask& m) {
  if (auto n = try_degree_from_sum(m)) return *n;
  throw NotRefiningPolynomial("mask does not refine a polynomial: sum " + mask_sum(m).str() +
                              " is not 2^(-n-1)");
}

Mask mask_convolve(const Mask& h, const Mask& g) {
  if (h.is_zero() || g.is_zero()) return Mask();
  std::vector<Rational> out(h.size() + g.size() - 1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += h.coeffs()[i] * g.coeffs()[j];
  }
  return Mask(h.offset() + g.offset(), std::move(out));
}

Mask mask_add(const Mask& h, const Mask& g) {
  if (h.is_zero()) return g;
  if (g.is_zero()) return h;
  const std::int64_t lo = std::min(h.offset(), g.offset());
  const std::int64_t hi = std::max(h.last_index(), g.last_index());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) out[static_cast<std::size_t>(j - lo)] = h[j] + g[j];
  return Mask(lo, std::move(out));
}

Mask mask_scale(const Rational& c, const Mask& m) {
  std::vector<Rational> out = m.coeffs();
  for (auto& x : out) x *= c;
  return Mask(m.offset(), std::move(out));
}

Mask mask_translate(const Mask& m, std::int64_t k) {
  if (m.is_zero()) return m;
  return Mask(m.offset() + k, m.coeffs());
}

Mask difference_power(int n) {
  if (n < 0) throw DomainError("difference_power needs n >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    if (k % 2 == 1) c[static_cast<std::size_t>(k)] = -c[static_cast<std::size_t>(k)];
  }
  return Mask(0, std::move(c));
}

MaskDivision reduce_mod_difference(const Mask& m, int n) {
  if (n < 0) throw DomainError("reduce_mod_difference needs n >= 0");
  const Mask divisor = difference_power(n + 1);
  const std::int64_t top = n;  // remainder support is {0, ..., top}
  const Rational divisor_last = divisor.coeffs().back();  // (-1)^{n+1}

  // Sparse working copies; entries are erased as they become zero.
  std::map<std::int64_t, Rational> rest;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!m.coeffs()[k].is_zero()) rest.emplace(m.offset() + static_cast<std::int64_t>(k), m.coeffs()[k]);
  }
  std::map<std::int64_t, Rational> quotient;

  auto subtract_shifted = [&](std::int64_t shift, const Rational& factor) {
    quotient[shift] += factor;
    for (std::size_t k = 0; k < divisor.size(); ++k) {
      const std::int64_t idx = shift + static_cast<std::int64_t>(k);
      Rational& slot = rest[idx];
      slot -= factor * divisor.coeffs()[k];
      if (slot.is_zero()) rest.erase(idx);
    }
  };

  // Lowest index below zero: align the divisor's leading 1 with it.
  while (!rest.empty() && rest.begin()->first < 0) {
    auto [idx, value] = *rest.begin();
    subtract_shifted(idx, value);
  }
  // Highest index above n: align the divisor's last coefficient with it.
  while (!rest.empty() && rest.rbegin()->first > top) {
    auto [idx, value] = *rest.rbegin();
    subtract_shifted(idx - (n + 1), value / divisor_last);
  }

  auto to_mask = [](const std::map<std::int64_t, Rational>& sparse) {
    if (sparse.empty()) return Mask();
    const std::int64_t lo = sparse.begin()->first;
    std::vector<Rational> c(static_cast<std::size_t>(sparse.rbegin()->first - lo + 1));
    for (const auto& [idx, value] : sparse) c[static_cast<std::size_t>(idx - lo)] = value;
    return Mask(lo, std::move(c));
  };
  return {to_mask(rest), to_mask(quotient)};
}

}  // namespace refinemask
