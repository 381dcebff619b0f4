#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "refinemask/mask.hpp"
#include "refinemask/polynomial.hpp"

namespace refinemask {

// Text formats:
//   rational    -?[0-9]+(/[0-9]+)?
//   polynomial  c0,c1,...,cn          ascending powers
//   mask        offset:c0,c1,...,ck   coefficient k at index offset + k
// No whitespace anywhere. Printing is canonical (reduced, trimmed), so
// parse(format(x)) == x for every value. The zero mask prints as "0:0".

Polynomial parse_polynomial(std::string_view text);
std::string format_polynomial(const Polynomial& p);

Mask parse_mask(std::string_view text);
std::string format_mask(const Mask& m);

/// Comma-separated integers, e.g. "0,1,2".
std::vector<std::int64_t> parse_integer_list(std::string_view text);

}  // namespace refinemask
