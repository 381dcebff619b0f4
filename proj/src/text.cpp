#include "refinemask/text.hpp"

#include <charconv>

#include "refinemask/error.hpp"

namespace refinemask {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  if (text.empty()) throw ParseError("empty coefficient list");
  std::vector<Rational> out;
  for (auto part : split(text, ',')) out.push_back(Rational::parse(part));
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += values[i].str();
  }
  return s;
}

std::int64_t parse_integer(std::string_view text) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("invalid integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Polynomial(parse_rational_list(text)); }

std::string format_polynomial(const Polynomial& p) { return join(p.coeffs()); }

Mask parse_mask(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("mask '" + std::string(text) + "' lacks the 'offset:' prefix");
  }
  return Mask(parse_integer(text.substr(0, colon)), parse_rational_list(text.substr(colon + 1)));
}

std::string format_mask(const Mask& m) {
  if (m.is_zero()) return "0:0";
  return std::to_string(m.offset()) + ":" + join(m.coeffs());
}

std::vector<std::int64_t> parse_integer_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_integer(part));
  return out;
}

}  // namespace refinemask
