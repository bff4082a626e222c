#include "cyclomul/text_format.hpp"

#include <charconv>
#include <sstream>

#include "cyclomul/errors.hpp"

namespace cyclomul {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<std::int64_t> parse_vector(std::string_view text, std::uint32_t p,
                                       std::size_t expected_len) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos
                                                                               : comma - start));
    std::int64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
      throw ParseError("entry " + std::to_string(out.size()) + " ('" + std::string(token) +
                       "') is not a decimal integer");
    }
    if (value < 0 || value >= static_cast<std::int64_t>(p)) {
      throw ParseError("entry " + std::to_string(out.size()) + " = " + std::to_string(value) +
                       " is outside [0, " + std::to_string(p) + ")");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected_len) {
    throw ParseError("expected " + std::to_string(expected_len) + " coordinates, got " +
                     std::to_string(out.size()));
  }
  return out;
}

std::string format_vector(std::span<const std::int64_t> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::string format_vector(std::span<const Coord> coords) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].value;
  return os.str();
}

}  // namespace cyclomul
