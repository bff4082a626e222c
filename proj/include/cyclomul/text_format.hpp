#pragma once

// Comma-separated coordinate vectors, index 0 first: "1,0,1,1,0,0,1".

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclomul/ground_field.hpp"

namespace cyclomul {

/// Parses exactly `expected_len` decimal coordinates, each in [0, p).
/// Surrounding whitespace around each entry is ignored. Throws ParseError.
std::vector<std::int64_t> parse_vector(std::string_view text, std::uint32_t p,
                                       std::size_t expected_len);

std::string format_vector(std::span<const std::int64_t> values);
std::string format_vector(std::span<const Coord> coords);

}  // namespace cyclomul
