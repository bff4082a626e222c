#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace cyclomul {

/// A coordinate in GF(p), always reduced into [0, p).
struct Coord {
  std::uint16_t value = 0;

  friend constexpr auto operator<=>(Coord, Coord) = default;
};

std::ostream& operator<<(std::ostream& os, Coord c);

/// Tally of ground-field operations spent by one multiplication.
///
/// Only additions (subtractions included), multiplications and doublings are
/// counted. Negation is free, and so is multiplication by any other fixed
/// small constant.
struct OpCount {
  std::uint64_t mult = 0;
  std::uint64_t doub = 0;
  std::uint64_t add = 0;

  constexpr std::uint64_t total() const { return mult + doub + add; }

  OpCount& operator+=(const OpCount& other) {
    mult += other.mult;
    doub += other.doub;
    add += other.add;
    return *this;
  }
  friend constexpr bool operator==(const OpCount&, const OpCount&) = default;
};

std::ostream& operator<<(std::ostream& os, const OpCount& c);

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t value);

/// Prime field GF(p) with p < 2^16.
class GroundField {
 public:
  static constexpr std::uint32_t kMaxCharacteristic = 1u << 16;

  /// Throws NotPrime if p is not a prime below 2^16.
  explicit GroundField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  /// Validating constructor for a coordinate; throws InvalidCoordinate.
  Coord coord(std::int64_t value) const;
  /// Reduces any integer into the field.
  Coord reduce(std::int64_t value) const;
  bool contains(Coord c) const { return c.value < p_; }

  Coord add(Coord a, Coord b, OpCount& count) const;
  /// a - b, counted as one addition.
  Coord sub(Coord a, Coord b, OpCount& count) const;
  Coord mul(Coord a, Coord b, OpCount& count) const;
  /// 2a. In characteristic 2 this is identically zero and costs nothing.
  Coord dbl(Coord a, OpCount& count) const;
  Coord neg(Coord a) const;

  /// True when 2a = 0 for every a, so doubled terms drop out of a formula.
  bool doubling_vanishes() const { return p_ == 2; }

  friend bool operator==(const GroundField&, const GroundField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace cyclomul
