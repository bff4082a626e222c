#include "cyclomul/ground_field.hpp"

#include <ostream>
#include <string>

#include "cyclomul/errors.hpp"

namespace cyclomul {

std::ostream& operator<<(std::ostream& os, Coord c) { return os << c.value; }

std::ostream& operator<<(std::ostream& os, const OpCount& c) {
  return os << "mult=" << c.mult << " doub=" << c.doub << " add=" << c.add
            << " total=" << c.total();
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

GroundField::GroundField(std::uint32_t p) : p_(p) {
  if (p >= kMaxCharacteristic || !is_prime(p)) {
    throw NotPrime("p must be prime and below 65536, got " + std::to_string(p));
  }
}

Coord GroundField::coord(std::int64_t value) const {
  if (value < 0 || value >= static_cast<std::int64_t>(p_)) {
    throw InvalidCoordinate("coordinate " + std::to_string(value) + " is outside [0, " +
                            std::to_string(p_) + ")");
  }
  return Coord{static_cast<std::uint16_t>(value)};
}

Coord GroundField::reduce(std::int64_t value) const {
  auto r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Coord{static_cast<std::uint16_t>(r)};
}

Coord GroundField::add(Coord a, Coord b, OpCount& count) const {
  ++count.add;
  return Coord{static_cast<std::uint16_t>((std::uint32_t{a.value} + b.value) % p_)};
}

Coord GroundField::sub(Coord a, Coord b, OpCount& count) const {
  return add(a, neg(b), count);
}

Coord GroundField::mul(Coord a, Coord b, OpCount& count) const {
  ++count.mult;
  return Coord{static_cast<std::uint16_t>((std::uint32_t{a.value} * b.value) % p_)};
}

Coord GroundField::dbl(Coord a, OpCount& count) const {
  if (doubling_vanishes()) return Coord{0};
  ++count.doub;
  return Coord{static_cast<std::uint16_t>((2 * std::uint32_t{a.value}) % p_)};
}

Coord GroundField::neg(Coord a) const {
  return Coord{static_cast<std::uint16_t>(a.value == 0 ? 0 : p_ - a.value)};
}

}  // namespace cyclomul
