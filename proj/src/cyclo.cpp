#include "cyclomul/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cyclomul/errors.hpp"
#include "lane_sum.hpp"

namespace cyclomul {

namespace {

std::size_t mod_index(std::int64_t i, std::size_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  auto r = i % sn;
  if (r < 0) r += sn;
  return static_cast<std::size_t>(r);
}

void require_odd(std::size_t n) {
  if (n % 2 == 0) {
    throw OddDimensionRequired("this operation requires odd n, got n=" + std::to_string(n));
  }
}

template <typename T>
void rotate_up(std::vector<T>& v) {
  std::rotate(v.begin(), v.begin() + 1, v.end());
}

template <typename T>
void rotate_down(std::vector<T>& v) {
  std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
}

// Tracks the lanes a_{i+j} and a_{i-j} as j advances one cyclic shift per cycle.
template <typename T>
struct ShiftPair {
  std::vector<T> up;
  std::vector<T> down;

  explicit ShiftPair(std::vector<T> base) : up(base), down(std::move(base)) {}

  void step() {
    rotate_up(up);
    rotate_down(down);
  }
};

std::vector<std::size_t> identity_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

void record_cycle(Dataflow* trace, const ShiftPair<std::size_t>& lanes) {
  if (trace == nullptr) return;
  auto& row = trace->cycles.emplace_back();
  for (std::size_t i = 0; i < lanes.up.size(); ++i) row.emplace_back(lanes.up[i], lanes.down[i]);
}

}  // namespace

CycloElement::CycloElement(GroundField field, std::vector<Coord> coords)
    : field_(field), coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw InvalidDimension("cyclotomic dimension must be at least 2, got " +
                           std::to_string(coords_.size()));
  }
  for (const auto c : coords_) {
    if (!field_.contains(c)) {
      throw InvalidCoordinate("coordinate " + std::to_string(c.value) + " is outside [0, " +
                              std::to_string(field_.characteristic()) + ")");
    }
  }
}

CycloElement CycloElement::from_values(GroundField field, std::span<const std::int64_t> values) {
  std::vector<Coord> coords;
  coords.reserve(values.size());
  for (const auto v : values) coords.push_back(field.coord(v));
  return CycloElement(field, std::move(coords));
}

CycloElement CycloElement::from_values(GroundField field,
                                       std::initializer_list<std::int64_t> values) {
  return from_values(field, std::span<const std::int64_t>(values.begin(), values.size()));
}

CycloElement CycloElement::zero(GroundField field, std::size_t n) {
  return CycloElement(field, std::vector<Coord>(n));
}

CycloElement CycloElement::one(GroundField field, std::size_t n) { return basis(field, n, 0); }

CycloElement CycloElement::basis(GroundField field, std::size_t n, std::size_t k) {
  std::vector<Coord> coords(n);
  if (n > 0) coords[k % n] = Coord{1};
  return CycloElement(field, std::move(coords));
}

std::vector<std::int64_t> CycloElement::values() const {
  std::vector<std::int64_t> out;
  out.reserve(coords_.size());
  for (const auto c : coords_) out.push_back(c.value);
  return out;
}

void require_compatible(const CycloElement& a, const CycloElement& b) {
  if (a.size() != b.size() || !(a.field() == b.field())) {
    throw DimensionMismatch("operands differ: (p=" + std::to_string(a.field().characteristic()) +
                            ", n=" + std::to_string(a.size()) +
                            ") vs (p=" + std::to_string(b.field().characteristic()) +
                            ", n=" + std::to_string(b.size()) + ")");
  }
}

CycloElement cy_add(const CycloElement& a, const CycloElement& b, OpCount& count) {
  require_compatible(a, b);
  const auto& f = a.field();
  std::vector<Coord> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i], count);
  return CycloElement(f, std::move(out));
}

CycloElement cy_sub(const CycloElement& a, const CycloElement& b, OpCount& count) {
  require_compatible(a, b);
  const auto& f = a.field();
  std::vector<Coord> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i], count);
  return CycloElement(f, std::move(out));
}

CycloElement cy_shift(const CycloElement& a, std::int64_t k) {
  const auto n = a.size();
  std::vector<Coord> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[mod_index(static_cast<std::int64_t>(i) + k, n)];
  return CycloElement(a.field(), std::move(out));
}

CycloElement mul_direct(const CycloElement& a, const CycloElement& b, OpCount& count) {
  require_compatible(a, b);
  const auto& f = a.field();
  const auto n = a.size();
  detail::LaneSums c(f, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      c.accumulate(j, f.mul(a[i], b[(j + n - i) % n], count), count);
    }
  }
  return CycloElement(f, c.values());
}

RootedProduct mul_cross(const CycloElement& a, const CycloElement& b, OpCount& count,
                        Dataflow* trace) {
  require_compatible(a, b);
  const auto n = a.size();
  require_odd(n);
  const auto& f = a.field();
  const auto half = (n - 1) / 2;

  detail::LaneSums d(f, n);
  for (std::size_t i = 0; i < n; ++i) d.accumulate(i, f.mul(a[i], b[i], count), count);

  const std::vector<Coord> a0(a.coords().begin(), a.coords().end());
  const std::vector<Coord> b0(b.coords().begin(), b.coords().end());
  ShiftPair<Coord> sa(a0);
  ShiftPair<Coord> sb(b0);
  ShiftPair<std::size_t> lanes(identity_indices(n));
  for (std::size_t j = 1; j <= half; ++j) {
    sa.step();
    sb.step();
    lanes.step();
    record_cycle(trace, lanes);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = f.add(f.mul(sa.up[i], sb.down[i], count), f.mul(sb.up[i], sa.down[i], count),
                           count);
      d.accumulate(i, r, count);
    }
  }

  CycloElement root(f, d.values());
  auto product = sqrt_perm(root);
  return {std::move(root), std::move(product)};
}

RootedProduct mul_paired(const CycloElement& a, const CycloElement& b, AlgebraKind kind,
                         OpCount& count, Dataflow* trace) {
  require_compatible(a, b);
  const auto n = a.size();
  require_odd(n);
  const auto& f = a.field();
  const auto half = (n - 1) / 2;
  const bool ring = kind == AlgebraKind::Ring;

  detail::LaneSums d(f, n);
  // The diagonal only survives through 2 a_i b_i, which vanishes in
  // characteristic 2; the ring variant still needs it for x.
  if (ring || !f.doubling_vanishes()) {
    for (std::size_t i = 0; i < n; ++i) d.accumulate(i, f.mul(a[i], b[i], count), count);
    Coord x{};
    if (ring) {
      detail::ScalarSum sum(f);
      for (std::size_t i = 0; i < n; ++i) sum.add(d.value(i), count);
      x = f.neg(sum.value());
    }
    d.double_all(count);
    if (ring) d.broadcast(x, count);
  }

  const std::vector<Coord> a0(a.coords().begin(), a.coords().end());
  const std::vector<Coord> b0(b.coords().begin(), b.coords().end());
  ShiftPair<Coord> sa(a0);
  ShiftPair<Coord> sb(b0);
  ShiftPair<std::size_t> lanes(identity_indices(n));
  for (std::size_t j = 1; j <= half; ++j) {
    sa.step();
    sb.step();
    lanes.step();
    record_cycle(trace, lanes);
    for (std::size_t i = 0; i < n; ++i) {
      const auto sum_a = f.add(sa.up[i], sa.down[i], count);
      const auto sum_b = f.add(sb.up[i], sb.down[i], count);
      d.accumulate(i, f.mul(sum_a, sum_b, count), count);
    }
  }

  CycloElement root(f, d.values());
  auto product = sqrt_perm(root);
  return {std::move(root), std::move(product)};
}

CycloElement mul_general(const CycloElement& a, const CycloElement& b, GeneralForm form,
                         OpCount& count) {
  require_compatible(a, b);
  const auto n = a.size();
  const auto& f = a.field();
  const bool even = n % 2 == 0;
  const auto half = (n - 1) / 2;
  const auto quarter_turn = n / 2;
  const auto at = [n](std::size_t i) { return i % n; };

  detail::LaneSums c(f, n);

  if (form == GeneralForm::Cross) {
    for (std::size_t i = 0; i < n; ++i) c.accumulate(at(2 * i), f.mul(a[i], b[i], count), count);
    for (std::size_t j = 1; j <= half; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto k = at(i + j);
        const auto t = f.add(f.mul(a[i], b[k], count), f.mul(a[k], b[i], count), count);
        c.accumulate(at(2 * i + j), t, count);
      }
    }
    if (even) {
      for (std::size_t i = 0; i < quarter_turn; ++i) {
        const auto k = i + quarter_turn;
        const auto t = f.add(f.mul(a[i], b[k], count), f.mul(a[k], b[i], count), count);
        c.accumulate(at(2 * i + quarter_turn), t, count);
      }
    }
    return CycloElement(f, c.values());
  }

  const bool ring = form == GeneralForm::PairedRing;
  if (ring || !f.doubling_vanishes()) {
    std::vector<Coord> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = f.mul(a[i], b[i], count);
    if (ring) {
      detail::ScalarSum sum(f);
      for (const auto t : diag) sum.add(t, count);
      c.broadcast(f.neg(sum.value()), count);
    }
    if (!f.doubling_vanishes()) {
      for (std::size_t i = 0; i < n; ++i) c.accumulate(at(2 * i), f.dbl(diag[i], count), count);
    }
  }
  for (std::size_t j = 1; j <= half; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = at(i + j);
      const auto t = f.mul(f.add(a[i], a[k], count), f.add(b[i], b[k], count), count);
      c.accumulate(at(2 * i + j), t, count);
    }
  }
  if (even) {
    for (std::size_t i = 0; i < quarter_turn; ++i) {
      const auto k = i + quarter_turn;
      const auto t = f.mul(f.add(a[i], a[k], count), f.add(b[i], b[k], count), count);
      c.accumulate(at(2 * i + quarter_turn), t, count);
    }
  }
  return CycloElement(f, c.values());
}

std::vector<std::size_t> sqrt_perm_targets(std::size_t n) {
  require_odd(n);
  std::vector<std::size_t> targets(n);
  for (std::size_t i = 0; i < n; ++i) targets[i] = (2 * i) % n;
  return targets;
}

CycloElement sqrt_perm(const CycloElement& d) {
  const auto targets = sqrt_perm_targets(d.size());
  std::vector<Coord> c(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) c[targets[i]] = d[i];
  return CycloElement(d.field(), std::move(c));
}

CycloElement inverse_sqrt_perm(const CycloElement& c) {
  const auto targets = sqrt_perm_targets(c.size());
  std::vector<Coord> d(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) d[i] = c[targets[i]];
  return CycloElement(c.field(), std::move(d));
}

bool fields_equal(const CycloElement& a, const CycloElement& b) {
  require_compatible(a, b);
  const auto& f = a.field();
  OpCount scratch;
  const auto k = f.sub(a[0], b[0], scratch);
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (f.sub(a[i], b[i], scratch) != k) return false;
  }
  return true;
}

bool equal_as(const CycloElement& a, const CycloElement& b, AlgebraKind kind) {
  if (kind == AlgebraKind::Field) return fields_equal(a, b);
  require_compatible(a, b);
  return a == b;
}

}  // namespace cyclomul
