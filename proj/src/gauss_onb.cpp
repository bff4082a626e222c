#include "cyclomul/gauss_onb.hpp"

#include <string>

#include "cyclomul/errors.hpp"
#include "cyclomul/oracle.hpp"
#include "lane_sum.hpp"

namespace cyclomul {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (e > 0) {
    if (e & 1) result = result * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return result;
}

std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t n) {
  std::uint64_t x = a % n;
  for (std::uint32_t j = 1; j < n; ++j) {
    if (x == 1) return j;
    x = x * a % n;
  }
  return 0;
}

void require_type(const GaussParams& p, std::uint32_t k) {
  if (p.k != k) {
    throw WrongBasisType("expected a type-" + std::to_string(k) + " basis, got k=" +
                         std::to_string(p.k));
  }
}

void require_same_params(const NormalBasisElement& a, const NormalBasisElement& b) {
  if (!(a.params() == b.params())) {
    throw DimensionMismatch("normal-basis operands use different Gauss periods");
  }
}

void require_extractable(const CycloElement& c, const GaussParams& params) {
  if (c.size() != params.n || c.field().characteristic() != params.q) {
    throw DimensionMismatch("cyclotomic element (p=" + std::to_string(c.field().characteristic()) +
                            ", n=" + std::to_string(c.size()) + ") does not match q=" +
                            std::to_string(params.q) + ", n=" + std::to_string(params.n));
  }
}

// Coordinate of the embedded element at a nonzero cyclotomic index.
class Embedded {
 public:
  explicit Embedded(const NormalBasisElement& e) : e_(e) {}
  // Type I: index in 1..m. Type II: folded index in 0..m with a_0 = 0.
  Coord operator()(std::size_t idx) const { return idx == 0 ? Coord{0} : e_.coord(idx); }

 private:
  const NormalBasisElement& e_;
};

NormalBasisElement subtract_c0(const GaussParams& params, const std::vector<Coord>& c,
                               OpCount& count) {
  const auto f = params.field();
  std::vector<Coord> out(params.m);
  for (std::size_t i = 1; i <= params.m; ++i) out[i - 1] = f.sub(c[i], c[0], count);
  return NormalBasisElement(params, std::move(out));
}

}  // namespace

std::uint32_t find_alpha(std::uint32_t n, std::uint32_t k) {
  if (n < 2 || k == 0 || (n - 1) % k != 0) {
    throw NoSuchElement("no element of order " + std::to_string(k) + " in Z_" +
                        std::to_string(n) + "^*");
  }
  for (std::uint32_t a = 1; a < n; ++a) {
    if (multiplicative_order(a, n) == k) return a;
  }
  throw NoSuchElement("no element of order " + std::to_string(k) + " in Z_" + std::to_string(n) +
                      "^*");
}

GaussParams GaussParams::make(std::uint32_t m, std::uint32_t k, std::uint32_t q) {
  if (m < 2) throw InvalidDimension("extension degree m must be at least 2");
  if (k < 1) throw NoSuchElement("period type k must be at least 1");
  const GroundField field(q);  // validates q
  const std::uint64_t n = std::uint64_t{m} * k + 1;
  if (n >= (1ull << 31) || !is_prime(n)) {
    throw NotPrime("n = mk + 1 = " + std::to_string(n) + " is not prime");
  }
  const auto n32 = static_cast<std::uint32_t>(n);
  return GaussParams{m, k, n32, find_alpha(n32, k), field.characteristic()};
}

GaussParams onb_params(std::uint32_t m, std::uint32_t k, std::uint32_t q) {
  auto params = GaussParams::make(m, k, q);
  if (!verify_normal_basis(params)) {
    throw NoNormalBasis("the Gauss period of type (" + std::to_string(m) + "," +
                        std::to_string(k) + ") does not generate a normal basis over GF(" +
                        std::to_string(q) + ")");
  }
  return params;
}

NormalBasisElement::NormalBasisElement(GaussParams params, std::vector<Coord> coords)
    : params_(params), coords_(std::move(coords)) {
  if (coords_.size() != params_.m) {
    throw DimensionMismatch("expected " + std::to_string(params_.m) + " coordinates, got " +
                            std::to_string(coords_.size()));
  }
  const auto f = params_.field();
  for (const auto c : coords_) {
    if (!f.contains(c)) {
      throw InvalidCoordinate("coordinate " + std::to_string(c.value) + " is outside [0, " +
                              std::to_string(params_.q) + ")");
    }
  }
}

NormalBasisElement NormalBasisElement::from_values(GaussParams params,
                                                   std::span<const std::int64_t> values) {
  const auto f = params.field();
  std::vector<Coord> coords;
  coords.reserve(values.size());
  for (const auto v : values) coords.push_back(f.coord(v));
  return NormalBasisElement(params, std::move(coords));
}

std::vector<std::int64_t> NormalBasisElement::values() const {
  std::vector<std::int64_t> out;
  out.reserve(coords_.size());
  for (const auto c : coords_) out.push_back(c.value);
  return out;
}

std::size_t s_fold(std::int64_t i, std::size_t m) {
  const auto n = static_cast<std::int64_t>(2 * m + 1);
  auto r = i % n;
  if (r < 0) r += n;
  const auto ur = static_cast<std::size_t>(r);
  return ur <= m ? ur : 2 * m + 1 - ur;
}

CycloElement embed_onb1(const NormalBasisElement& a) {
  require_type(a.params(), 1);
  std::vector<Coord> c(a.params().n);
  for (std::size_t i = 1; i <= a.size(); ++i) c[i] = a.coord(i);
  return CycloElement(a.field(), std::move(c));
}

NormalBasisElement extract_onb1(const CycloElement& c, const GaussParams& params, OpCount& count) {
  require_type(params, 1);
  require_extractable(c, params);
  return subtract_c0(params, {c.coords().begin(), c.coords().end()}, count);
}

CycloElement embed_onb2(const NormalBasisElement& a) {
  require_type(a.params(), 2);
  const auto n = a.params().n;
  std::vector<Coord> c(n);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    c[i] = a.coord(i);
    c[n - i] = a.coord(i);
  }
  return CycloElement(a.field(), std::move(c));
}

NormalBasisElement extract_onb2(const CycloElement& c, const GaussParams& params, OpCount& count) {
  require_type(params, 2);
  require_extractable(c, params);
  const auto n = params.n;
  for (std::size_t i = 1; i <= params.m; ++i) {
    if (c[i] != c[n - i]) {
      throw NotFoldable("c_" + std::to_string(i) + " = " + std::to_string(c[i].value) +
                        " differs from c_" + std::to_string(n - i) + " = " +
                        std::to_string(c[n - i].value));
    }
  }
  return subtract_c0(params, {c.coords().begin(), c.coords().end()}, count);
}

std::size_t frobenius_slot(const GaussParams& params, std::size_t i) {
  const auto e = pow_mod(params.q, i, params.n);
  switch (params.k) {
    case 1:
      return static_cast<std::size_t>(e);
    case 2:
      return s_fold(static_cast<std::int64_t>(e), params.m);
    default:
      throw WrongBasisType("coordinate order is only defined for k = 1 and k = 2");
  }
}

std::vector<Coord> to_frobenius_order(const NormalBasisElement& a) {
  std::vector<Coord> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.coord(frobenius_slot(a.params(), i));
  return out;
}

NormalBasisElement from_frobenius_order(const GaussParams& params, std::span<const Coord> coords) {
  if (coords.size() != params.m) {
    throw DimensionMismatch("expected " + std::to_string(params.m) + " coordinates");
  }
  std::vector<Coord> out(params.m);
  for (std::size_t i = 0; i < params.m; ++i) out[frobenius_slot(params, i) - 1] = coords[i];
  return NormalBasisElement(params, std::move(out));
}

NormalBasisElement mul_onb1(const NormalBasisElement& a, const NormalBasisElement& b,
                            Onb1Variant variant, OpCount& count) {
  require_same_params(a, b);
  const auto& params = a.params();
  require_type(params, 1);
  const auto f = params.field();
  const std::size_t m = params.m;
  const std::size_t n = params.n;
  const std::size_t half = m / 2;
  const Embedded A(a);
  const Embedded B(b);

  // Lane i collects the terms that land on beta^(2i); pairs that touch the
  // zero coordinate a_0 are skipped (cycle j = i, and j = m + 1 - i).
  const auto skipped = [m](std::size_t i, std::size_t j) { return j == i || j == m + 1 - i; };

  std::vector<Coord> out(m);
  if (variant == Onb1Variant::Cross) {
    detail::ScalarSum rsum(f);
    for (std::size_t j = 1; j <= half; ++j) {
      const auto k = m + 1 - j;
      rsum.add(f.add(f.mul(A(j), B(k), count), f.mul(B(j), A(k), count), count), count);
    }
    const auto r = f.neg(rsum.value());

    for (std::size_t i = 1; i <= m; ++i) {
      detail::ScalarSum lane(f);
      lane.add(r, count);
      lane.add(f.mul(A(i), B(i), count), count);
      for (std::size_t j = 1; j <= half; ++j) {
        if (skipped(i, j)) continue;
        const auto up = (i + j) % n;
        const auto down = (i + n - j) % n;
        lane.add(f.add(f.mul(A(up), B(down), count), f.mul(B(up), A(down), count), count), count);
      }
      out[(2 * i) % n - 1] = lane.value();
    }
    return NormalBasisElement(params, std::move(out));
  }

  std::vector<Coord> diag(m + 1);
  for (std::size_t k = 1; k <= m; ++k) diag[k] = f.mul(A(k), B(k), count);

  detail::ScalarSum tsum(f);
  for (std::size_t j = 1; j <= half; ++j) {
    const auto k = m + 1 - j;
    tsum.add(f.mul(f.add(A(j), A(k), count), f.add(B(j), B(k), count), count), count);
  }
  const auto t = f.neg(tsum.value());

  for (std::size_t i = 1; i <= m; ++i) {
    detail::ScalarSum lane(f);
    lane.add(t, count);
    if (!f.doubling_vanishes()) lane.add(f.dbl(diag[i], count), count);
    lane.add(diag[(2 * i) % n], count);
    for (std::size_t j = 1; j <= half; ++j) {
      if (skipped(i, j)) continue;
      const auto up = (i + j) % n;
      const auto down = (i + n - j) % n;
      lane.add(f.mul(f.add(A(up), A(down), count), f.add(B(up), B(down), count), count), count);
    }
    out[(2 * i) % n - 1] = lane.value();
  }
  return NormalBasisElement(params, std::move(out));
}

namespace {

std::size_t lane_target(std::size_t i, std::size_t m) {
  return s_fold(static_cast<std::int64_t>(2 * i), m);
}

std::pair<std::size_t, std::size_t> folded_pair(std::size_t i, std::size_t j, std::size_t m) {
  const auto si = static_cast<std::int64_t>(i);
  const auto sj = static_cast<std::int64_t>(j);
  return {s_fold(si + sj, m), s_fold(si - sj, m)};
}

void init_trace(PairTrace* trace, std::size_t m) {
  if (trace == nullptr) return;
  trace->cycles.assign(m, std::vector<PairSlot>(m));
}

void record(PairTrace* trace, std::size_t i, std::size_t j, std::pair<std::size_t, std::size_t> p,
            bool computed) {
  if (trace == nullptr) return;
  trace->cycles[j - 1][i - 1] = PairSlot{p.first, p.second, computed};
}

// Lanes 0..m of the folded product; lane i lands on folded index s(2i).
// In characteristic 2 lane 0 is identically zero (a_{s(j)} = a_{s(-j)}), so it
// is neither computed nor subtracted.
NormalBasisElement mul_onb2_folded(const NormalBasisElement& a, const NormalBasisElement& b,
                                   bool paired, OpCount& count, PairTrace* trace) {
  const auto& params = a.params();
  const auto f = params.field();
  const std::size_t m = params.m;
  const Embedded A(a);
  const Embedded B(b);
  const bool char2 = f.doubling_vanishes();

  init_trace(trace, m);
  std::vector<Coord> c(m + 1);
  for (std::size_t i = char2 ? 1 : 0; i <= m; ++i) {
    detail::ScalarSum lane(f);
    if (!paired) {
      lane.add(f.mul(A(i), B(i), count), count);
    } else if (!char2) {
      lane.add(f.dbl(f.mul(A(i), B(i), count), count), count);
    }
    for (std::size_t j = 1; j <= m; ++j) {
      const auto p = folded_pair(i, j, m);
      if (i > 0) record(trace, i, j, p, true);
      const auto [x, y] = p;
      const auto term = paired
          ? f.mul(f.add(A(x), A(y), count), f.add(B(x), B(y), count), count)
          : f.add(f.mul(A(x), B(y), count), f.mul(B(x), A(y), count), count);
      lane.add(term, count);
    }
    c[lane_target(i, m)] = lane.value();
  }
  if (char2) return NormalBasisElement(params, {c.begin() + 1, c.end()});
  return subtract_c0(params, c, count);
}

// Symmetric schedule: the term of lane i in cycle j equals the term of lane j
// in cycle i, so only the diagonal and the upper triangle are formed.
NormalBasisElement mul_onb2_symmetric(const NormalBasisElement& a, const NormalBasisElement& b,
                                      bool paired, OpCount& count, PairTrace* trace) {
  const auto& params = a.params();
  const auto f = params.field();
  const std::size_t m = params.m;
  const Embedded A(a);
  const Embedded B(b);
  const bool char2 = f.doubling_vanishes();

  std::vector<Coord> diag(m + 1);
  for (std::size_t k = 1; k <= m; ++k) diag[k] = f.mul(A(k), B(k), count);

  // y = -sum a_j b_j enters as 2y (cross) or 4y (paired); both vanish in
  // characteristic 2.
  Coord shift{};
  if (!char2) {
    detail::ScalarSum ysum(f);
    for (std::size_t k = 1; k <= m; ++k) ysum.add(diag[k], count);
    const auto y = f.neg(ysum.value());
    shift = paired ? f.dbl(f.dbl(y, count), count) : f.dbl(y, count);
  }

  std::vector<std::vector<Coord>> upper(m + 1, std::vector<Coord>(m + 1));
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      const auto [x, y] = folded_pair(i, j, m);
      upper[i][j] = paired ? f.mul(f.add(A(x), A(y), count), f.add(B(x), B(y), count), count)
                           : f.add(f.mul(A(x), B(y), count), f.mul(B(x), A(y), count), count);
    }
  }

  init_trace(trace, m);
  std::vector<Coord> out(m);
  for (std::size_t i = 1; i <= m; ++i) {
    detail::ScalarSum lane(f);
    if (!char2) {
      lane.add(shift, count);
      if (paired) lane.add(f.dbl(diag[i], count), count);
    }
    lane.add(paired ? diag[lane_target(i, m)] : diag[i], count);
    for (std::size_t j = 1; j <= m; ++j) {
      record(trace, i, j, folded_pair(i, j, m), i < j);
      if (j == i) continue;
      lane.add(i < j ? upper[i][j] : upper[j][i], count);
    }
    out[lane_target(i, m) - 1] = lane.value();
  }
  return NormalBasisElement(params, std::move(out));
}

}  // namespace

NormalBasisElement mul_onb2(const NormalBasisElement& a, const NormalBasisElement& b,
                            Onb2Variant variant, OpCount& count, PairTrace* trace) {
  require_same_params(a, b);
  require_type(a.params(), 2);
  switch (variant) {
    case Onb2Variant::FoldedCross:
      return mul_onb2_folded(a, b, false, count, trace);
    case Onb2Variant::FoldedPaired:
      return mul_onb2_folded(a, b, true, count, trace);
    case Onb2Variant::Cross:
      return mul_onb2_symmetric(a, b, false, count, trace);
    case Onb2Variant::Paired:
      return mul_onb2_symmetric(a, b, true, count, trace);
  }
  throw UnsupportedCombination("unknown type-II variant");
}

NormalBasisElement mul_onb_reference(const NormalBasisElement& a, const NormalBasisElement& b) {
  require_same_params(a, b);
  OpCount scratch;
  switch (a.params().k) {
    case 1:
      return extract_onb1(mul_direct(embed_onb1(a), embed_onb1(b), scratch), a.params(), scratch);
    case 2:
      return extract_onb2(mul_direct(embed_onb2(a), embed_onb2(b), scratch), a.params(), scratch);
    default:
      throw WrongBasisType("normal-basis products are only defined for k = 1 and k = 2");
  }
}

}  // namespace cyclomul
