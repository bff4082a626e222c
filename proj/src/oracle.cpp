#include "cyclomul/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "cyclomul/errors.hpp"

namespace cyclomul {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 q) { return a * b % q; }

u64 powmod(u64 base, u64 e, u64 q) {
  u64 r = 1 % q;
  base %= q;
  while (e) {
    if (e & 1) r = mulmod(r, base, q);
    base = mulmod(base, base, q);
    e >>= 1;
  }
  return r;
}

u64 inverse_mod(u64 a, u64 q) { return powmod(a, q - 2, q); }

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_sub(Poly a, const Poly& b, u64 q) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = static_cast<std::uint32_t>((a[i] + q - b[i]) % q);
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 q) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + u64{a[i]} * b[j]) % q);
    }
  }
  trim(out);
  return out;
}

// Remainder of a by a nonzero divisor, by long division.
Poly poly_rem(Poly a, const Poly& divisor, u64 q) {
  trim(a);
  const int dd = degree(divisor);
  const u64 lead_inv = inverse_mod(divisor.back(), q);
  while (degree(a) >= dd) {
    const int shift = degree(a) - dd;
    const u64 factor = mulmod(a.back(), lead_inv, q);
    for (int i = 0; i <= dd; ++i) {
      auto& slot = a[static_cast<std::size_t>(i + shift)];
      slot = static_cast<std::uint32_t>((slot + q - mulmod(factor, divisor[static_cast<std::size_t>(i)], q)) % q);
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, u64 q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 q) {
  Poly result{1};
  base = poly_rem(std::move(base), f, q);
  while (e) {
    if (e & 1) result = poly_rem(poly_mul(result, base, q), f, q);
    base = poly_rem(poly_mul(base, base, q), f, q);
    e >>= 1;
  }
  return poly_rem(std::move(result), f, q);
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t strip_factor(std::uint32_t n, std::uint32_t q) {
  while (n % q == 0) n /= q;
  return n;
}

void require_same_field(const SplitFieldElement& a, const SplitFieldElement& b) {
  if (a.field != b.field &&
      (a.field->q() != b.field->q() || a.field->modulus() != b.field->modulus())) {
    throw DimensionMismatch("split-field operands belong to different fields");
  }
}

SplitFieldElement make_element(const std::shared_ptr<const SplitField>& field, Poly p) {
  p.resize(field->degree(), 0);
  return SplitFieldElement{field, std::move(p)};
}

Poly as_poly(const SplitFieldElement& e) {
  Poly p = e.coeffs;
  trim(p);
  return p;
}

}  // namespace

std::uint32_t order_mod(std::uint64_t q, std::uint64_t n) {
  if (n == 0 || std::gcd(q, n) != 1) {
    throw NotCoprime("q=" + std::to_string(q) + " and n=" + std::to_string(n) +
                     " are not coprime");
  }
  if (n == 1) return 1;
  u64 x = q % n;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (x == 1) return d;
    x = x * (q % n) % n;
  }
  throw NotCoprime("no multiplicative order");  // unreachable for coprime inputs
}

bool is_irreducible(std::uint32_t q, const Poly& f_in) {
  Poly f = f_in;
  trim(f);
  const int d = degree(f);
  if (d < 1) return false;
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = poly_powmod(h, q, f, q);
    const auto g = poly_gcd(f, poly_sub(h, x, q), q);
    if (degree(g) > 0) return false;
  }
  return true;
}

Poly find_irreducible(std::uint32_t q, std::uint32_t d) {
  if (d == 0) throw InvalidDimension("degree must be at least 1");
  u64 limit = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (limit > std::numeric_limits<u64>::max() / q) throw TooLarge("q^d does not fit in 64 bits");
    limit *= q;
  }
  for (u64 idx = 0; idx < limit; ++idx) {
    Poly f(d + 1, 0);
    f[d] = 1;
    u64 rest = idx;
    for (std::uint32_t i = 0; i < d; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    if (is_irreducible(q, f)) return f;
  }
  throw NoSuchElement("no irreducible polynomial found");  // unreachable
}

SplitField::SplitField(std::uint32_t q, std::uint32_t d, Poly modulus)
    : q_(q), d_(d), modulus_(std::move(modulus)), order_(1) {
  for (std::uint32_t i = 0; i < d_; ++i) order_ *= q_;
}

std::shared_ptr<const SplitField> SplitField::create(std::uint32_t q, std::uint32_t d) {
  GroundField{q};  // validates q
  if (d == 0) throw InvalidDimension("extension degree must be at least 1");
  if (q == 2 && d > kMaxBinaryDegree) {
    throw OracleUnavailable("oracle unavailable: GF(2^" + std::to_string(d) +
                            ") exceeds the degree cap of " + std::to_string(kMaxBinaryDegree));
  }
  u64 order = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    order *= q;
    if (order >= (u64{1} << 32)) {
      throw OracleUnavailable("oracle unavailable: GF(" + std::to_string(q) + "^" +
                              std::to_string(d) + ") has at least 2^32 elements");
    }
  }
  return std::shared_ptr<const SplitField>(new SplitField(q, d, find_irreducible(q, d)));
}

std::shared_ptr<const SplitField> SplitField::for_roots_of_unity(std::uint32_t q, std::uint32_t n) {
  GroundField{q};
  if (n == 0) throw InvalidDimension("n must be positive");
  const auto core = strip_factor(n, q);
  return create(q, core == 1 ? 1 : order_mod(q, core));
}

bool SplitFieldElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; });
}

bool SplitFieldElement::is_one() const {
  if (coeffs.empty() || coeffs[0] != 1) return false;
  return std::all_of(coeffs.begin() + 1, coeffs.end(), [](auto c) { return c == 0; });
}

bool operator==(const SplitFieldElement& a, const SplitFieldElement& b) {
  require_same_field(a, b);
  return a.coeffs == b.coeffs;
}

SplitFieldElement sf_zero(const std::shared_ptr<const SplitField>& field) {
  return make_element(field, {});
}

SplitFieldElement sf_one(const std::shared_ptr<const SplitField>& field) {
  return make_element(field, {1});
}

SplitFieldElement sf_from_poly(const std::shared_ptr<const SplitField>& field, const Poly& p) {
  Poly reduced(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) reduced[i] = p[i] % field->q();
  return make_element(field, poly_rem(std::move(reduced), field->modulus(), field->q()));
}

SplitFieldElement sf_from_index(const std::shared_ptr<const SplitField>& field, std::uint64_t index) {
  Poly p(field->degree(), 0);
  for (auto& c : p) {
    c = static_cast<std::uint32_t>(index % field->q());
    index /= field->q();
  }
  return SplitFieldElement{field, std::move(p)};
}

SplitFieldElement sf_add(const SplitFieldElement& a, const SplitFieldElement& b) {
  require_same_field(a, b);
  Poly out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a.coeffs[i] + b.coeffs[i]) % a.field->q();
  return SplitFieldElement{a.field, std::move(out)};
}

SplitFieldElement sf_sub(const SplitFieldElement& a, const SplitFieldElement& b) {
  require_same_field(a, b);
  const auto q = a.field->q();
  Poly out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a.coeffs[i] + q - b.coeffs[i]) % q;
  return SplitFieldElement{a.field, std::move(out)};
}

SplitFieldElement sf_mul(const SplitFieldElement& a, const SplitFieldElement& b) {
  require_same_field(a, b);
  const auto q = a.field->q();
  return make_element(a.field, poly_rem(poly_mul(as_poly(a), as_poly(b), q), a.field->modulus(), q));
}

SplitFieldElement sf_pow(const SplitFieldElement& a, std::uint64_t e) {
  auto result = sf_one(a.field);
  auto base = a;
  while (e) {
    if (e & 1) result = sf_mul(result, base);
    base = sf_mul(base, base);
    e >>= 1;
  }
  return result;
}

SplitFieldElement find_beta(const std::shared_ptr<const SplitField>& field, std::uint64_t n) {
  const u64 group = field->order() - 1;
  if (n == 0 || group % n != 0) {
    throw NoRoot("GF(" + std::to_string(field->q()) + "^" + std::to_string(field->degree()) +
                 ") has no element of order " + std::to_string(n));
  }
  const u64 cofactor = group / n;
  const auto primes = prime_factors(n);
  for (u64 idx = 1; idx <= group; ++idx) {
    const auto beta = sf_pow(sf_from_index(field, idx), cofactor);
    const bool primitive = std::all_of(primes.begin(), primes.end(), [&](u64 l) {
      return !sf_pow(beta, n / l).is_one();
    });
    if (primitive) return beta;
  }
  throw NoRoot("no element of order " + std::to_string(n));  // unreachable: the group is cyclic
}

SplitFieldElement find_cyclotomic_beta(const std::shared_ptr<const SplitField>& field,
                                       std::uint32_t n) {
  return find_beta(field, strip_factor(n, field->q()));
}

SplitFieldElement eval_at_beta(const CycloElement& a, const SplitFieldElement& beta) {
  if (a.field().characteristic() != beta.field->q()) {
    throw DimensionMismatch("element over GF(" + std::to_string(a.field().characteristic()) +
                            ") evaluated in a field of characteristic " +
                            std::to_string(beta.field->q()));
  }
  if (!sf_pow(beta, a.size()).is_one()) {
    throw OrderMismatch("beta^" + std::to_string(a.size()) + " != 1");
  }
  auto acc = sf_zero(beta.field);
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = sf_add(sf_mul(acc, beta), sf_from_poly(beta.field, {a[i].value}));
  }
  return acc;
}

SplitFieldElement gauss_gamma(const GaussParams& params, const SplitFieldElement& beta) {
  auto gamma = sf_zero(beta.field);
  u64 exponent = 1;
  for (std::uint32_t i = 0; i < params.k; ++i) {
    gamma = sf_add(gamma, sf_pow(beta, exponent));
    exponent = exponent * params.alpha % params.n;
  }
  return gamma;
}

std::size_t rank_mod(std::uint32_t q, std::vector<std::vector<std::uint32_t>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const u64 inv = inverse_mod(rows[rank][col], q);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(mulmod(v, inv, q));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const u64 factor = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) {
        rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + q - mulmod(factor, rows[rank][c], q)) % q);
      }
    }
    ++rank;
  }
  return rank;
}

bool verify_normal_basis(const GaussParams& params) {
  if (!is_prime(params.n) || params.n % params.q == 0) return false;
  const auto field = SplitField::for_roots_of_unity(params.q, params.n);
  const auto beta = find_beta(field, params.n);
  const auto gamma = gauss_gamma(params, beta);

  std::vector<std::vector<std::uint32_t>> rows;
  auto conjugate = gamma;
  for (std::uint32_t i = 0; i < params.m; ++i) {
    rows.push_back(conjugate.coeffs);
    conjugate = sf_pow(conjugate, params.q);
  }
  return conjugate == gamma && rank_mod(params.q, std::move(rows)) == params.m;
}

std::vector<CycloElement> subring_closure(std::span<const CycloElement> generators) {
  if (generators.empty()) return {};
  const auto& first = generators.front();
  for (const auto& g : generators) require_compatible(first, g);

  u64 size = 1;
  for (std::size_t i = 0; i < first.size(); ++i) {
    size *= first.field().characteristic();
    if (size > (u64{1} << 16)) throw TooLarge("p^n exceeds 2^16; closure is too large to enumerate");
  }

  std::vector<CycloElement> elements;
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::size_t> pending;
  const auto insert = [&](const CycloElement& e) {
    if (seen.insert(e.values()).second) {
      elements.push_back(e);
      pending.push_back(elements.size() - 1);
    }
  };
  for (const auto& g : generators) insert(g);

  OpCount scratch;
  while (!pending.empty()) {
    const auto idx = pending.front();
    pending.pop_front();
    for (std::size_t j = 0; j <= idx; ++j) {
      const auto x = elements[idx];
      const auto y = elements[j];
      insert(cy_add(x, y, scratch));
      insert(mul_direct(x, y, scratch));
    }
  }
  std::sort(elements.begin(), elements.end(),
            [](const CycloElement& a, const CycloElement& b) { return a.values() < b.values(); });
  return elements;
}

std::optional<CycloElement> subring_identity(std::span<const CycloElement> elements) {
  OpCount scratch;
  for (const auto& e : elements) {
    const bool identity = std::all_of(elements.begin(), elements.end(), [&](const CycloElement& x) {
      return mul_direct(e, x, scratch) == x;
    });
    if (identity) return e;
  }
  return std::nullopt;
}

}  // namespace cyclomul
