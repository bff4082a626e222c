#include "cyclomul/verify.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "cyclomul/complexity.hpp"
#include "cyclomul/cyclo.hpp"
#include "cyclomul/errors.hpp"
#include "cyclomul/gauss_onb.hpp"
#include "cyclomul/oracle.hpp"
#include "cyclomul/text_format.hpp"

namespace cyclomul {

namespace {

using Values = std::vector<std::int64_t>;
using Check = std::function<std::optional<std::string>(const Values&, const Values&)>;

bool fits_exhaustive(std::uint32_t p, std::size_t len) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < 2 * len; ++i) {
    total *= p;
    if (total > VerifyOptions::kExhaustiveCap) return false;
  }
  return true;
}

Values digits(std::uint64_t index, std::uint32_t p, std::size_t len) {
  Values v(len);
  for (auto& x : v) {
    x = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return v;
}

// Feeds input pairs to `check` until one fails; records it in `result`.
void sweep(SuiteResult& result, const VerifyOptions& opt, std::size_t len, std::mt19937_64& rng,
           const Check& check) {
  if (!result.passed) return;
  const auto run = [&](const Values& a, const Values& b) {
    ++result.checks;
    if (auto failure = check(a, b)) {
      result.passed = false;
      result.counterexample =
          "a=" + format_vector(a) + " b=" + format_vector(b) + " " + *failure;
      return false;
    }
    return true;
  };
  if (opt.exhaustive && fits_exhaustive(opt.p, len)) {
    std::uint64_t per = 1;
    for (std::size_t i = 0; i < len; ++i) per *= opt.p;
    for (std::uint64_t i = 0; i < per; ++i) {
      const auto a = digits(i, opt.p, len);
      for (std::uint64_t j = 0; j < per; ++j) {
        if (!run(a, digits(j, opt.p, len))) return;
      }
    }
    return;
  }
  std::uniform_int_distribution<std::int64_t> dist(0, opt.p - 1);
  Values a(len), b(len);
  for (std::uint32_t s = 0; s < opt.samples; ++s) {
    for (auto& x : a) x = dist(rng);
    for (auto& x : b) x = dist(rng);
    if (!run(a, b)) return;
  }
}

std::string mismatch(std::string_view what, std::size_t size, const Values& expected,
                     const Values& got) {
  return std::string(what) + " size=" + std::to_string(size) + " expected=" +
         format_vector(expected) + " got=" + format_vector(got);
}

std::string show(const SplitFieldElement& e) {
  std::vector<std::int64_t> v(e.coeffs.begin(), e.coeffs.end());
  return "[" + format_vector(v) + "]";
}

SuiteResult ring_suite(const VerifyOptions& opt, const GroundField& field, std::mt19937_64& rng) {
  SuiteResult r;
  r.name = "ring-equivalence";
  for (std::uint32_t n = 2; n <= opt.max_n; ++n) {
    sweep(r, opt, n, rng, [&](const Values& av, const Values& bv) -> std::optional<std::string> {
      const auto a = CycloElement::from_values(field, av);
      const auto b = CycloElement::from_values(field, bv);
      OpCount c;
      const auto want = mul_direct(a, b, c);
      std::vector<std::pair<std::string_view, CycloElement>> got;
      got.emplace_back("general-ring0", mul_general(a, b, GeneralForm::Cross, c));
      got.emplace_back("general-ring1", mul_general(a, b, GeneralForm::PairedRing, c));
      if (n % 2 == 1) {
        got.emplace_back("alg1", mul_cross(a, b, c).product);
        got.emplace_back("alg2-ring", mul_paired(a, b, AlgebraKind::Ring, c).product);
      }
      for (const auto& [name, prod] : got) {
        if (prod != want) return mismatch(name, n, want.values(), prod.values());
      }
      const auto swapped = mul_direct(b, a, c);
      if (swapped != want) return mismatch("direct(b,a)", n, want.values(), swapped.values());
      return std::nullopt;
    });
  }
  return r;
}

SuiteResult field_suite(const VerifyOptions& opt, const GroundField& field, std::mt19937_64& rng) {
  SuiteResult r;
  r.name = "field-constant-difference";
  for (std::uint32_t n = 2; n <= opt.max_n; ++n) {
    sweep(r, opt, n, rng, [&](const Values& av, const Values& bv) -> std::optional<std::string> {
      const auto a = CycloElement::from_values(field, av);
      const auto b = CycloElement::from_values(field, bv);
      OpCount c;
      const auto want = mul_direct(a, b, c);
      const auto general = mul_general(a, b, GeneralForm::PairedField, c);
      if (!fields_equal(general, want)) {
        return mismatch("general-field1", n, want.values(), general.values());
      }
      if (n % 2 == 1) {
        const auto paired = mul_paired(a, b, AlgebraKind::Field, c).product;
        if (!fields_equal(paired, want)) {
          return mismatch("alg2-field", n, want.values(), paired.values());
        }
      }
      return std::nullopt;
    });
  }
  return r;
}

SuiteResult homomorphism_suite(const VerifyOptions& opt, const GroundField& field,
                               std::mt19937_64& rng) {
  SuiteResult r;
  r.name = "oracle-homomorphism";
  for (std::uint32_t n = 2; n <= opt.max_n; ++n) {
    std::optional<SplitFieldElement> beta;
    try {
      beta = find_cyclotomic_beta(SplitField::for_roots_of_unity(opt.p, n), n);
    } catch (const OracleUnavailable& e) {
      r.skipped.push_back("n=" + std::to_string(n) + ": " + e.what());
      continue;
    }
    sweep(r, opt, n, rng, [&](const Values& av, const Values& bv) -> std::optional<std::string> {
      const auto a = CycloElement::from_values(field, av);
      const auto b = CycloElement::from_values(field, bv);
      OpCount c;
      const auto want = sf_mul(eval_at_beta(a, *beta), eval_at_beta(b, *beta));
      std::vector<std::pair<std::string_view, CycloElement>> got;
      got.emplace_back("direct", mul_direct(a, b, c));
      got.emplace_back("general-field1", mul_general(a, b, GeneralForm::PairedField, c));
      if (n % 2 == 1) got.emplace_back("alg2-field", mul_paired(a, b, AlgebraKind::Field, c).product);
      for (const auto& [name, prod] : got) {
        const auto value = eval_at_beta(prod, *beta);
        if (!(value == want)) {
          return std::string(name) + " n=" + std::to_string(n) + " expected " + show(want) +
                 " got " + show(value);
        }
      }
      return std::nullopt;
    });
  }
  return r;
}

SuiteResult onb_suite(const VerifyOptions& opt, std::mt19937_64& rng) {
  SuiteResult r;
  r.name = "normal-basis-end-to-end";
  const std::vector<Multiplier> onb1{Multiplier::Onb1Cross, Multiplier::Onb1Paired};
  const std::vector<Multiplier> onb2{Multiplier::Onb2FoldedCross, Multiplier::Onb2FoldedPaired,
                                     Multiplier::Onb2Cross, Multiplier::Onb2Paired};
  for (std::uint32_t m = 2; m <= opt.max_m; ++m) {
    for (const std::uint32_t k : {1u, 2u}) {
      bool exists = false;
      try {
        exists = normal_basis_exists(m, k, opt.p);
      } catch (const OracleUnavailable& e) {
        r.skipped.push_back("m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " +
                            e.what());
        continue;
      }
      if (!exists) continue;
      const auto params = GaussParams::make(m, k, opt.p);
      const auto beta =
          find_cyclotomic_beta(SplitField::for_roots_of_unity(opt.p, params.n), params.n);
      const auto embed = [k](const NormalBasisElement& e) {
        return k == 1 ? embed_onb1(e) : embed_onb2(e);
      };
      sweep(r, opt, m, rng, [&](const Values& av, const Values& bv) -> std::optional<std::string> {
        const auto a = NormalBasisElement::from_values(params, av);
        const auto b = NormalBasisElement::from_values(params, bv);
        const auto want = mul_onb_reference(a, b);
        const auto where = "m=" + std::to_string(m) + " k=" + std::to_string(k);
        for (const auto mult : k == 1 ? onb1 : onb2) {
          OpCount c;
          const auto got = run_multiplier(mult, opt.p, m, av, bv, c).product;
          if (got != want.values()) {
            return mismatch(multiplier_id(mult), m, want.values(), got) + " " + where;
          }
        }
        const auto lhs = eval_at_beta(embed(want), beta);
        const auto rhs = sf_mul(eval_at_beta(embed(a), beta), eval_at_beta(embed(b), beta));
        if (!(lhs == rhs)) {
          return "homomorphism " + where + " expected " + show(rhs) + " got " + show(lhs);
        }
        return std::nullopt;
      });
    }
  }
  return r;
}

SuiteResult counter_suite(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "counter-exactness";
  const bool binary = opt.p == 2;
  const auto check = [&](const CountFormula& row, Multiplier m, std::int64_t x) {
    if (!r.passed) return;
    const auto size = static_cast<std::uint32_t>(row.measure_size(x));
    if (!row_covers(row, x) || (needs_odd_dimension(m) && size % 2 == 0)) return;
    ++r.checks;
    const auto expected = expected_counts(row, x);
    OpCount measured;
    try {
      measured = measure(m, opt.p, size, opt.seed);
    } catch (const std::exception& e) {
      r.passed = false;
      r.counterexample = row.label + " " + std::string(multiplier_id(m)) + ": " + e.what();
      return;
    }
    if (!(measured == expected)) {
      std::ostringstream os;
      os << row.label << ' ' << multiplier_id(m) << " size=" << x << " expected " << expected
         << " got " << measured;
      r.passed = false;
      r.counterexample = os.str();
    }
  };
  for (const auto& row : count_formulas(CountTable::Table1)) {
    if ((row.p == 2) != binary) continue;
    for (std::int64_t n = 2; n <= opt.max_n; ++n) {
      for (const auto m : row.measured_by) check(row, m, n);
    }
  }
  if (!binary) return r;
  for (const auto& row : count_formulas(CountTable::Table6)) {
    for (std::int64_t x = 2; x <= (row.variable == 'n' ? opt.max_n : opt.max_m); ++x) {
      if (row.basis_k != 0) {
        try {
          if (!normal_basis_exists(static_cast<std::uint32_t>(x), row.basis_k, 2)) continue;
        } catch (const OracleUnavailable&) {
          continue;
        }
      }
      for (const auto m : row.measured_by) check(row, m, x);
    }
  }
  return r;
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  const GroundField field(options.p);
  if (options.max_n < 2) throw InvalidDimension("max-n must be at least 2");
  std::mt19937_64 rng(options.seed);
  std::vector<SuiteResult> out;
  out.push_back(ring_suite(options, field, rng));
  out.push_back(field_suite(options, field, rng));
  out.push_back(homomorphism_suite(options, field, rng));
  out.push_back(onb_suite(options, rng));
  out.push_back(counter_suite(options));
  return out;
}

}  // namespace cyclomul
