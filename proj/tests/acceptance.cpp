// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cyclomul/complexity.hpp"
#include "cyclomul/cyclo.hpp"
#include "cyclomul/errors.hpp"
#include "cyclomul/gauss_onb.hpp"
#include "cyclomul/oracle.hpp"
#include "support/brute.hpp"

using namespace cyclomul;
using brute::Vec;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::printf("criterion %d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CycloElement el(std::uint32_t p, const Vec& v) { return CycloElement::from_values(GroundField(p), v); }

// Calls f on every pair (p = 2 exhaustive sizes) or on `samples` random pairs.
void for_pairs(std::uint32_t p, std::size_t n, bool exhaustive, int samples, brute::Gen& gen,
               const std::function<void(const Vec&, const Vec&)>& f) {
  if (exhaustive) {
    const auto all = brute::all_vectors(p, n);
    for (const auto& a : all) {
      for (const auto& b : all) f(a, b);
    }
    return;
  }
  for (int s = 0; s < samples; ++s) f(gen.vec(p, n), gen.vec(p, n));
}

std::string counts(const OpCount& c) {
  return std::to_string(c.mult) + "/" + std::to_string(c.doub) + "/" + std::to_string(c.add);
}

Outcome ring_equivalence() {
  const auto start = Clock::now();
  brute::Gen gen(1001);
  std::uint64_t pairs = 0, mismatches = 0;
  const auto sweep = [&](std::uint32_t p, std::size_t n, bool exhaustive, int samples) {
    for_pairs(p, n, exhaustive, samples, gen, [&](const Vec& av, const Vec& bv) {
      const auto a = el(p, av), b = el(p, bv);
      OpCount c;
      const auto want = mul_direct(a, b, c);
      ++pairs;
      mismatches += want.values() != brute::convolve(p, av, bv);
      mismatches += mul_cross(a, b, c).product != want;
      mismatches += mul_paired(a, b, AlgebraKind::Ring, c).product != want;
      mismatches += mul_general(a, b, GeneralForm::Cross, c) != want;
      mismatches += mul_general(a, b, GeneralForm::PairedRing, c) != want;
    });
  };
  for (std::size_t n : {3u, 5u, 7u}) sweep(2, n, true, 0);
  for (std::uint32_t p : {3u, 5u}) {
    for (std::size_t n : {3u, 5u, 7u, 9u}) sweep(p, n, false, 1000);
  }
  const auto t = seconds_since(start);
  return {mismatches == 0 && t < 10.0,
          std::to_string(mismatches) + " mismatches over " + std::to_string(pairs) +
              " pairs, " + std::to_string(t) + " s (limit 10 s)"};
}

Outcome field_variants() {
  brute::Gen gen(1002);
  std::uint64_t pairs = 0, mismatches = 0;
  const auto sweep = [&](std::uint32_t p, std::size_t n, bool exhaustive, int samples) {
    const auto beta = find_cyclotomic_beta(
        SplitField::for_roots_of_unity(p, static_cast<std::uint32_t>(n)), static_cast<std::uint32_t>(n));
    for_pairs(p, n, exhaustive, samples, gen, [&](const Vec& av, const Vec& bv) {
      const auto a = el(p, av), b = el(p, bv);
      OpCount c;
      const auto want = mul_direct(a, b, c);
      const auto target = sf_mul(eval_at_beta(a, beta), eval_at_beta(b, beta));
      ++pairs;
      for (const auto& got : {mul_paired(a, b, AlgebraKind::Field, c).product,
                              mul_general(a, b, GeneralForm::PairedField, c)}) {
        mismatches += !fields_equal(got, want);
        mismatches += !(eval_at_beta(got, beta) == target);
      }
    });
  };
  for (std::size_t n : {3u, 5u, 7u}) sweep(2, n, true, 0);
  for (std::uint32_t p : {3u, 5u}) {
    for (std::size_t n : {3u, 5u, 7u, 9u}) sweep(p, n, false, 1000);
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over " +
                               std::to_string(pairs) + " pairs (constant difference and oracle)"};
}

Outcome even_dimensions() {
  brute::Gen gen(1003);
  std::uint64_t pairs = 0, mismatches = 0;
  for (std::size_t n : {4u, 6u, 8u}) {
    for_pairs(2, n, n == 4, 500, gen, [&](const Vec& av, const Vec& bv) {
      const auto a = el(2, av), b = el(2, bv);
      OpCount c;
      const auto want = mul_direct(a, b, c);
      ++pairs;
      mismatches += mul_general(a, b, GeneralForm::Cross, c) != want;
      mismatches += mul_general(a, b, GeneralForm::PairedRing, c) != want;
      mismatches += !fields_equal(mul_general(a, b, GeneralForm::PairedField, c), want);
    });
  }
  return {mismatches == 0,
          std::to_string(mismatches) + " mismatches over " + std::to_string(pairs) + " pairs"};
}

Outcome first_table_counts() {
  using U = std::uint64_t;
  struct Row {
    const char* name;
    Multiplier m;
    std::uint32_t p;
    std::function<OpCount(U)> f;
  };
  const std::vector<Row> rows{
      {"direct", Multiplier::Direct, 2, [](U n) { return OpCount{n * n, 0, (n - 1) * n}; }},
      {"alg1", Multiplier::Cross, 2, [](U n) { return OpCount{n * n, 0, (n - 1) * n}; }},
      {"alg1 q=3", Multiplier::Cross, 3, [](U n) { return OpCount{n * n, 0, (n - 1) * n}; }},
      {"alg2 ring GF(2)", Multiplier::PairedRing, 2,
       [](U n) { return OpCount{(n + 1) * n / 2, 0, (3 * n - 1) * n / 2 - 1}; }},
      {"alg2 field GF(2)", Multiplier::PairedField, 2,
       [](U n) { return OpCount{(n - 1) * n / 2, 0, (3 * n - 5) * n / 2}; }},
      {"alg2 ring q=3", Multiplier::PairedRing, 3,
       [](U n) { return OpCount{(n + 1) * n / 2, n, (3 * n + 1) * n / 2 - 1}; }},
      {"alg2 field q=3", Multiplier::PairedField, 3,
       [](U n) { return OpCount{(n + 1) * n / 2, n, 3 * (n - 1) * n / 2}; }},
      {"general ring0", Multiplier::GeneralCross, 3, [](U n) { return OpCount{n * n, 0, (n - 1) * n}; }},
      {"general ring1 q=3", Multiplier::GeneralPairedRing, 3,
       [](U n) { return OpCount{(n + 1) * n / 2, n, (3 * n + 1) * n / 2 - 1}; }},
      {"general field1 q=3", Multiplier::GeneralPairedField, 3,
       [](U n) { return OpCount{(n + 1) * n / 2, n, 3 * (n - 1) * n / 2}; }},
  };
  int checked = 0;
  for (const auto& r : rows) {
    for (U n = 3; n <= 13; n += 2) {
      const auto got = measure(r.m, r.p, static_cast<std::uint32_t>(n));
      ++checked;
      if (!(got == r.f(n))) {
        return {false, std::string(r.name) + " n=" + std::to_string(n) + " expected " +
                           counts(r.f(n)) + " got " + counts(got)};
      }
    }
  }
  return {true, std::to_string(checked) + " (row, n) pairs exact for odd n in 3..13"};
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kOnbCases{
    {2, 1}, {4, 1}, {10, 1}, {3, 2}, {5, 2}, {6, 2}};

Outcome normal_basis_end_to_end() {
  const auto start = Clock::now();
  brute::Gen gen(1005);
  std::uint64_t pairs = 0, mismatches = 0;
  for (const auto& [m, k] : kOnbCases) {
    const auto params = onb_params(m, k, 2);
    const auto beta = find_cyclotomic_beta(SplitField::for_roots_of_unity(2, params.n), params.n);
    const auto embed = [k = k](const NormalBasisElement& e) {
      return k == 1 ? embed_onb1(e) : embed_onb2(e);
    };
    for_pairs(2, m, m <= 4, 500, gen, [&](const Vec& av, const Vec& bv) {
      const auto a = NormalBasisElement::from_values(params, av);
      const auto b = NormalBasisElement::from_values(params, bv);
      const auto want = mul_onb_reference(a, b);
      OpCount c;
      ++pairs;
      if (k == 1) {
        mismatches += mul_onb1(a, b, Onb1Variant::Cross, c) != want;
        mismatches += mul_onb1(a, b, Onb1Variant::Paired, c) != want;
      } else {
        for (const auto v : {Onb2Variant::FoldedCross, Onb2Variant::FoldedPaired,
                             Onb2Variant::Cross, Onb2Variant::Paired}) {
          mismatches += mul_onb2(a, b, v, c) != want;
        }
      }
      mismatches += !(eval_at_beta(embed(want), beta) ==
                      sf_mul(eval_at_beta(embed(a), beta), eval_at_beta(embed(b), beta)));
    });
  }
  const auto t = seconds_since(start);
  return {mismatches == 0 && t < 60.0,
          std::to_string(mismatches) + " mismatches over " + std::to_string(pairs) +
              " pairs, " + std::to_string(t) + " s (limit 60 s)"};
}

Outcome sixth_table_counts() {
  using U = std::uint64_t;
  struct Row {
    const char* name;
    Multiplier m;
    std::function<OpCount(U)> f;
  };
  const std::vector<Row> rows{
      {"onb1 cross", Multiplier::Onb1Cross, [](U m) { return OpCount{m * m, 0, m * m - 1}; }},
      {"onb1 paired", Multiplier::Onb1Paired,
       [](U m) { return OpCount{(m * m + m) / 2, 0, (3 * m * m - m) / 2 - 1}; }},
      {"onb2 folded", Multiplier::Onb2FoldedPaired,
       [](U m) { return OpCount{m * m, 0, 3 * m * m - m}; }},
      {"onb2 cross", Multiplier::Onb2Cross,
       [](U m) { return OpCount{m * m, 0, (3 * m * m - 3 * m) / 2}; }},
      {"onb2 paired", Multiplier::Onb2Paired,
       [](U m) { return OpCount{(m * m + m) / 2, 0, 2 * m * m - 2 * m}; }},
  };
  int checked = 0;
  for (const auto& r : rows) {
    for (U m = 2; m <= 12; ++m) {
      if (!brute::gauss_normal_basis_gf2(static_cast<std::uint32_t>(m), basis_type(r.m))) continue;
      const auto got = measure(r.m, 2, static_cast<std::uint32_t>(m));
      ++checked;
      if (!(got == r.f(m))) {
        return {false, std::string(r.name) + " m=" + std::to_string(m) + " expected " +
                           counts(r.f(m)) + " got " + counts(got)};
      }
    }
  }
  return {true, std::to_string(checked) + " (row, m) pairs exact for every m <= 12 with a basis"};
}

Outcome worked_examples() {
  std::vector<std::string> problems;
  const std::vector<CycloElement> gens{el(2, {1, 1, 0})};
  const auto closure = subring_closure(gens);
  std::vector<Vec> values;
  for (const auto& e : closure) values.push_back(e.values());
  if (values != std::vector<Vec>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) {
    problems.push_back("closure");
  }
  const auto id = subring_identity(closure);
  if (!id || id->values() != Vec{0, 1, 1}) problems.push_back("identity");

  if (sqrt_perm_targets(7) != std::vector<std::size_t>{0, 2, 4, 6, 1, 3, 5}) {
    problems.push_back("lane map");
  }

  PairTrace trace;
  OpCount c;
  const auto params = onb_params(3, 2, 2);
  mul_onb2(NormalBasisElement::from_values(params, std::vector<std::int64_t>{1, 0, 1}),
           NormalBasisElement::from_values(params, std::vector<std::int64_t>{1, 1, 0}),
           Onb2Variant::Cross, c, &trace);
  const std::vector<std::vector<std::pair<std::size_t, std::size_t>>> schedule{
      {{2, 0}, {3, 1}, {3, 2}}, {{3, 1}, {3, 0}, {2, 1}}, {{3, 2}, {2, 1}, {1, 0}}};
  bool same = trace.cycles.size() == 3;
  for (std::size_t j = 0; same && j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      same = same && std::make_pair(trace.cycles[j][i].first, trace.cycles[j][i].second) ==
                         schedule[j][i];
    }
  }
  if (!same) problems.push_back("type-II pair schedule");

  std::string detail = problems.empty() ? "closure, identity, lane map and pair schedule reproduced"
                                        : "mismatch in";
  for (const auto& p : problems) detail += " " + p;
  return {problems.empty(), detail};
}

Outcome gauss_validation() {
  std::vector<std::string> problems;
  for (const auto& [m, k] : kOnbCases) {
    if (!verify_normal_basis(GaussParams::make(m, k, 2))) {
      problems.push_back("(" + std::to_string(m) + "," + std::to_string(k) + ") rejected");
    }
  }
  if (verify_normal_basis(GaussParams{3, 1, 4, 1, 2})) problems.push_back("(3,1) accepted");
  if (verify_normal_basis(GaussParams::make(6, 1, 2))) problems.push_back("(6,1) rank < m accepted");

  std::vector<std::uint32_t> type1, type2;
  for (std::uint32_t m = 2; m <= 12; ++m) {
    for (std::uint32_t k : {1u, 2u}) {
      const bool found = normal_basis_exists(m, k, 2);
      if (found != brute::gauss_normal_basis_gf2(m, k)) {
        problems.push_back("scan disagrees with independent rank check at (" +
                           std::to_string(m) + "," + std::to_string(k) + ")");
      }
      if (found) (k == 1 ? type1 : type2).push_back(m);
    }
  }
  if (type1 != std::vector<std::uint32_t>{2, 4, 10, 12}) problems.push_back("type-I list");
  if (type2 != std::vector<std::uint32_t>{2, 3, 5, 6, 9, 11}) problems.push_back("type-II list");

  std::string detail = problems.empty()
                           ? "type I at m = 2,4,10,12; type II at m = 2,3,5,6,9,11; rank-deficient "
                             "and composite cases rejected"
                           : "";
  for (const auto& p : problems) detail += p + "; ";
  return {problems.empty(), detail};
}

void run(int id, const std::string& title, Outcome (*f)()) {
  try {
    report(id, title, f());
  } catch (const std::exception& e) {
    report(id, title, {false, std::string("exception: ") + e.what()});
  }
}

}  // namespace

int main() {
  run(1, "ring equivalence", ring_equivalence);
  run(2, "field variants", field_variants);
  run(3, "even n", even_dimensions);
  run(4, "first table counts", first_table_counts);
  run(5, "normal basis end to end", normal_basis_end_to_end);
  run(6, "normal basis table counts", sixth_table_counts);
  run(7, "worked examples", worked_examples);
  run(8, "Gauss period validation", gauss_validation);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
