#include "cyclomul/complexity.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

#include "cyclomul/cyclo.hpp"
#include "cyclomul/errors.hpp"
#include "cyclomul/gauss_onb.hpp"
#include "cyclomul/oracle.hpp"

namespace cyclomul {

namespace {

struct MultiplierInfo {
  Multiplier id;
  std::string_view name;
  std::string_view alias;
  std::uint32_t basis_k;
  bool odd_only;
};

constexpr std::array<MultiplierInfo, 13> kMultipliers{{
    {Multiplier::Direct, "direct", "", 0, false},
    {Multiplier::Cross, "alg1", "", 0, true},
    {Multiplier::PairedRing, "alg2-ring", "", 0, true},
    {Multiplier::PairedField, "alg2-field", "", 0, true},
    {Multiplier::GeneralCross, "general-ring0", "", 0, false},
    {Multiplier::GeneralPairedRing, "general-ring1", "", 0, false},
    {Multiplier::GeneralPairedField, "general-field1", "", 0, false},
    {Multiplier::Onb1Cross, "onb1-cross", "onb1-eq24", 1, false},
    {Multiplier::Onb1Paired, "onb1-paired", "onb1-eq25", 1, false},
    {Multiplier::Onb2FoldedCross, "onb2-folded-cross", "", 2, false},
    {Multiplier::Onb2FoldedPaired, "onb2-folded", "onb2-simpli", 2, false},
    {Multiplier::Onb2Cross, "onb2-cross", "onb2-eq29", 2, false},
    {Multiplier::Onb2Paired, "onb2-paired", "onb2-eq30", 2, false},
}};

constexpr std::array<Multiplier, 13> kAllMultipliers = [] {
  std::array<Multiplier, 13> out{};
  for (std::size_t i = 0; i < kMultipliers.size(); ++i) out[i] = kMultipliers[i].id;
  return out;
}();

const MultiplierInfo& info(Multiplier m) {
  return *std::find_if(kMultipliers.begin(), kMultipliers.end(),
                       [m](const MultiplierInfo& i) { return i.id == m; });
}

GaussParams checked_params(std::uint32_t m, std::uint32_t k, std::uint32_t q) {
  auto params = GaussParams::make(m, k, q);
  if (!normal_basis_exists(m, k, q)) {
    throw NoNormalBasis("no type-" + std::to_string(k) + " normal basis of degree " +
                        std::to_string(m) + " over GF(" + std::to_string(q) + ")");
  }
  return params;
}

OpCount oc(std::int64_t mult, std::int64_t doub, std::int64_t add) {
  return OpCount{static_cast<std::uint64_t>(mult), static_cast<std::uint64_t>(doub),
                 static_cast<std::uint64_t>(add)};
}

using X = std::int64_t;

CountFormula row(std::string label, std::string description, CountTable table, char variable,
                 std::function<OpCount(X)> counts, std::function<X(X)> total,
                 std::vector<Multiplier> measured_by, std::uint32_t p, std::uint32_t basis_k = 0,
                 std::function<X(X)> measure_size = [](X x) { return x; }) {
  return CountFormula{std::move(label), std::move(description), table,    variable,
                      std::move(counts), std::move(total),      std::move(measured_by),
                      p,                 basis_k,               false,
                      std::move(measure_size)};
}

CountFormula odd(CountFormula f) {
  f.odd_only = true;
  return f;
}

std::vector<CountFormula> build_table1() {
  const auto t = CountTable::Table1;
  using M = Multiplier;
  return {
      odd(row("t1.cross", "diagonal + cross products, rings and fields", t, 'n',
          [](X n) { return oc(n * n, 0, (n - 1) * n); }, [](X n) { return 2 * n * n - n; },
          {M::Cross, M::GeneralCross}, 3)),
      odd(row("t1.paired-ring", "paired sums with broadcast, rings (general)", t, 'n',
          [](X n) { return oc((n + 1) * n / 2, n, (3 * n + 1) * n / 2 - 1); },
          [](X n) { return 2 * n * n + 2 * n - 1; }, {M::PairedRing, M::GeneralPairedRing}, 3)),
      odd(row("t1.paired-ring-gf2", "paired sums with broadcast, rings over GF(2)", t, 'n',
          [](X n) { return oc((n + 1) * n / 2, 0, (3 * n - 1) * n / 2 - 1); },
          [](X n) { return 2 * n * n - 1; }, {M::PairedRing, M::GeneralPairedRing}, 2)),
      odd(row("t1.paired-field", "paired sums, fields (general)", t, 'n',
          [](X n) { return oc((n + 1) * n / 2, n, 3 * (n - 1) * n / 2); },
          [](X n) { return 2 * n * n; }, {M::PairedField, M::GeneralPairedField}, 3)),
      odd(row("t1.paired-field-gf2", "paired sums, fields over GF(2)", t, 'n',
          [](X n) { return oc((n - 1) * n / 2, 0, (3 * n - 5) * n / 2); },
          [](X n) { return 2 * n * n - 3 * n; }, {M::PairedField, M::GeneralPairedField}, 2)),
      row("t1.direct", "direct convolution", t, 'n', [](X n) { return oc(n * n, 0, (n - 1) * n); },
          [](X n) { return 2 * n * n - n; }, {M::Direct}, 2),
  };
}

std::vector<CountFormula> build_table6() {
  const auto t = CountTable::Table6;
  using M = Multiplier;
  const auto next = [](X m) { return m + 1; };
  return {
      odd(row("t6.rings-cross", "rings, shift-accumulate cross products", t, 'n',
          [](X n) { return oc(n * n, 0, n * n - n); }, [](X n) { return 2 * n * n - n; },
          {M::Cross}, 2)),
      odd(row("t6.rings-paired", "rings, shift-accumulate paired sums", t, 'n',
          [](X n) { return oc((n * n + n) / 2, 0, (3 * n * n - n) / 2 - 1); },
          [](X n) { return 2 * n * n - 1; }, {M::PairedRing}, 2)),
      odd(row("t6.rings-redundant-drolet-geiselmann", "rings, redundant (prior work)", t, 'n',
          [](X n) { return oc(n * n, 0, n * n - n); }, [](X n) { return 2 * n * n - n; }, {}, 2)),

      row("t6.onb1-ring-cross", "ONB-I via whole-ring cross products", t, 'm',
          [](X m) { return oc(m * m + 2 * m + 1, 0, m * m + m); },
          [](X m) { return 2 * m * m + 3 * m + 1; }, {M::Cross}, 2, 1, next),
      row("t6.onb1-ring-paired", "ONB-I via whole-field paired sums", t, 'm',
          [](X m) { return oc((m * m + m) / 2, 0, (3 * m * m + m - 2) / 2); },
          [](X m) { return 2 * m * m + m - 1; }, {M::PairedField}, 2, 1, next),
      row("t6.onb1-cross", "ONB-I cross products with r correction", t, 'm',
          [](X m) { return oc(m * m, 0, m * m - 1); }, [](X m) { return 2 * m * m - 1; },
          {M::Onb1Cross}, 2, 1),
      row("t6.onb1-paired", "ONB-I paired sums with t correction", t, 'm',
          [](X m) { return oc((m * m + m) / 2, 0, (3 * m * m - m) / 2 - 1); },
          [](X m) { return 2 * m * m - 1; }, {M::Onb1Paired}, 2, 1),
      row("t6.onb1-redundant-wu", "ONB-I redundant (prior work)", t, 'm',
          [](X m) { return oc(m * m + m, 0, m * m + m); }, [](X m) { return 2 * m * m + 2 * m; },
          {}, 2, 1),
      row("t6.onb1-wang", "ONB-I (prior work)", t, 'm',
          [](X m) { return oc(m * m, 0, 2 * m * m - 2 * m); },
          [](X m) { return 3 * m * m - 2 * m; }, {}, 2, 1),
      row("t6.onb1-hasan2-rey4", "ONB-I (prior work)", t, 'm',
          [](X m) { return oc(m * m, 0, m * m - 1); }, [](X m) { return 2 * m * m - 1; }, {}, 2, 1),
      row("t6.onb1-rey2", "ONB-I (prior work)", t, 'm',
          [](X m) { return oc((m * m + m) / 2, 0, (3 * m * m - m) / 2 - 1); },
          [](X m) { return 2 * m * m - 1; }, {}, 2, 1),

      row("t6.onb2-folded-cross", "ONB-II folded cross products", t, 'm',
          [](X m) { return oc(2 * m * m + m, 0, 2 * m * m); },
          [](X m) { return 4 * m * m + m; }, {M::Onb2FoldedCross}, 2, 2),
      row("t6.onb2-folded", "ONB-II folded paired sums", t, 'm',
          [](X m) { return oc(m * m, 0, 3 * m * m - m); }, [](X m) { return 4 * m * m - m; },
          {M::Onb2FoldedPaired}, 2, 2),
      row("t6.onb2-cross", "ONB-II symmetric cross products", t, 'm',
          [](X m) { return oc(m * m, 0, (3 * m * m - 3 * m) / 2); },
          [](X m) { return (5 * m * m - 3 * m) / 2; }, {M::Onb2Cross}, 2, 2),
      row("t6.onb2-paired", "ONB-II symmetric paired sums", t, 'm',
          [](X m) { return oc((m * m + m) / 2, 0, 2 * m * m - 2 * m); },
          [](X m) { return (5 * m * m - 3 * m) / 2; }, {M::Onb2Paired}, 2, 2),
      row("t6.onb2-redundant-wu", "ONB-II redundant (prior work)", t, 'm',
          [](X m) { return oc(m * m, 0, 2 * m * m - m); }, [](X m) { return 3 * m * m - m; }, {},
          2, 2),
      row("t6.onb2-wang", "ONB-II (prior work)", t, 'm',
          [](X m) { return oc(m * m, 0, 2 * m * m - 2 * m); },
          [](X m) { return 3 * m * m - 2 * m; }, {}, 2, 2),
      row("t6.onb2-rey4-sunar", "ONB-II (prior work)", t, 'm',
          [](X m) { return oc(m * m, 0, (3 * m * m - 3 * m) / 2); },
          [](X m) { return (5 * m * m - 3 * m) / 2; }, {}, 2, 2),
      row("t6.onb2-rey2", "ONB-II (prior work)", t, 'm',
          [](X m) { return oc((m * m + m) / 2, 0, 2 * m * m - 2 * m); },
          [](X m) { return (5 * m * m - 3 * m) / 2; }, {}, 2, 2),
  };
}

std::vector<std::int64_t> random_vector(std::mt19937_64& rng, std::uint32_t p, std::size_t len) {
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = dist(rng);
  return v;
}

std::string format_counts(std::string_view prefix, const OpCount& c) {
  std::ostringstream os;
  os << prefix << ".mult=" << c.mult << ' ' << prefix << ".doub=" << c.doub << ' ' << prefix
     << ".add=" << c.add << ' ' << prefix << ".total=" << c.total();
  return os.str();
}

}  // namespace

std::span<const Multiplier> all_multipliers() { return kAllMultipliers; }

std::string_view multiplier_id(Multiplier m) { return info(m).name; }

std::optional<Multiplier> parse_multiplier(std::string_view id) {
  for (const auto& i : kMultipliers) {
    if (id == i.name || (!i.alias.empty() && id == i.alias)) return i.id;
  }
  return std::nullopt;
}

std::uint32_t basis_type(Multiplier m) { return info(m).basis_k; }

bool needs_odd_dimension(Multiplier m) { return info(m).odd_only; }

bool normal_basis_exists(std::uint32_t m, std::uint32_t k, std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, bool> cache;
  const auto key = std::make_tuple(m, k, q);
  {
    std::lock_guard lock(mutex);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
  }
  bool exists = false;
  try {
    exists = verify_normal_basis(GaussParams::make(m, k, q));
  } catch (const NotPrime&) {
    exists = false;
  } catch (const NoSuchElement&) {
    exists = false;
  } catch (const InvalidDimension&) {
    exists = false;
  }
  std::lock_guard lock(mutex);
  cache[key] = exists;
  return exists;
}

MultiplyResult run_multiplier(Multiplier m, std::uint32_t p, std::uint32_t size,
                              std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                              OpCount& count) {
  if (a.size() != size || b.size() != size) {
    throw DimensionMismatch("expected " + std::to_string(size) + " coordinates per operand, got " +
                            std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  const GroundField field(p);
  const auto k = basis_type(m);
  if (k != 0) {
    const auto params = checked_params(size, k, p);
    const auto x = NormalBasisElement::from_values(params, a);
    const auto y = NormalBasisElement::from_values(params, b);
    switch (m) {
      case Multiplier::Onb1Cross:
        return {mul_onb1(x, y, Onb1Variant::Cross, count).values(), std::nullopt};
      case Multiplier::Onb1Paired:
        return {mul_onb1(x, y, Onb1Variant::Paired, count).values(), std::nullopt};
      case Multiplier::Onb2FoldedCross:
        return {mul_onb2(x, y, Onb2Variant::FoldedCross, count).values(), std::nullopt};
      case Multiplier::Onb2FoldedPaired:
        return {mul_onb2(x, y, Onb2Variant::FoldedPaired, count).values(), std::nullopt};
      case Multiplier::Onb2Cross:
        return {mul_onb2(x, y, Onb2Variant::Cross, count).values(), std::nullopt};
      case Multiplier::Onb2Paired:
        return {mul_onb2(x, y, Onb2Variant::Paired, count).values(), std::nullopt};
      default:
        break;
    }
  }
  const auto x = CycloElement::from_values(field, a);
  const auto y = CycloElement::from_values(field, b);
  const auto rooted = [](const RootedProduct& r) {
    return MultiplyResult{r.product.values(), r.root.values()};
  };
  switch (m) {
    case Multiplier::Direct:
      return {mul_direct(x, y, count).values(), std::nullopt};
    case Multiplier::Cross:
      return rooted(mul_cross(x, y, count));
    case Multiplier::PairedRing:
      return rooted(mul_paired(x, y, AlgebraKind::Ring, count));
    case Multiplier::PairedField:
      return rooted(mul_paired(x, y, AlgebraKind::Field, count));
    case Multiplier::GeneralCross:
      return {mul_general(x, y, GeneralForm::Cross, count).values(), std::nullopt};
    case Multiplier::GeneralPairedRing:
      return {mul_general(x, y, GeneralForm::PairedRing, count).values(), std::nullopt};
    case Multiplier::GeneralPairedField:
      return {mul_general(x, y, GeneralForm::PairedField, count).values(), std::nullopt};
    default:
      throw UnsupportedCombination("unhandled multiplier");
  }
}

const std::vector<CountFormula>& count_formulas(CountTable table) {
  static const auto t1 = build_table1();
  static const auto t6 = build_table6();
  return table == CountTable::Table1 ? t1 : t6;
}

const CountFormula& find_formula(std::string_view label) {
  for (const auto table : {CountTable::Table1, CountTable::Table6}) {
    for (const auto& r : count_formulas(table)) {
      if (r.label == label) return r;
    }
  }
  throw UnsupportedCombination("unknown table row '" + std::string(label) + "'");
}

bool row_covers(const CountFormula& row, std::int64_t x) {
  return x >= 2 && (!row.odd_only || x % 2 == 1);
}

OpCount expected_counts(const CountFormula& row, std::int64_t x) {
  if (x < 2) throw InvalidDimension("table formulas need a size of at least 2");
  return row.counts(x);
}

OpCount measure(Multiplier m, std::uint32_t p, std::uint32_t size, std::uint64_t seed,
                int samples) {
  const auto unsupported = [&](const std::string& why) {
    return UnsupportedCombination(std::string(multiplier_id(m)) + " at p=" + std::to_string(p) +
                                  ", size=" + std::to_string(size) + ": " + why);
  };
  if (needs_odd_dimension(m) && size % 2 == 0) throw unsupported("requires odd n");
  if (const auto k = basis_type(m); k != 0 && !normal_basis_exists(size, k, p)) {
    throw unsupported("no normal basis of this type");
  }

  std::mt19937_64 rng(seed);
  std::optional<OpCount> first;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    const auto a = random_vector(rng, p, size);
    const auto b = random_vector(rng, p, size);
    OpCount count;
    try {
      run_multiplier(m, p, size, a, b, count);
    } catch (const Error& e) {
      throw unsupported(e.what());
    }
    if (!first) {
      first = count;
    } else if (!(*first == count)) {
      std::ostringstream os;
      os << multiplier_id(m) << " counts depend on the input: " << *first << " vs " << count;
      throw std::logic_error(os.str());
    }
  }
  return *first;
}

std::vector<ReportRecord> render_table(CountTable table, std::span<const std::int64_t> sizes) {
  std::vector<ReportRecord> records;
  for (const auto& r : count_formulas(table)) {
    for (const auto x : sizes) {
      if (!row_covers(r, x)) continue;
      if (r.basis_k != 0 && !normal_basis_exists(static_cast<std::uint32_t>(x), r.basis_k, r.p)) {
        continue;
      }
      const auto expected = expected_counts(r, x);
      if (r.measured_by.empty()) {
        records.push_back({r.label, "", x, expected, std::nullopt, std::nullopt});
        continue;
      }
      for (const auto m : r.measured_by) {
        const auto ms = r.measure_size(x);
        if (needs_odd_dimension(m) && ms % 2 == 0) continue;
        const auto measured = measure(m, r.p, static_cast<std::uint32_t>(ms));
        records.push_back({r.label, std::string(multiplier_id(m)), x, expected, measured,
                           measured == expected});
      }
    }
  }
  return records;
}

std::string format_structured(std::span<const ReportRecord> records) {
  std::ostringstream os;
  for (const auto& r : records) {
    os << "row_label=" << r.row_label;
    if (!r.multiplier.empty()) os << " multiplier=" << r.multiplier;
    os << " size=" << r.size << ' ' << format_counts("expected", r.expected);
    if (r.measured) {
      os << ' ' << format_counts("measured", *r.measured);
    } else {
      os << " measured=null";
    }
    os << " match=" << (r.match ? (*r.match ? "true" : "false") : "null") << '\n';
  }
  return os.str();
}

std::string format_human(std::span<const ReportRecord> records) {
  std::ostringstream os;
  os << std::left << std::setw(38) << "row" << std::setw(18) << "multiplier" << std::right
     << std::setw(5) << "size" << std::setw(22) << "expected m/d/a" << std::setw(22)
     << "measured m/d/a" << "  result\n";
  const auto triple = [](const OpCount& c) {
    return std::to_string(c.mult) + "/" + std::to_string(c.doub) + "/" + std::to_string(c.add);
  };
  for (const auto& r : records) {
    os << std::left << std::setw(38) << r.row_label << std::setw(18)
       << (r.multiplier.empty() ? "-" : r.multiplier) << std::right << std::setw(5) << r.size
       << std::setw(22) << triple(r.expected) << std::setw(22)
       << (r.measured ? triple(*r.measured) : std::string("-")) << "  "
       << (r.match ? (*r.match ? "MATCH" : "MISMATCH") : "formula") << '\n';
  }
  return os.str();
}

}  // namespace cyclomul
