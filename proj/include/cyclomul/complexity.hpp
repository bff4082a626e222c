#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclomul/ground_field.hpp"

namespace cyclomul {

/// Every multiplier the library implements, addressable by a stable id.
enum class Multiplier {
  Direct,
  Cross,
  PairedRing,
  PairedField,
  GeneralCross,
  GeneralPairedRing,
  GeneralPairedField,
  Onb1Cross,
  Onb1Paired,
  Onb2FoldedCross,
  Onb2FoldedPaired,
  Onb2Cross,
  Onb2Paired,
};

std::span<const Multiplier> all_multipliers();
/// Canonical id, e.g. "alg2-ring" or "onb2-cross".
std::string_view multiplier_id(Multiplier m);
/// Accepts canonical ids and the historical aliases (onb1-eq24, ...).
std::optional<Multiplier> parse_multiplier(std::string_view id);
/// 0 for whole-ring multipliers, otherwise the Gauss period type k.
std::uint32_t basis_type(Multiplier m);
/// Whether the multiplier is only defined for odd n.
bool needs_odd_dimension(Multiplier m);

/// Product computed by a multiplier identified at run time.
struct MultiplyResult {
  std::vector<std::int64_t> product;
  std::optional<std::vector<std::int64_t>> root;  // sqrt(AB), shift-accumulate forms only
};

/// Runs a multiplier on coordinate vectors. size is n for whole-ring
/// multipliers and m for normal-basis ones.
MultiplyResult run_multiplier(Multiplier m, std::uint32_t p, std::uint32_t size,
                              std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                              OpCount& count);

/// Whether the normal basis of type (m, k) over GF(q) exists. Memoised.
/// Throws OracleUnavailable when the check cannot be carried out.
bool normal_basis_exists(std::uint32_t m, std::uint32_t k, std::uint32_t q);

enum class CountTable { Table1, Table6 };

/// Closed-form operation counts of one comparison-table row.
struct CountFormula {
  std::string label;
  std::string description;
  CountTable table;
  char variable;  // 'n' or 'm'
  std::function<OpCount(std::int64_t)> counts;
  std::function<std::int64_t(std::int64_t)> total;  // the table's Total column
  std::vector<Multiplier> measured_by;              // empty: formula only
  std::uint32_t p = 2;                              // ground field for measurement
  std::uint32_t basis_k = 0;                        // rows over an ONB: its type
  bool odd_only = false;                            // formula stated for odd n only
  std::function<std::int64_t(std::int64_t)> measure_size = [](std::int64_t x) { return x; };
};

const std::vector<CountFormula>& count_formulas(CountTable table);
/// Throws UnsupportedCombination for unknown labels.
const CountFormula& find_formula(std::string_view label);

/// Whether the row's formula covers size x (x >= 2, odd when required).
/// Basis existence is checked separately.
bool row_covers(const CountFormula& row, std::int64_t x);

/// Throws InvalidDimension if x < 2.
OpCount expected_counts(const CountFormula& row, std::int64_t x);

/// Runs the multiplier on `samples` random input pairs with fresh counters,
/// checks the counts agree, and returns them. Throws UnsupportedCombination
/// when the multiplier is undefined at (p, size).
OpCount measure(Multiplier m, std::uint32_t p, std::uint32_t size, std::uint64_t seed = 1,
                int samples = 3);

struct ReportRecord {
  std::string row_label;
  std::string multiplier;  // empty for formula-only rows
  std::int64_t size = 0;
  OpCount expected;
  std::optional<OpCount> measured;
  std::optional<bool> match;
};

/// One record per (row, measuring multiplier, size) for every size at which
/// the row applies. ONB rows skip sizes where the basis does not exist.
std::vector<ReportRecord> render_table(CountTable table, std::span<const std::int64_t> sizes);

/// One record per line, space-separated key=value pairs.
std::string format_structured(std::span<const ReportRecord> records);
/// Column-aligned text for people.
std::string format_human(std::span<const ReportRecord> records);

}  // namespace cyclomul
