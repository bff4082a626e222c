// cyclomul: multiply, verify, count and tabulate cyclotomic multipliers.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclomul/complexity.hpp"
#include "cyclomul/errors.hpp"
#include "cyclomul/ground_field.hpp"
#include "cyclomul/text_format.hpp"
#include "cyclomul/verify.hpp"

namespace {

using namespace cyclomul;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint32_t p = 2;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> m;
  std::string algo;
  std::string a;
  std::string b;
  bool show_sqrt = false;
  std::string output = "text";
  std::uint32_t max_n = 9;
  bool exhaustive = false;
  std::uint32_t samples = 200;
  std::uint64_t seed = 1;
  std::uint32_t max_m = 12;
  std::uint32_t verify_max_m = 6;
  std::string which;
  std::string sizes;
  std::string out;
};

void require_prime(std::uint32_t p) {
  if (p >= GroundField::kMaxCharacteristic || !is_prime(p)) {
    throw UsageError("--p: p must be prime (got " + std::to_string(p) + ")");
  }
}

Multiplier require_algo(const std::string& id) {
  if (auto m = parse_multiplier(id)) return *m;
  throw UsageError("--algo: unknown multiplier '" + id + "'");
}

// --n for whole-ring multipliers, --m for normal-basis ones.
std::uint32_t require_size(const Config& cfg, Multiplier m) {
  if (basis_type(m) != 0) {
    if (!cfg.m) throw UsageError("--m is required for " + std::string(multiplier_id(m)));
    if (cfg.n) throw UsageError("--n does not apply to " + std::string(multiplier_id(m)));
    return *cfg.m;
  }
  if (!cfg.n) throw UsageError("--n is required for " + std::string(multiplier_id(m)));
  if (cfg.m) throw UsageError("--m does not apply to " + std::string(multiplier_id(m)));
  return *cfg.n;
}

std::vector<std::int64_t> parse_flag(const std::string& flag, const std::string& text,
                                     std::uint32_t p, std::size_t len) {
  try {
    return parse_vector(text, p, len);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// Writes to --out when given, stdout otherwise.
void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("--out: cannot open " + cfg.out);
  file << text;
}

int cmd_mul(const Config& cfg) {
  require_prime(cfg.p);
  const auto algo = require_algo(cfg.algo);
  const auto size = require_size(cfg, algo);
  const auto a = parse_flag("--a", cfg.a, cfg.p, size);
  const auto b = parse_flag("--b", cfg.b, cfg.p, size);
  OpCount count;
  const auto result = run_multiplier(algo, cfg.p, size, a, b, count);
  const bool structured = cfg.output == "structured";
  if (cfg.show_sqrt && !result.root) {
    throw UsageError("--show-sqrt: " + cfg.algo + " does not produce a square root");
  }
  std::ostringstream os;
  if (structured) {
    os << "product=" << format_vector(result.product) << '\n';
    if (cfg.show_sqrt) os << "sqrt=" << format_vector(*result.root) << '\n';
  } else if (cfg.show_sqrt) {
    os << "product: " << format_vector(result.product) << '\n'
       << "sqrt:    " << format_vector(*result.root) << '\n';
  } else {
    os << format_vector(result.product) << '\n';
  }
  emit(cfg, os.str());
  return kOk;
}

int cmd_count(const Config& cfg) {
  require_prime(cfg.p);
  const auto algo = require_algo(cfg.algo);
  const auto size = require_size(cfg, algo);
  const auto measured = measure(algo, cfg.p, size, cfg.seed);
  std::vector<ReportRecord> records;
  for (const auto table : {CountTable::Table1, CountTable::Table6}) {
    for (const auto& row : count_formulas(table)) {
      if ((row.p == 2) != (cfg.p == 2) || (table == CountTable::Table6 && cfg.p != 2)) continue;
      for (const auto m : row.measured_by) {
        if (m != algo) continue;
        // The row's own size variable maps onto the multiplier's size.
        for (std::int64_t x = 2; x <= static_cast<std::int64_t>(size); ++x) {
          if (row.measure_size(x) != size || !row_covers(row, x)) continue;
          const auto expected = expected_counts(row, x);
          records.push_back({row.label, cfg.algo, x, expected, measured, measured == expected});
        }
      }
    }
  }
  std::ostringstream os;
  if (records.empty()) {
    os << "multiplier=" << multiplier_id(algo) << " size=" << size << " measured.mult="
       << measured.mult << " measured.doub=" << measured.doub << " measured.add=" << measured.add
       << " measured.total=" << measured.total() << '\n';
  } else {
    os << (cfg.output == "structured" ? format_structured(records) : format_human(records));
  }
  emit(cfg, os.str());
  for (const auto& r : records) {
    if (r.match == false) return kVerifyFailed;
  }
  return kOk;
}

std::vector<std::int64_t> parse_sizes(const std::string& text) {
  std::vector<std::int64_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto value = std::stoll(item, &used);
      if (used != item.size() || value < 2) throw std::invalid_argument(item);
      sizes.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("--sizes: '" + item + "' is not an integer >= 2");
    }
  }
  if (sizes.empty()) throw UsageError("--sizes: empty list");
  return sizes;
}

int cmd_table(const Config& cfg) {
  const bool t1 = cfg.which == "table1";
  std::vector<std::int64_t> sizes;
  if (!cfg.sizes.empty()) {
    sizes = parse_sizes(cfg.sizes);
  } else {
    for (std::int64_t x = t1 ? 3 : 2; x <= (t1 ? 13 : 12); ++x) sizes.push_back(x);
  }
  const auto records = render_table(t1 ? CountTable::Table1 : CountTable::Table6, sizes);
  emit(cfg, cfg.output == "structured" ? format_structured(records) : format_human(records));
  for (const auto& r : records) {
    if (r.match == false) return kVerifyFailed;
  }
  return kOk;
}

int cmd_verify(const Config& cfg) {
  require_prime(cfg.p);
  VerifyOptions opt;
  opt.p = cfg.p;
  opt.max_n = cfg.max_n;
  opt.exhaustive = cfg.exhaustive;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.max_m = std::min<std::uint32_t>(cfg.verify_max_m, 12);
  const auto results = run_verify(opt);
  bool ok = true;
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
    for (const auto& s : r.skipped) os << "  skipped " << s << '\n';
    if (!r.passed) os << "  first counterexample: " << r.counterexample << '\n';
    ok = ok && r.passed;
  }
  emit(cfg, os.str());
  return ok ? kOk : kVerifyFailed;
}

int cmd_onb_scan(const Config& cfg) {
  require_prime(cfg.p);
  std::ostringstream os;
  const bool structured = cfg.output == "structured";
  for (std::uint32_t m = 2; m <= cfg.max_m; ++m) {
    for (const std::uint32_t k : {1u, 2u}) {
      const auto n = m * k + 1;
      const bool prime = is_prime(n);
      std::string status = "no";
      if (prime) {
        try {
          status = normal_basis_exists(m, k, cfg.p) ? "yes" : "no";
        } catch (const OracleUnavailable&) {
          status = "unknown";
        }
      }
      if (structured) {
        os << "m=" << m << " k=" << k << " n=" << n << " n_prime=" << (prime ? "true" : "false")
           << " onb=" << (status == "yes" ? "true" : status == "no" ? "false" : "null") << '\n';
      } else {
        os << "m=" << m << " k=" << k << " n=" << n << (prime ? "" : " (not prime)") << ": ";
        if (status == "yes") {
          os << (k == 1 ? "ONB-I" : "ONB-II") << " exists\n";
        } else if (status == "no") {
          os << "no type-(" << m << "," << k << ") basis\n";
        } else {
          os << "splitting field too large to check\n";
        }
      }
    }
  }
  emit(cfg, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclotomic ring, field and optimal normal basis multipliers"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "Characteristic of the ground field")->capture_default_str();
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Write the output to this file");
  };
  const auto add_operands = [&](CLI::App* sub) {
    add_p(sub);
    sub->add_option("--n", cfg.n, "Ring dimension n (whole-ring multipliers)");
    sub->add_option("--m", cfg.m, "Extension degree m (normal-basis multipliers)");
    sub->add_option("--algo", cfg.algo, "Multiplier id")->required();
  };

  auto* mul = app.add_subcommand("mul", "Multiply two vectors");
  add_operands(mul);
  mul->add_option("--a", cfg.a, "First operand, e.g. 1,0,1")->required();
  mul->add_option("--b", cfg.b, "Second operand")->required();
  mul->add_flag("--show-sqrt", cfg.show_sqrt, "Also print the lanes before the final permutation");
  add_output(mul);

  auto* count = app.add_subcommand("count", "Measure the operation counts of a multiplier");
  add_operands(count);
  count->add_option("--seed", cfg.seed, "Seed for the random inputs")->capture_default_str();
  add_output(count);

  auto* verify = app.add_subcommand("verify", "Run the equivalence and count suites");
  add_p(verify);
  verify->add_option("--max-n", cfg.max_n, "Largest ring dimension")->capture_default_str();
  verify->add_flag("--exhaustive", cfg.exhaustive, "Enumerate all input pairs where feasible");
  verify->add_option("--samples", cfg.samples, "Random pairs per size")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  verify->add_option("--max-m", cfg.verify_max_m, "Largest normal-basis degree (at most 12)")
      ->capture_default_str();
  verify->add_option("--out", cfg.out, "Write the output to this file");

  auto* table = app.add_subcommand("table", "Expected vs measured operation counts");
  table->add_option("--which", cfg.which, "Which table")
      ->required()
      ->check(CLI::IsMember({"table1", "table6"}));
  table->add_option("--sizes", cfg.sizes, "Comma-separated sizes (n or m)");
  add_output(table);

  auto* scan = app.add_subcommand("onb-scan", "List optimal normal bases of type I and II");
  add_p(scan);
  scan->add_option("--max-m", cfg.max_m, "Largest degree")
      ->capture_default_str()
      ->check(CLI::Range(2, 12));
  add_output(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*mul) return cmd_mul(cfg);
    if (*count) return cmd_count(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*table) return cmd_table(cfg);
    return cmd_onb_scan(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
