#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclomul {

struct VerifyOptions {
  std::uint32_t p = 2;
  std::uint32_t max_n = 9;
  /// Enumerate every input pair while p^(2 size) stays within kExhaustiveCap.
  bool exhaustive = false;
  std::uint32_t samples = 200;
  std::uint64_t seed = 1;
  /// Largest normal-basis degree m for the end-to-end suite.
  std::uint32_t max_m = 6;

  static constexpr std::uint64_t kExhaustiveCap = 1u << 18;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  /// Inputs, expected and got of the first failure.
  std::string counterexample;
  /// Sizes the suite could not cover, e.g. because the splitting field is too big.
  std::vector<std::string> skipped;
};

/// The five sweeps behind `cyclomul verify`: ring equivalence, field
/// constant-difference, homomorphism to the splitting-field oracle, normal-basis
/// end-to-end and counter exactness. Throws NotPrime for a bad p.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

}  // namespace cyclomul
