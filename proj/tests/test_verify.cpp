#include <gtest/gtest.h>

#include "cyclomul/errors.hpp"
#include "cyclomul/verify.hpp"

using namespace cyclomul;

TEST(Verify, BinarySuitesPass) {
  VerifyOptions opt;
  opt.p = 2;
  opt.max_n = 7;
  opt.exhaustive = true;
  opt.max_m = 6;
  const auto results = run_verify(opt);
  ASSERT_EQ(results.size(), 5u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
    EXPECT_GT(r.checks, 0u) << r.name;
  }
}

TEST(Verify, OddCharacteristicSuitesPass) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    VerifyOptions opt;
    opt.p = p;
    opt.max_n = 9;
    opt.samples = 100;
    for (const auto& r : run_verify(opt)) EXPECT_TRUE(r.passed) << p << " " << r.name << ": " << r.counterexample;
  }
}

TEST(Verify, RejectsBadCharacteristic) {
  VerifyOptions opt;
  opt.p = 4;
  EXPECT_THROW(run_verify(opt), NotPrime);
}
