#include <gtest/gtest.h>

#include "cyclomul/errors.hpp"
#include "cyclomul/text_format.hpp"
#include "support/brute.hpp"

using namespace cyclomul;

TEST(TextFormat, Parses) {
  EXPECT_EQ(parse_vector("1,0,1,1,0,0,1", 2, 7), (std::vector<std::int64_t>{1, 0, 1, 1, 0, 0, 1}));
  EXPECT_EQ(parse_vector(" 4, 0 ,2", 5, 3), (std::vector<std::int64_t>{4, 0, 2}));
}

TEST(TextFormat, Rejects) {
  EXPECT_THROW(parse_vector("1,0", 2, 3), ParseError);
  EXPECT_THROW(parse_vector("1,0,2", 2, 3), ParseError);
  EXPECT_THROW(parse_vector("1,-1,0", 3, 3), ParseError);
  EXPECT_THROW(parse_vector("1,,0", 3, 3), ParseError);
  EXPECT_THROW(parse_vector("1,x,0", 3, 3), ParseError);
  EXPECT_THROW(parse_vector("1,0,0,", 3, 3), ParseError);
  EXPECT_THROW(parse_vector("", 3, 1), ParseError);
  EXPECT_THROW(parse_vector("1.5", 3, 1), ParseError);
}

TEST(TextFormat, RoundTrip) {
  brute::Gen gen(41);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = gen.prime();
    const auto n = static_cast<std::size_t>(gen.range(1, 20));
    const auto v = gen.vec(p, n);
    EXPECT_EQ(parse_vector(format_vector(v), p, n), v);
  }
}
