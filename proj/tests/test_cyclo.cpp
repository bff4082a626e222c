#include <gtest/gtest.h>

#include <algorithm>

#include "cyclomul/cyclo.hpp"
#include "cyclomul/errors.hpp"
#include "support/brute.hpp"

using namespace cyclomul;
using brute::Vec;

namespace {

CycloElement el(std::uint32_t p, const Vec& v) { return CycloElement::from_values(GroundField(p), v); }

OpCount none() { return {}; }

}  // namespace

TEST(CycloElement, Construction) {
  const GroundField f(3);
  EXPECT_THROW(CycloElement::from_values(f, {1}), InvalidDimension);
  EXPECT_THROW(CycloElement::from_values(f, {1, 3}), InvalidCoordinate);
  EXPECT_EQ(CycloElement::one(f, 4).values(), (Vec{1, 0, 0, 0}));
  EXPECT_EQ(CycloElement::basis(f, 4, 6).values(), (Vec{0, 0, 1, 0}));
  EXPECT_EQ(CycloElement::zero(f, 3).values(), (Vec{0, 0, 0}));
}

TEST(CycloElement, IncompatibleOperands) {
  OpCount c;
  EXPECT_THROW(mul_direct(el(2, {1, 0, 1}), el(2, {1, 0, 1, 1}), c), DimensionMismatch);
  EXPECT_THROW(mul_direct(el(2, {1, 0, 1}), el(3, {1, 0, 1}), c), DimensionMismatch);
}

TEST(CycloElement, ShiftRotatesTowardsIndexZero) {
  EXPECT_EQ(cy_shift(el(5, {0, 1, 2, 3, 4}), 1).values(), (Vec{1, 2, 3, 4, 0}));
  EXPECT_EQ(cy_shift(el(5, {0, 1, 2, 3, 4}), -1).values(), (Vec{4, 0, 1, 2, 3}));
}

TEST(CycloElement, AddAndSubCountOneAdditionPerCoordinate) {
  OpCount c;
  EXPECT_EQ(cy_add(el(5, {1, 2, 3}), el(5, {4, 4, 4}), c).values(), (Vec{0, 1, 2}));
  EXPECT_EQ(cy_sub(el(5, {1, 2, 3}), el(5, {4, 4, 4}), c).values(), (Vec{2, 3, 4}));
  EXPECT_EQ(c, (OpCount{0, 0, 6}));
}

// The GF(4) embedding into GF(2)[x]/(x^3 + 1): 1 -> (0,1,1), alpha -> (1,1,0),
// 1 + alpha -> (1,0,1).
TEST(CycloElement, SmallFieldEmbedding) {
  const Vec one{0, 1, 1}, alpha{1, 1, 0}, alpha1{1, 0, 1};
  OpCount c;
  for (auto* mul : {+[](const CycloElement& a, const CycloElement& b, OpCount& k) {
                      return mul_direct(a, b, k);
                    },
                    +[](const CycloElement& a, const CycloElement& b, OpCount& k) {
                      return mul_cross(a, b, k).product;
                    },
                    +[](const CycloElement& a, const CycloElement& b, OpCount& k) {
                      return mul_paired(a, b, AlgebraKind::Ring, k).product;
                    }}) {
    EXPECT_EQ(mul(el(2, alpha), el(2, alpha), c).values(), alpha1);
    EXPECT_EQ(mul(el(2, alpha), el(2, alpha1), c).values(), one);
    EXPECT_EQ(mul(el(2, one), el(2, alpha1), c).values(), alpha1);
  }
  EXPECT_EQ(mul_direct(el(2, {1, 1, 0}), el(2, {1, 0, 1}), c).values(), (Vec{0, 1, 1}));
}

TEST(CycloElement, SqrtPermutationLaneMap) {
  EXPECT_EQ(sqrt_perm_targets(7), (std::vector<std::size_t>{0, 2, 4, 6, 1, 3, 5}));
  EXPECT_EQ(sqrt_perm_targets(3), (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(sqrt_perm(el(7, {0, 1, 2, 3, 4, 5, 6})).values(), (Vec{0, 4, 1, 5, 2, 6, 3}));
  EXPECT_THROW(sqrt_perm_targets(6), OddDimensionRequired);
}

TEST(CycloElement, CrossDataflowForSeven) {
  Dataflow flow;
  OpCount c;
  brute::Gen gen(1);
  mul_cross(el(2, gen.vec(2, 7)), el(2, gen.vec(2, 7)), c, &flow);
  ASSERT_EQ(flow.cycles.size(), 3u);
  // Upper row of the first cycle reads a_1..a_6,a_0 and the lower a_6,a_0..a_5.
  const std::vector<std::pair<std::size_t, std::size_t>> first{
      {1, 6}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {6, 4}, {0, 5}};
  EXPECT_EQ(flow.cycles[0], first);
  for (std::size_t j = 1; j <= 3; ++j) {
    for (std::size_t i = 0; i < 7; ++i) {
      EXPECT_EQ(flow.cycles[j - 1][i], std::make_pair((i + j) % 7, (i + 7 - j) % 7));
    }
  }
  Dataflow paired;
  mul_paired(el(2, gen.vec(2, 7)), el(2, gen.vec(2, 7)), AlgebraKind::Field, c, &paired);
  EXPECT_EQ(paired.cycles, flow.cycles);
}

TEST(CycloElement, OddOnlyMultipliersRejectEvenN) {
  OpCount c;
  const auto a = el(2, {1, 0, 1, 1});
  EXPECT_THROW(mul_cross(a, a, c), OddDimensionRequired);
  EXPECT_THROW(mul_paired(a, a, AlgebraKind::Ring, c), OddDimensionRequired);
  EXPECT_NO_THROW(mul_general(a, a, GeneralForm::PairedField, c));
}

TEST(CycloElement, DirectMatchesHandConvolution) {
  brute::Gen gen(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = gen.prime();
    const auto n = static_cast<std::size_t>(gen.range(2, 12));
    const auto a = gen.vec(p, n), b = gen.vec(p, n);
    OpCount c;
    EXPECT_EQ(mul_direct(el(p, a), el(p, b), c).values(), brute::convolve(p, a, b));
    EXPECT_EQ(c, (OpCount{n * n, 0, n * (n - 1)})) << "counts are input independent";
  }
}

// Exhaustive over GF(2) for small odd n, random for larger p.
TEST(CycloElement, RingFormsEqualConvolution) {
  for (std::size_t n : {3u, 5u}) {
    const auto all = brute::all_vectors(2, n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto want = brute::convolve(2, a, b);
        OpCount c;
        ASSERT_EQ(mul_cross(el(2, a), el(2, b), c).product.values(), want);
        ASSERT_EQ(mul_paired(el(2, a), el(2, b), AlgebraKind::Ring, c).product.values(), want);
        ASSERT_EQ(mul_general(el(2, a), el(2, b), GeneralForm::Cross, c).values(), want);
        ASSERT_EQ(mul_general(el(2, a), el(2, b), GeneralForm::PairedRing, c).values(), want);
      }
    }
  }
  brute::Gen gen(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = gen.prime();
    const auto n = static_cast<std::size_t>(gen.range(2, 14));
    const auto a = gen.vec(p, n), b = gen.vec(p, n);
    const auto want = brute::convolve(p, a, b);
    OpCount c;
    ASSERT_EQ(mul_general(el(p, a), el(p, b), GeneralForm::Cross, c).values(), want);
    ASSERT_EQ(mul_general(el(p, a), el(p, b), GeneralForm::PairedRing, c).values(), want);
    ASSERT_TRUE(brute::differ_by_constant(
        p, mul_general(el(p, a), el(p, b), GeneralForm::PairedField, c).values(), want));
    if (n % 2 == 1) {
      ASSERT_EQ(mul_cross(el(p, a), el(p, b), c).product.values(), want);
      ASSERT_EQ(mul_paired(el(p, a), el(p, b), AlgebraKind::Ring, c).product.values(), want);
      ASSERT_TRUE(brute::differ_by_constant(
          p, mul_paired(el(p, a), el(p, b), AlgebraKind::Field, c).product.values(), want));
    }
  }
}

TEST(CycloElement, RootIsPermutedProduct) {
  brute::Gen gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = gen.prime();
    const auto n = gen.odd(3, 13);
    const auto a = el(p, gen.vec(p, n)), b = el(p, gen.vec(p, n));
    OpCount c;
    const auto r = mul_cross(a, b, c);
    EXPECT_EQ(sqrt_perm(r.root), r.product);
    EXPECT_EQ(inverse_sqrt_perm(r.product), r.root);
    const auto q = mul_paired(a, b, AlgebraKind::Field, c);
    EXPECT_EQ(sqrt_perm(q.root), q.product);
  }
}

// In characteristic 2 squaring is i -> 2i mod n, so the lanes hold a genuine
// square root of the product.
TEST(CycloElement, RootSquaresToProductOverGf2) {
  brute::Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = gen.odd(3, 15);
    const auto a = el(2, gen.vec(2, n)), b = el(2, gen.vec(2, n));
    OpCount c;
    const auto r = mul_cross(a, b, c);
    EXPECT_EQ(mul_direct(r.root, r.root, c), r.product);
  }
}

TEST(CycloElement, SqrtPermPreservesCoordinateMultiset) {
  brute::Gen gen(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = gen.odd(3, 21);
    auto v = gen.vec(13, n);
    auto w = sqrt_perm(el(13, v)).values();
    std::sort(v.begin(), v.end());
    std::sort(w.begin(), w.end());
    EXPECT_EQ(v, w);
  }
}

TEST(CycloElement, CommutativityAndDistributivity) {
  brute::Gen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = gen.prime();
    const auto n = gen.odd(3, 11);
    const auto a = el(p, gen.vec(p, n)), b = el(p, gen.vec(p, n)), d = el(p, gen.vec(p, n));
    OpCount c;
    EXPECT_EQ(mul_direct(a, b, c), mul_direct(b, a, c));
    EXPECT_EQ(mul_cross(a, b, c).product, mul_cross(b, a, c).product);
    EXPECT_EQ(mul_paired(a, b, AlgebraKind::Field, c).product,
              mul_paired(b, a, AlgebraKind::Field, c).product);
    EXPECT_EQ(mul_direct(a, cy_add(b, d, c), c),
              cy_add(mul_direct(a, b, c), mul_direct(a, d, c), c));
  }
}

TEST(CycloElement, FieldEquality) {
  EXPECT_TRUE(fields_equal(el(5, {1, 2, 3}), el(5, {3, 4, 0})));
  EXPECT_FALSE(fields_equal(el(5, {1, 2, 3}), el(5, {3, 4, 1})));
  EXPECT_TRUE(equal_as(el(5, {1, 2, 3}), el(5, {3, 4, 0}), AlgebraKind::Field));
  EXPECT_FALSE(equal_as(el(5, {1, 2, 3}), el(5, {3, 4, 0}), AlgebraKind::Ring));
}

TEST(CycloElement, CountsMatchClosedForms) {
  brute::Gen gen(8);
  for (std::uint64_t n = 3; n <= 13; n += 2) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto a = el(p, gen.vec(p, n)), b = el(p, gen.vec(p, n));
      OpCount cross, ring, field;
      mul_cross(a, b, cross);
      mul_paired(a, b, AlgebraKind::Ring, ring);
      mul_paired(a, b, AlgebraKind::Field, field);
      EXPECT_EQ(cross, (OpCount{n * n, 0, n * (n - 1)}));
      if (p == 2) {
        EXPECT_EQ(ring, (OpCount{(n + 1) * n / 2, 0, (3 * n - 1) * n / 2 - 1}));
        EXPECT_EQ(field, (OpCount{(n - 1) * n / 2, 0, (3 * n - 5) * n / 2}));
      } else {
        EXPECT_EQ(ring, (OpCount{(n + 1) * n / 2, n, (3 * n + 1) * n / 2 - 1}));
        EXPECT_EQ(field, (OpCount{(n + 1) * n / 2, n, 3 * (n - 1) * n / 2}));
      }
    }
  }
}
