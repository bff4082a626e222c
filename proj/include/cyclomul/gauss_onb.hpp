#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclomul/cyclo.hpp"
#include "cyclomul/ground_field.hpp"

namespace cyclomul {

/// Gauss period of type (m, k) over GF(q): n = mk + 1 prime, alpha of order k
/// in Z_n^*. The period gamma = sum_{i<k} beta^(alpha^i) lives in the
/// cyclotomic field of dimension n.
struct GaussParams {
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint32_t alpha = 0;
  std::uint32_t q = 0;

  /// Structural checks only (q prime, n prime, k | n - 1). Throws NotPrime or
  /// NoSuchElement. Whether gamma generates a normal basis is decided by
  /// verify_normal_basis.
  static GaussParams make(std::uint32_t m, std::uint32_t k, std::uint32_t q);

  GroundField field() const { return GroundField(q); }

  friend bool operator==(const GaussParams&, const GaussParams&) = default;
};

/// Smallest element of Z_n^* with multiplicative order exactly k.
std::uint32_t find_alpha(std::uint32_t n, std::uint32_t k);

/// GaussParams whose period is confirmed to generate a normal basis of
/// GF(q^m). Throws NoNormalBasis otherwise, OracleUnavailable when the
/// splitting field is too large to check.
GaussParams onb_params(std::uint32_t m, std::uint32_t k, std::uint32_t q);

/// Field element a_1 beta + ... + a_m beta^m (type I) or
/// sum a_i (beta^i + beta^-i) (type II).
///
/// Type-I coordinates are kept in the order [beta^1, ..., beta^m], which is a
/// permutation of the Frobenius order; see to_frobenius_order.
class NormalBasisElement {
 public:
  NormalBasisElement(GaussParams params, std::vector<Coord> coords);
  static NormalBasisElement from_values(GaussParams params, std::span<const std::int64_t> values);

  const GaussParams& params() const { return params_; }
  GroundField field() const { return params_.field(); }
  std::size_t size() const { return coords_.size(); }
  std::span<const Coord> coords() const { return coords_; }
  /// 1-based, matching a_1..a_m.
  Coord coord(std::size_t i) const { return coords_[i - 1]; }
  std::vector<std::int64_t> values() const;

  friend bool operator==(const NormalBasisElement&, const NormalBasisElement&) = default;

 private:
  GaussParams params_;
  std::vector<Coord> coords_;
};

/// Folding index for type II: s(i) = i for i <= m, 2m + 1 - i otherwise,
/// after reducing i mod 2m + 1.
std::size_t s_fold(std::int64_t i, std::size_t m);

/// (0, a_1, ..., a_m). Throws WrongBasisType unless k = 1.
CycloElement embed_onb1(const NormalBasisElement& a);
/// (c_1 - c_0, ..., c_m - c_0); counts m additions.
NormalBasisElement extract_onb1(const CycloElement& c, const GaussParams& params, OpCount& count);

/// (0, a_1, ..., a_m, a_m, ..., a_1). Throws WrongBasisType unless k = 2.
CycloElement embed_onb2(const NormalBasisElement& a);
/// (c_1 - c_0, ..., c_m - c_0). Throws NotFoldable unless c_i = c_{n-i}.
NormalBasisElement extract_onb2(const CycloElement& c, const GaussParams& params, OpCount& count);

/// Coordinate index (1-based) holding the Frobenius-order coordinate of
/// gamma^(q^i).
std::size_t frobenius_slot(const GaussParams& params, std::size_t i);
/// Coordinates w.r.t. [gamma, gamma^q, ..., gamma^(q^(m-1))].
std::vector<Coord> to_frobenius_order(const NormalBasisElement& a);
NormalBasisElement from_frobenius_order(const GaussParams& params, std::span<const Coord> coords);

enum class Onb1Variant {
  Cross,   // a_i b_i + cross products, r correction
  Paired,  // paired sums, t correction; about half the multiplications
};

enum class Onb2Variant {
  FoldedCross,   // cross products over the m folded lanes
  FoldedPaired,  // paired sums over the m folded lanes, no a_0 shortcut
  Cross,         // symmetric cross products, diagonal + upper triangle only
  Paired,        // symmetric paired sums, diagonal + upper triangle only
};

/// Index pair consumed by lane i in cycle j of a folded type-II product.
struct PairSlot {
  std::size_t first = 0;   // s(i + j)
  std::size_t second = 0;  // s(i - j)
  bool computed = false;   // product formed here (false: reused or dropped)

  friend bool operator==(const PairSlot&, const PairSlot&) = default;
};

/// cycles[j - 1][i - 1] for lanes and cycles 1..m.
struct PairTrace {
  std::vector<std::vector<PairSlot>> cycles;
};

/// Normal-basis product for type I. Exact: equals
/// extract_onb1(mul_direct(embed_onb1(a), embed_onb1(b))).
NormalBasisElement mul_onb1(const NormalBasisElement& a, const NormalBasisElement& b,
                            Onb1Variant variant, OpCount& count);

/// Normal-basis product for type II. Exact: equals
/// extract_onb2(mul_direct(embed_onb2(a), embed_onb2(b))).
NormalBasisElement mul_onb2(const NormalBasisElement& a, const NormalBasisElement& b,
                            Onb2Variant variant, OpCount& count, PairTrace* trace = nullptr);

/// Reference product through the cyclotomic ring.
NormalBasisElement mul_onb_reference(const NormalBasisElement& a, const NormalBasisElement& b);

}  // namespace cyclomul
