#pragma once

// Independent ground truth in the splitting field GF(q^d) of x^n - 1.
//
// Polynomial arithmetic here is deliberately naive (schoolbook multiply,
// long division) and never touches the counted ground-field operations or the
// cyclotomic multipliers.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cyclomul/cyclo.hpp"
#include "cyclomul/gauss_onb.hpp"

namespace cyclomul {

/// Coefficients low degree first: {1, 1, 0, 1} is 1 + x + x^3.
using Poly = std::vector<std::uint32_t>;

/// Smallest d >= 1 with q^d = 1 (mod n). Throws NotCoprime.
std::uint32_t order_mod(std::uint64_t q, std::uint64_t n);

/// Monic irreducibility over GF(q) by gcd(f, x^(q^i) - x mod f) = 1 for
/// i = 1..deg/2.
bool is_irreducible(std::uint32_t q, const Poly& f);

/// Smallest monic irreducible polynomial of degree d over GF(q), ordering
/// candidates by the integer sum c_i q^i (so x^3 + x + 1 precedes
/// x^3 + x^2 + 1).
Poly find_irreducible(std::uint32_t q, std::uint32_t d);

/// GF(q^d) = GF(q)[x] / (modulus).
class SplitField {
 public:
  static constexpr std::uint32_t kMaxBinaryDegree = 24;

  /// Throws OracleUnavailable when q^d >= 2^32 or (q = 2 and d > 24).
  static std::shared_ptr<const SplitField> create(std::uint32_t q, std::uint32_t d);
  /// Splitting field of x^n - 1 over GF(q). When q divides n only the q-free
  /// part n' of n matters: x^n - 1 = (x^n' - 1)^(n/n').
  static std::shared_ptr<const SplitField> for_roots_of_unity(std::uint32_t q, std::uint32_t n);

  std::uint32_t q() const { return q_; }
  std::uint32_t degree() const { return d_; }
  const Poly& modulus() const { return modulus_; }
  /// q^d.
  std::uint64_t order() const { return order_; }

 private:
  SplitField(std::uint32_t q, std::uint32_t d, Poly modulus);

  std::uint32_t q_;
  std::uint32_t d_;
  Poly modulus_;
  std::uint64_t order_;
};

struct SplitFieldElement {
  std::shared_ptr<const SplitField> field;
  std::vector<std::uint32_t> coeffs;  // exactly degree() entries

  bool is_zero() const;
  bool is_one() const;
  friend bool operator==(const SplitFieldElement& a, const SplitFieldElement& b);
};

SplitFieldElement sf_zero(const std::shared_ptr<const SplitField>& field);
SplitFieldElement sf_one(const std::shared_ptr<const SplitField>& field);
/// Reduces an arbitrary polynomial into the field.
SplitFieldElement sf_from_poly(const std::shared_ptr<const SplitField>& field, const Poly& p);
/// Element with integer encoding sum c_i q^i.
SplitFieldElement sf_from_index(const std::shared_ptr<const SplitField>& field, std::uint64_t index);

SplitFieldElement sf_add(const SplitFieldElement& a, const SplitFieldElement& b);
SplitFieldElement sf_sub(const SplitFieldElement& a, const SplitFieldElement& b);
SplitFieldElement sf_mul(const SplitFieldElement& a, const SplitFieldElement& b);
SplitFieldElement sf_pow(const SplitFieldElement& a, std::uint64_t e);

/// Element of exact order n: the first g^((q^d - 1)/n), g in integer-encoding
/// order, whose order is n. Throws NoRoot if n does not divide q^d - 1.
SplitFieldElement find_beta(const std::shared_ptr<const SplitField>& field, std::uint64_t n);

/// Root of unity for x^n - 1: order n when gcd(q, n) = 1, otherwise order n',
/// the q-free part of n. Either way beta^n = 1 and 1 + beta + ... + beta^(n-1) = 0
/// for n > 1.
SplitFieldElement find_cyclotomic_beta(const std::shared_ptr<const SplitField>& field,
                                       std::uint32_t n);

/// sum a_i beta^i by Horner. A ring homomorphism whenever beta^n = 1.
/// Throws OrderMismatch if beta^n != 1, DimensionMismatch if q differs.
SplitFieldElement eval_at_beta(const CycloElement& a, const SplitFieldElement& beta);

/// gamma = sum_{i<k} beta^(alpha^i).
SplitFieldElement gauss_gamma(const GaussParams& params, const SplitFieldElement& beta);

/// Rank of the vectors over GF(q) by Gaussian elimination.
std::size_t rank_mod(std::uint32_t q, std::vector<std::vector<std::uint32_t>> rows);

/// Builds the splitting field, forms gamma^(q^i) for i < m and returns true iff
/// they are linearly independent over GF(q) and gamma^(q^m) = gamma.
/// False when n is composite or q divides n. Throws OracleUnavailable when the
/// splitting field exceeds the size cap.
bool verify_normal_basis(const GaussParams& params);

/// Closure of the generators under cy_add and mul_direct. Throws TooLarge if
/// p^n > 2^16. Result is sorted lexicographically by coordinates.
std::vector<CycloElement> subring_closure(std::span<const CycloElement> generators);

/// The e with e * x = x for every x in the set, if any.
std::optional<CycloElement> subring_identity(std::span<const CycloElement> elements);

}  // namespace cyclomul
