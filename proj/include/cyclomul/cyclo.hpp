#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "cyclomul/ground_field.hpp"

namespace cyclomul {

/// Whether 1 + beta + ... + beta^(n-1) = 0 may be used.
///
/// In a Ring the coordinate vector is the element. In a Field two vectors that
/// differ by a constant vector denote the same element.
enum class AlgebraKind { Ring, Field };

/// Element a_0 + a_1 beta + ... + a_{n-1} beta^(n-1) with beta^n = 1.
class CycloElement {
 public:
  /// Throws InvalidDimension if coords.size() < 2, InvalidCoordinate if a
  /// coordinate is not reduced.
  CycloElement(GroundField field, std::vector<Coord> coords);

  static CycloElement from_values(GroundField field, std::span<const std::int64_t> values);
  static CycloElement from_values(GroundField field, std::initializer_list<std::int64_t> values);
  static CycloElement zero(GroundField field, std::size_t n);
  /// beta^0, the identity of the ring.
  static CycloElement one(GroundField field, std::size_t n);
  /// beta^k for k reduced mod n.
  static CycloElement basis(GroundField field, std::size_t n, std::size_t k);

  const GroundField& field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  std::span<const Coord> coords() const { return coords_; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::vector<std::int64_t> values() const;

  friend bool operator==(const CycloElement&, const CycloElement&) = default;

 private:
  GroundField field_;
  std::vector<Coord> coords_;
};

/// Pairs of coordinate indices fed to each lane, one row per loop cycle.
///
/// cycles[j - 1][lane] = (i + j mod n, i - j mod n) for lane i in cycle j.
struct Dataflow {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cycles;
};

/// Output of the shift-and-accumulate multipliers.
struct RootedProduct {
  CycloElement root;     // lanes before the final permutation, sqrt(AB)
  CycloElement product;  // AB
};

/// The three whole-ring formulas that also accept even n.
enum class GeneralForm {
  Cross,        // diagonal plus paired cross products; exact ring product
  PairedRing,   // paired sums with the x broadcast; exact ring product
  PairedField,  // paired sums without the broadcast; equal up to a constant vector
};

CycloElement cy_add(const CycloElement& a, const CycloElement& b, OpCount& count);
CycloElement cy_sub(const CycloElement& a, const CycloElement& b, OpCount& count);
/// coords'[i] = coords[(i + k) mod n]. Uncounted.
CycloElement cy_shift(const CycloElement& a, std::int64_t k);

/// Schoolbook cyclic convolution c_j = sum_i a_i b_{j-i}: n^2 mult, n(n-1) add.
CycloElement mul_direct(const CycloElement& a, const CycloElement& b, OpCount& count);

/// Shift-and-accumulate product over diagonal and cross terms
/// a_{i+j} b_{i-j} + b_{i+j} a_{i-j}, j = 1..(n-1)/2. Odd n only.
///
/// Costs n^2 mult and n(n-1) add, the same as mul_direct, but every step is a
/// whole-vector operation. Works for both algebra kinds.
RootedProduct mul_cross(const CycloElement& a, const CycloElement& b, OpCount& count,
                        Dataflow* trace = nullptr);

/// Shift-and-accumulate product over paired sums
/// (a_{i+j} + a_{i-j})(b_{i+j} + b_{i-j}), j = 1..(n-1)/2. Odd n only.
///
/// Uses about half the multiplications of mul_cross. For AlgebraKind::Ring the
/// diagonal is doubled and x = -sum a_i b_i is added to every lane, giving the
/// exact ring product. For AlgebraKind::Field the broadcast is dropped and the
/// result differs from the ring product by a constant vector. In
/// characteristic 2 the doubled diagonal vanishes: the field variant then skips
/// the diagonal entirely and the ring variant seeds every lane with x.
RootedProduct mul_paired(const CycloElement& a, const CycloElement& b, AlgebraKind kind,
                         OpCount& count, Dataflow* trace = nullptr);

/// Whole-ring formulas valid for every n >= 2. Even n picks up the extra
/// half-period term pairing i with i + n/2.
CycloElement mul_general(const CycloElement& a, const CycloElement& b, GeneralForm form,
                         OpCount& count);

/// c[2i mod n] = d[i]. Odd n only.
CycloElement sqrt_perm(const CycloElement& d);
/// d[i] = c[2i mod n]. Odd n only.
CycloElement inverse_sqrt_perm(const CycloElement& c);
/// targets[i] = 2i mod n, the output index lane i lands on.
std::vector<std::size_t> sqrt_perm_targets(std::size_t n);

/// Equality in the cyclotomic field: a - b is a constant vector.
bool fields_equal(const CycloElement& a, const CycloElement& b);
/// Equality under the given algebra kind.
bool equal_as(const CycloElement& a, const CycloElement& b, AlgebraKind kind);

/// Throws DimensionMismatch unless a and b share the field and dimension.
void require_compatible(const CycloElement& a, const CycloElement& b);

}  // namespace cyclomul
