#pragma once

#include <stdexcept>
#include <string>

namespace cyclomul {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CYCLOMUL_DEFINE_ERROR(Name)    \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  };

CYCLOMUL_DEFINE_ERROR(NotPrime)
CYCLOMUL_DEFINE_ERROR(InvalidCoordinate)
CYCLOMUL_DEFINE_ERROR(InvalidDimension)
CYCLOMUL_DEFINE_ERROR(DimensionMismatch)
CYCLOMUL_DEFINE_ERROR(OddDimensionRequired)
CYCLOMUL_DEFINE_ERROR(NoSuchElement)
CYCLOMUL_DEFINE_ERROR(WrongBasisType)
CYCLOMUL_DEFINE_ERROR(NotFoldable)
CYCLOMUL_DEFINE_ERROR(NoNormalBasis)
CYCLOMUL_DEFINE_ERROR(NotCoprime)
CYCLOMUL_DEFINE_ERROR(NoRoot)
CYCLOMUL_DEFINE_ERROR(OrderMismatch)
CYCLOMUL_DEFINE_ERROR(TooLarge)
CYCLOMUL_DEFINE_ERROR(OracleUnavailable)
CYCLOMUL_DEFINE_ERROR(UnsupportedCombination)
CYCLOMUL_DEFINE_ERROR(ParseError)

#undef CYCLOMUL_DEFINE_ERROR

}  // namespace cyclomul
