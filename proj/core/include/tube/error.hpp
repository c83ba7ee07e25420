#pragma once

#include <stdexcept>
#include <string>

namespace tube {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TUBE_DEFINE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

TUBE_DEFINE_ERROR(DimensionMismatch)
TUBE_DEFINE_ERROR(BadPrime)
TUBE_DEFINE_ERROR(BadDimension)
TUBE_DEFINE_ERROR(SecantViolation)
TUBE_DEFINE_ERROR(DegenerateParametrization)
TUBE_DEFINE_ERROR(NonStabilizing)
TUBE_DEFINE_ERROR(NoIdeal)
TUBE_DEFINE_ERROR(PrimeDisagreement)
TUBE_DEFINE_ERROR(BadType)
TUBE_DEFINE_ERROR(InvalidSymbolSystem)
TUBE_DEFINE_ERROR(NotTubeModel)
TUBE_DEFINE_ERROR(NotEulerSource)
TUBE_DEFINE_ERROR(DegeneratePair)
TUBE_DEFINE_ERROR(NotInvertible)

#undef TUBE_DEFINE_ERROR

}  // namespace tube
