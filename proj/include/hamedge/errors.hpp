#pragma once

#include <stdexcept>
#include <string>

namespace hamedge {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HAMEDGE_DEFINE_ERROR(Name)                    \
  struct Name : Error {                               \
    using Error::Error;                               \
    Name() : Error(#Name) {}                          \
  }

// polynomial / triple errors
HAMEDGE_DEFINE_ERROR(NotDivisible);
HAMEDGE_DEFINE_ERROR(NegativeBetti);
HAMEDGE_DEFINE_ERROR(DimensionBound);
HAMEDGE_DEFINE_ERROR(DomainError);
HAMEDGE_DEFINE_ERROR(ZeroDirection);

// cohomology-class errors
HAMEDGE_DEFINE_ERROR(OutOfDomain);
HAMEDGE_DEFINE_ERROR(DegenerateSamples);
HAMEDGE_DEFINE_ERROR(SizeMismatch);
HAMEDGE_DEFINE_ERROR(ZeroOmega);
HAMEDGE_DEFINE_ERROR(DegeneratePath);

// length-vector errors
HAMEDGE_DEFINE_ERROR(TooLarge);
HAMEDGE_DEFINE_ERROR(NotGeneric);
HAMEDGE_DEFINE_ERROR(NonPositiveLength);
HAMEDGE_DEFINE_ERROR(NotTiny);
HAMEDGE_DEFINE_ERROR(BadIndices);

// simulation errors
HAMEDGE_DEFINE_ERROR(NonConvergence);
HAMEDGE_DEFINE_ERROR(UndefinedAxis);
HAMEDGE_DEFINE_ERROR(DegenerateFrame);

// reporting
HAMEDGE_DEFINE_ERROR(IOFailure);

#undef HAMEDGE_DEFINE_ERROR

}  // namespace hamedge
