#pragma once

#include <stdexcept>
#include <string>

namespace avgamma {

// Base class for all library errors so callers can catch everything at once.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define AVGAMMA_DEFINE_ERROR(Name)                            \
  struct Name final : Error {                                 \
    explicit Name(const std::string& what) : Error(what) {}   \
  }

// exact arithmetic layer
AVGAMMA_DEFINE_ERROR(NonInvertible);
AVGAMMA_DEFINE_ERROR(UnsupportedDegree);
AVGAMMA_DEFINE_ERROR(NotPrime);

// symplectic modules
AVGAMMA_DEFINE_ERROR(DimensionMismatch);
AVGAMMA_DEFINE_ERROR(NotPrimitive);
AVGAMMA_DEFINE_ERROR(NotIsotropic);

// matrix groups / Lie algebras
AVGAMMA_DEFINE_ERROR(NotSimilitude);
AVGAMMA_DEFINE_ERROR(NonUnitMultiplier);
AVGAMMA_DEFINE_ERROR(TooLarge);
AVGAMMA_DEFINE_ERROR(NotInAlgebra);
AVGAMMA_DEFINE_ERROR(UnsupportedSize);

// exponent engine
AVGAMMA_DEFINE_ERROR(EmptySubset);
AVGAMMA_DEFINE_ERROR(TooManyFactors);
AVGAMMA_DEFINE_ERROR(BoundViolation);
AVGAMMA_DEFINE_ERROR(InvalidFiltration);
AVGAMMA_DEFINE_ERROR(ShapeMismatch);

// command layer
AVGAMMA_DEFINE_ERROR(ParseError);
AVGAMMA_DEFINE_ERROR(UnknownSuite);

// violated type invariants (bad constructor arguments and the like)
AVGAMMA_DEFINE_ERROR(InvariantViolation);

#undef AVGAMMA_DEFINE_ERROR

}  // namespace avgamma
