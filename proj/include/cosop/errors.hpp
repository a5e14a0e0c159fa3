#pragma once

#include <stdexcept>
#include <string>

namespace cosop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COSOP_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

COSOP_DEFINE_ERROR(DegreeOutsideWindow);
COSOP_DEFINE_ERROR(IndexOutOfRange);
COSOP_DEFINE_ERROR(NonSplitKernel);
COSOP_DEFINE_ERROR(TorsionCokernel);
COSOP_DEFINE_ERROR(ComparisonFailed);
COSOP_DEFINE_ERROR(WindowTooSmall);
COSOP_DEFINE_ERROR(ValueOutOfRange);
COSOP_DEFINE_ERROR(BoundsExceeded);
COSOP_DEFINE_ERROR(IncompatibleInputs);
COSOP_DEFINE_ERROR(NormalizationFailure);
COSOP_DEFINE_ERROR(NotStabilized);
COSOP_DEFINE_ERROR(UnsupportedInstance);
COSOP_DEFINE_ERROR(LevelMismatch);
COSOP_DEFINE_ERROR(InfeasibleSize);
COSOP_DEFINE_ERROR(DisjointnessViolation);
COSOP_DEFINE_ERROR(DegenerateInterval);
COSOP_DEFINE_ERROR(ResolutionTooCoarse);
COSOP_DEFINE_ERROR(ConfigError);
COSOP_DEFINE_ERROR(InvalidInput);

#undef COSOP_DEFINE_ERROR

}  // namespace cosop
