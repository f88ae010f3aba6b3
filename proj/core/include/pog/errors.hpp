#pragma once

#include <stdexcept>
#include <string>

namespace pog {

// Base class for all failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyAddress : Error { using Error::Error; };
struct LevelTooLarge : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct InvalidEntry : Error { using Error::Error; };
struct DegreeViolation : Error { using Error::Error; };
struct UnmatchedSide : Error { using Error::Error; };
struct AmbiguousMatch : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };
struct PartialSpectrum : Error { using Error::Error; };
struct PartialBasis : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct BadInitSpec : Error { using Error::Error; };
struct DegenerateRange : Error { using Error::Error; };

}  // namespace pog
