#pragma once

#include <stdexcept>
#include <string>

namespace welch {

/// Base class for all errors raised by the library. The CLI maps these to
/// exit code 3 (input/validation error).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
  using Error::Error;
};
struct NonSquareError : Error {
  using Error::Error;
};
struct NumericalFailureError : Error {
  using Error::Error;
};
struct DimensionMismatchError : Error {
  using Error::Error;
};
struct IndexOutOfRangeError : Error {
  using Error::Error;
};
struct WrongExponentError : Error {
  using Error::Error;
};
struct OverflowError : Error {
  using Error::Error;
};
struct LiftTooLargeError : Error {
  using Error::Error;
};
struct NegativeSpectrumError : Error {
  using Error::Error;
};
struct NotNormalizedError : Error {
  using Error::Error;
};
struct DegenerateCountError : Error {
  using Error::Error;
};
struct TooFewVectorsError : Error {
  using Error::Error;
};
struct DegenerateMeasureError : Error {
  using Error::Error;
};
struct NonPositiveMassError : Error {
  using Error::Error;
};
struct NegativeRadicandError : Error {
  using Error::Error;
};

}  // namespace welch
