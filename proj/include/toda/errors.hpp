#pragma once

#include <stdexcept>
#include <string>

namespace toda {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Some off-diagonal entry a_i <= 0 (the orbit requires a_i > 0).
struct NonPositiveOffDiagonal : Error {
  using Error::Error;
};

/// Trace-power order k outside 1..n.
struct BadOrder : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct NonFiniteState : Error {
  using Error::Error;
};

struct SingularGroupElement : Error {
  using Error::Error;
};

struct NonConvergentQuadrature : Error {
  using Error::Error;
};

struct GridTooCoarse : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct TrivializationVanishes : Error {
  using Error::Error;
};

struct WitnessNotFound : Error {
  using Error::Error;
};

}  // namespace toda
