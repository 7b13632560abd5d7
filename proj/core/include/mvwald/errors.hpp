#pragma once

#include <stdexcept>
#include <string>

namespace mvwald {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Matrix dimensions invalid or beyond the configured size cap.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Structurally invalid numeric input (asymmetric covariance, length mismatch).
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Invalid design, effect, or configuration specification.
class SpecError : public Error {
public:
  using Error::Error;
};

/// Problems with input data: missing values, undersized cells, unknown levels.
class DataError : public Error {
public:
  using Error::Error;
};

/// Numerical failure: non-finite input, decomposition breakdown.
class NumericalError : public Error {
public:
  using Error::Error;
};

} // namespace mvwald
