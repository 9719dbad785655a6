#pragma once

#include <stdexcept>
#include <string>

namespace fatigue {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file header or structure (e.g. a missing CSV column).
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A specific data row or value violates an invariant; message carries the row.
class DataError : public Error {
 public:
  using Error::Error;
};

// An out-of-domain parameter (sigma <= 0, lo >= hi, dimension mismatch, ...).
class ParamError : public Error {
 public:
  using Error::Error;
};

// A numerical routine could not deliver the requested result.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature ran out of subdivisions; carries the best estimate so
// callers can decide whether it is still usable.
class QuadratureError : public NumericError {
 public:
  QuadratureError(const std::string& what, double estimate, double error_bound)
      : NumericError(what), best_estimate(estimate), error_bound(error_bound) {}

  double best_estimate;
  double error_bound;
};

}  // namespace fatigue
