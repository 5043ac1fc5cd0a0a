// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef GBUSCA_ERRORS_HPP
#define GBUSCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gbusca {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data or files: parse failures, schema problems,
// values that fail model validation on load.
class InputError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition: out-of-range ids,
// negative weights, samples outside [0, total), dimension mismatches.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Numerically impossible requests, e.g. inverting a non-stationary
// cross-intensity matrix.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gbusca

#endif  // GBUSCA_ERRORS_HPP
