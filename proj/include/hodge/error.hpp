#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input (bad table, cyclic poset, support range
/// violation, ring mismatch, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exact computation produced something the theory forbids, e.g. a
/// non-integral genus or a residual (1+y) denominator.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A formula was requested whose monodromy hypothesis has not been attested.
class MonodromyRefusal : public Error {
 public:
  using Error::Error;
};

}  // namespace hodge
