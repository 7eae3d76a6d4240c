#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// An iterative scheme hit its budget before the tolerance was met.
// Carries the best estimate and the residual error bound at the point of
// failure so callers can decide whether the partial answer is usable.
struct NonConvergence : Error {
  double best_estimate;
  double error_bound;
  std::string context;

  NonConvergence(const std::string& what, double best, double bound)
      : Error(what), best_estimate(best), error_bound(bound) {}

  void add_context(const std::string& where) {
    if (!context.empty()) context += "; ";
    context += where;
  }
};

struct StepUnderflow : Error {
  using Error::Error;
};

struct DegenerateData : Error {
  using Error::Error;
};

// Requested a closed-form branch outside its case condition.
struct CaseError : Error {
  using Error::Error;
};

struct SeriesOutOfRange : Error {
  using Error::Error;
};

struct UnsupportedProvider : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace casimir
