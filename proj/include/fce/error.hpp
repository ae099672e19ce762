#pragma once
// Error taxonomy. The CLI maps each class to a distinct exit code:
// parse 2, validation 3, computation 4.

#include <stdexcept>
#include <string>

#include "fce/validation.hpp"

namespace fce {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed input file. Messages carry the path and the
// line/field location.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed data that breaks a domain invariant. Carries the full report
// so callers can print every violation.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& context, ValidationReport report);

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// Contract breach inside the computation pipeline: dimension mismatch,
// missing group data, ill-formed policy.
class ComputeError : public Error {
 public:
  using Error::Error;
};

}  // namespace fce
