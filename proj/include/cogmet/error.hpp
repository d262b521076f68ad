#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cogmet {

// All library failures carry a stable code string (e.g. "SumOutOfTolerance",
// "DomainError") plus a one-line human message naming the offending field.
// The CLI maps the two subclasses to exit codes 2 and 3.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

// Malformed or inconsistent inputs: shape mismatches, bad files, out-of-range
// symbols, set-relation violations. CLI exit code 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Numeric preconditions: values outside an operation's mathematical domain,
// zero denominators, nonpositive time/energy. CLI exit code 3.
class MathDomainError : public Error {
public:
  using Error::Error;
};

} // namespace cogmet
