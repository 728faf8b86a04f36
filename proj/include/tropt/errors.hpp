#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tropt {

// Every error carries a short machine-readable code ("NoRegularSolution",
// "DimensionMismatch", ...) next to the human-readable message, so callers
// can branch or report without string-matching the text.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Operands with non-conforming shapes.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error("DimensionMismatch", what) {}
};

// Scalar-level domain violations: inverting the zero element, exponents the
// zero element does not support, values outside the semifield carrier.
class ValueError : public Error {
 public:
  ValueError(std::string code, const std::string& what)
      : Error(std::move(code), what) {}
};

// Malformed input documents.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

// A solver precondition failed or the instance is infeasible.
class SolverError : public Error {
 public:
  SolverError(std::string code, const std::string& what)
      : Error(std::move(code), what) {}
};

// Conditions the underlying theory rules out; reaching one is a bug or a
// floating-point tolerance failure, not a caller mistake.
class InternalError : public Error {
 public:
  InternalError(std::string code, const std::string& what)
      : Error(std::move(code), what) {}
};

}  // namespace tropt
