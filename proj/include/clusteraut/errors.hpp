#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clusteraut {

enum class Errc {
  RingMismatch,
  NegativePower,
  NotDivisible,
  DivisionByZero,
  NegativeExponent,
  ZeroPolynomial,
  LaurentViolation,
  BudgetExceeded,
  SwapRequiresEqualParams,
  ParamsMismatch,
  FactorizationFailed,
  ConjugationNotScaling,
  StructureMismatch,
  NotFiniteType,
  ModelUnavailable,
  NotMinusOne,
  NotAnticanonical,
  PivotNotZero,
  PreconditionViolated,
  NotStandardSquare,
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(Errc::ParseError, what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace clusteraut
