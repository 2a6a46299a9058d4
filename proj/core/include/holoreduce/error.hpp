#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace holoreduce {

enum class ErrorCode {
  DivisionNotExact,
  DivisionByZero,
  BothZero,
  ZeroPolynomial,
  ZeroOperator,
  ZeroInput,
  OrderZero,
  OrderTooSmall,
  FactorNotDivisor,
  IrreducibleAtThisI,
  InternalInconsistency,
  SingularLeadingCoefficient,
  IndexBelowStart,
  InsufficientTerms,
  UnknownSequence,
  DomainViolation,
  MismatchedSequence,
  PrecisionLoss,
  PrimeFilterViolation,
  NonInvertibleDenominator,
  ParseError,
  NegativeShiftPower,
  InvalidFixture,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above, so
/// callers (notably the CLI) can map failures without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& detail);

  /// Zero-based byte offset into the input.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace holoreduce
