#include "holoreduce/error.hpp"

#include <sstream>

namespace holoreduce {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroOperator: return "ZeroOperator";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::OrderZero: return "OrderZero";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::FactorNotDivisor: return "FactorNotDivisor";
    case ErrorCode::IrreducibleAtThisI: return "IrreducibleAtThisI";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::SingularLeadingCoefficient: return "SingularLeadingCoefficient";
    case ErrorCode::IndexBelowStart: return "IndexBelowStart";
    case ErrorCode::InsufficientTerms: return "InsufficientTerms";
    case ErrorCode::UnknownSequence: return "UnknownSequence";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::MismatchedSequence: return "MismatchedSequence";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::PrimeFilterViolation: return "PrimeFilterViolation";
    case ErrorCode::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NegativeShiftPower: return "NegativeShiftPower";
    case ErrorCode::InvalidFixture: return "InvalidFixture";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

std::string describe_parse_error(std::size_t position,
                                 const std::vector<std::string>& expected,
                                 const std::string& detail) {
  std::ostringstream os;
  os << detail << " at position " << position;
  if (!expected.empty()) {
    os << " (expected one of:";
    for (const auto& e : expected) os << ' ' << e;
    os << ')';
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& detail)
    : Error(ErrorCode::ParseError, describe_parse_error(position, expected, detail)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace holoreduce
