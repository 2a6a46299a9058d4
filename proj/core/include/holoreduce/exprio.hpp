#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "holoreduce/rational_function.hpp"
#include "holoreduce/shift_operator.hpp"

namespace holoreduce {

/// Grammar (whitespace is ignored, juxtaposition is not multiplication):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INT)?
///   primary := INT | 'n' | 'S' | '(' expr ')'
///
/// S is the forward shift. Within a product, S may only multiply factors that
/// do not depend on n from the right; coefficients are written first.

/// Throws ParseError.
Polynomial parse_polynomial(std::string_view text);
RationalFunction parse_rational_function(std::string_view text);
/// Throws ParseError; NegativeShiftPower for S in a denominator.
ShiftOperator parse_operator(std::string_view text);

/// Exact rational "p/q" or integer, with optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

enum class Format { Text, Latex, Structured };

std::optional<Format> parse_format(std::string_view name);

inline constexpr std::string_view kSchemaVersion = "holoreduce-v1";

std::string print(const Rational& value, Format format = Format::Text);
std::string print(const Polynomial& value, Format format = Format::Text);
std::string print(const RationalFunction& value, Format format = Format::Text);
std::string print(const ShiftOperator& value, Format format = Format::Text);

// Structured encodings; rationals become {"num": "...", "den": "..."}.
nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const Polynomial& value);
nlohmann::json to_json(const RationalFunction& value);
nlohmann::json to_json(const ShiftOperator& value);

}  // namespace holoreduce
