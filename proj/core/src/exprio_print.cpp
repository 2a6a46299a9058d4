#include <sstream>

#include "holoreduce/exprio.hpp"

namespace holoreduce {
namespace {

std::string rational_latex(const Rational& r) {
  const Rational a = abs(r);
  std::string body = a.get_den() == 1 ? a.get_num().get_str()
                                      : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return (r < 0 ? "-" : "") + body;
}

std::string exponent_suffix(std::size_t k, bool latex) {
  if (k == 1) return "";
  const std::string digits = std::to_string(k);
  if (latex && digits.size() > 1) return "^{" + digits + "}";
  return "^" + digits;
}

/// One monomial c*n^k with the sign written separately.
std::string monomial_body(const Rational& magnitude, std::size_t k, bool latex) {
  if (k == 0) return latex ? rational_latex(magnitude) : magnitude.get_str();
  const std::string power = "n" + exponent_suffix(k, latex);
  if (magnitude == 1) return power;
  return (latex ? rational_latex(magnitude) + " " : magnitude.get_str() + "*") + power;
}

/// Terms in descending degree, signs as binary operators.
std::string polynomial_body(const Polynomial& p, bool latex) {
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += monomial_body(abs(c[i]), i, latex);
  }
  return out;
}

std::size_t term_count(const Polynomial& p) {
  std::size_t k = 0;
  for (const auto& c : p.coefficients()) k += c != 0;
  return k;
}

/// Content-factored rendering: "c*(primitive)" for multi-term polynomials.
std::string polynomial_string(const Polynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  if (term_count(p) == 1) return polynomial_body(p, latex);
  const Rational content = p.content();
  const std::string body = polynomial_body(p.primitive_part(), latex);
  const std::string open = latex ? "\\left(" : "(";
  const std::string close = latex ? "\\right)" : ")";
  if (content == 1) return body;
  if (content == -1) return "-" + open + body + close;
  return (latex ? rational_latex(content) : content.get_str() + "*") + open + body + close;
}

std::string shift_symbol(std::size_t i, bool latex) {
  return (latex ? "\\sigma" : "S") + exponent_suffix(i, latex);
}

/// a_i S^i as a signed summand.
std::string operator_term(const Polynomial& p, std::size_t i, bool latex) {
  if (i == 0) return polynomial_string(p, latex);
  const std::string shift = shift_symbol(i, latex);
  const std::string times = latex ? " " : "*";
  if (p == Polynomial(1)) return shift;
  if (p == Polynomial(-1)) return "-" + shift;
  if (term_count(p) == 1) return polynomial_string(p, latex) + times + shift;
  const bool negative = p.content() < 0;
  const Polynomial q = negative ? -p : p;
  std::string s = polynomial_string(q, latex);
  if (q.content() == 1) s = (latex ? "\\left(" : "(") + s + (latex ? "\\right)" : ")");
  return (negative ? "-" : "") + s + times + shift;
}

std::string operator_string(const ShiftOperator& op, bool latex) {
  if (op.is_zero()) return "0";
  std::string out;
  const auto& c = op.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    const std::string term = operator_term(c[i], i, latex);
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string structured(nlohmann::json body) {
  nlohmann::json out = {{"schema", kSchemaVersion}};
  out.update(body);
  return out.dump(2);
}

}  // namespace

nlohmann::json to_json(const Rational& value) {
  return {{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
}

nlohmann::json to_json(const Polynomial& value) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : value.coefficients()) coeffs.push_back(to_json(c));
  nlohmann::json out = {{"type", "polynomial"}, {"coefficients", coeffs}};
  out["degree"] = value.is_zero() ? nlohmann::json(nullptr) : nlohmann::json(value.degree().value());
  return out;
}

nlohmann::json to_json(const RationalFunction& value) {
  return {{"type", "rational_function"},
          {"numerator", to_json(value.numer())},
          {"denominator", to_json(value.denom())}};
}

nlohmann::json to_json(const ShiftOperator& value) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& a : value.coefficients()) coeffs.push_back(to_json(a));
  return {{"type", "operator"}, {"order", value.order()}, {"coefficients", coeffs}};
}

std::string print(const Rational& value, Format format) {
  switch (format) {
    case Format::Text: return value.get_str();
    case Format::Latex: return rational_latex(value);
    case Format::Structured: return structured({{"type", "rational"}, {"value", to_json(value)}});
  }
  return {};
}

std::string print(const Polynomial& value, Format format) {
  switch (format) {
    case Format::Text: return polynomial_string(value, false);
    case Format::Latex: return polynomial_string(value, true);
    case Format::Structured: return structured(to_json(value));
  }
  return {};
}

std::string print(const RationalFunction& value, Format format) {
  switch (format) {
    case Format::Text:
      if (value.denom() == Polynomial(1)) return polynomial_string(value.numer(), false);
      return "(" + polynomial_string(value.numer(), false) + ")/(" + polynomial_string(value.denom(), false) + ")";
    case Format::Latex:
      if (value.denom() == Polynomial(1)) return polynomial_string(value.numer(), true);
      return "\\frac{" + polynomial_string(value.numer(), true) + "}{" + polynomial_string(value.denom(), true) + "}";
    case Format::Structured: return structured(to_json(value));
  }
  return {};
}

std::string print(const ShiftOperator& value, Format format) {
  switch (format) {
    case Format::Text: return operator_string(value, false);
    case Format::Latex: return operator_string(value, true);
    case Format::Structured: return structured(to_json(value));
  }
  return {};
}

}  // namespace holoreduce
