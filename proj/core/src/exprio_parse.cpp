#include <algorithm>
#include <cctype>

#include "holoreduce/error.hpp"
#include "holoreduce/exprio.hpp"

namespace holoreduce {
namespace {

constexpr long kMaxExponent = 512;
constexpr std::size_t kMaxDepth = 256;
constexpr std::int64_t kMaxDegree = 2048;
constexpr std::size_t kMaxShift = 2048;

enum class Mode { Polynomial, RationalFunction, Operator };

/// Coefficients by power of S.
using Value = std::vector<RationalFunction>;

bool has_shift(const Value& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!v[i].is_zero()) return true;
  }
  return false;
}

bool depends_on_n(const Value& v) {
  return std::any_of(v.begin(), v.end(), [](const RationalFunction& r) {
    return !r.numer().is_constant() || !r.denom().is_constant();
  });
}

void trim(Value& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

class Parser {
 public:
  Parser(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

  Value parse() {
    skip_space();
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail(pos_, {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"}, "unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(std::size_t at, std::vector<std::string> expected, const std::string& detail) const {
    throw ParseError(at, std::move(expected), detail);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::vector<std::string> primary_expected() const {
    std::vector<std::string> out = {"integer", "'n'", "'('", "'+'", "'-'"};
    if (mode_ == Mode::Operator) out.insert(out.begin() + 2, "'S'");
    return out;
  }

  void check_size(const Value& v, std::size_t at) const {
    if (v.size() > kMaxShift + 1) fail(at, {}, "shift power exceeds " + std::to_string(kMaxShift));
    for (const auto& r : v) {
      if (r.numer().degree() > Degree(kMaxDegree) || r.denom().degree() > Degree(kMaxDegree)) {
        fail(at, {}, "degree exceeds " + std::to_string(kMaxDegree));
      }
    }
  }

  struct DepthGuard {
    Parser& p;
    DepthGuard(Parser& parser, std::size_t at) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail(at, {}, "nesting deeper than " + std::to_string(kMaxDepth));
    }
    ~DepthGuard() { --p.depth_; }
  };

  static Value add(Value a, const Value& b, bool subtract) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = subtract ? a[i] - b[i] : a[i] + b[i];
    trim(a);
    return a;
  }

  Value multiply(const Value& a, const Value& b, std::size_t at) const {
    if (has_shift(a) && depends_on_n(b)) {
      fail(at, {}, "S must not multiply an n-dependent factor from the left; write coefficients before S");
    }
    if (a.empty() || b.empty()) return {};
    if (a.size() + b.size() - 1 > kMaxShift + 1) fail(at, {}, "shift power exceeds " + std::to_string(kMaxShift));
    Value out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] = out[i + j] + a[i] * b[j];
      }
    }
    trim(out);
    check_size(out, at);
    return out;
  }

  Value divide(const Value& a, const Value& b, std::size_t at) const {
    if (b.empty()) fail(at, {}, "division by zero");
    if (has_shift(b)) throw Error(ErrorCode::NegativeShiftPower, "S may not appear in a denominator");
    const RationalFunction& d = b[0];
    if (mode_ != Mode::RationalFunction && !d.numer().is_constant()) {
      fail(at, {"integer"}, "non-constant denominator");
    }
    Value out = a;
    for (auto& r : out) r = r / d;
    check_size(out, at);
    return out;
  }

  Value expr() {
    DepthGuard guard(*this, pos_);
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = add(std::move(v), term(), false);
      } else if (accept('-')) {
        v = add(std::move(v), term(), true);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        v = multiply(v, unary(), at);
      } else if (accept('/')) {
        v = divide(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    DepthGuard guard(*this, pos_);
    if (accept('+')) return unary();
    if (accept('-')) {
      Value v = unary();
      for (auto& r : v) r = -r;
      return v;
    }
    return power();
  }

  Value power() {
    Value base = primary();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    const std::size_t digits_at = pos_;
    const long e = integer_literal_as_long(digits_at);
    if (e > kMaxExponent) fail(digits_at, {}, "exponent exceeds " + std::to_string(kMaxExponent));
    if (has_shift(base) && depends_on_n(base)) {
      fail(at, {}, "cannot raise a shift expression with n-dependent coefficients to a power");
    }
    if (e > 0 && !base.empty()) {
      std::int64_t deg = 0;
      for (const auto& r : base) {
        deg = std::max({deg, r.numer().degree().is_neg_inf() ? 0 : r.numer().degree().value(),
                        r.denom().degree().value()});
      }
      if (deg * e > kMaxDegree) fail(at, {}, "degree exceeds " + std::to_string(kMaxDegree));
      if ((base.size() - 1) * static_cast<std::size_t>(e) > kMaxShift) {
        fail(at, {}, "shift power exceeds " + std::to_string(kMaxShift));
      }
    }
    Value out{RationalFunction(Polynomial(1))};
    for (long bit = e; bit > 0; bit >>= 1) {
      if (bit & 1) out = multiply(out, base, at);
      if (bit > 1) base = multiply(base, base, at);
    }
    return out;
  }

  long integer_literal_as_long(std::size_t at) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(at, {"integer"}, "expected a nonnegative integer exponent");
    }
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value <= kMaxExponent) value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  Value primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail(at, primary_expected(), "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      const Integer value(std::string(text_.substr(pos_, end - pos_)), 10);
      pos_ = end;
      if (value == 0) return {};
      return {RationalFunction(Polynomial(Rational(value)))};
    }
    if (c == 'n') {
      ++pos_;
      return {RationalFunction(Polynomial::variable())};
    }
    if (c == 'S') {
      if (mode_ != Mode::Operator) fail(at, primary_expected(), "S is only allowed in operators");
      ++pos_;
      return {RationalFunction(), RationalFunction(Polynomial(1))};
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      skip_space();
      if (!accept(')')) fail(pos_, {"')'", "'+'", "'-'", "'*'", "'/'", "'^'"}, "unbalanced parenthesis");
      return v;
    }
    fail(at, primary_expected(), std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Mode mode_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

Polynomial as_polynomial(const RationalFunction& r) {
  return r.numer() / r.denom().leading_coefficient();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  const Value v = Parser(text, Mode::Polynomial).parse();
  return v.empty() ? Polynomial() : as_polynomial(v[0]);
}

RationalFunction parse_rational_function(std::string_view text) {
  const Value v = Parser(text, Mode::RationalFunction).parse();
  return v.empty() ? RationalFunction() : v[0];
}

ShiftOperator parse_operator(std::string_view text) {
  const Value v = Parser(text, Mode::Operator).parse();
  std::vector<Polynomial> coeffs;
  coeffs.reserve(v.size());
  for (const auto& r : v) coeffs.push_back(as_polynomial(r));
  return ShiftOperator(std::move(coeffs));
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&]() -> Integer {
    skip();
    const std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == begin) throw ParseError(begin, {"integer"}, "expected digits");
    return Integer(std::string(text.substr(begin, pos - begin)), 10);
  };

  skip();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Integer num = digits();
  Integer den(1);
  skip();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t at = pos;
    den = digits();
    if (den == 0) throw ParseError(at, {"nonzero integer"}, "zero denominator");
  }
  skip();
  if (pos != text.size()) throw ParseError(pos, {"'/'", "end of input"}, "trailing characters");
  Rational out = make_rational(num, den);
  return negative ? Rational(-out) : out;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "latex") return Format::Latex;
  if (name == "structured") return Format::Structured;
  return std::nullopt;
}

}  // namespace holoreduce
