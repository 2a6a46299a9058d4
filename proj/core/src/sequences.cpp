#include "holoreduce/sequences.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "holoreduce/error.hpp"

namespace holoreduce {

struct HolonomicSequence::Cache {
  std::mutex mutex;
  std::vector<Rational> values;
  std::map<std::int64_t, Rational> overrides;
};

HolonomicSequence::HolonomicSequence(std::string name, ShiftOperator op, std::int64_t start,
                                     std::vector<Rational> initial_values, TermFunction closed_form)
    : name_(std::move(name)),
      op_(std::move(op)),
      start_(start),
      closed_form_(std::move(closed_form)),
      cache_(std::make_shared<Cache>()) {
  if (op_.is_zero() || op_.order() == 0) {
    throw Error(ErrorCode::OrderZero, "sequence '" + name_ + "' needs an operator of order >= 1");
  }
  if (initial_values.size() != op_.order()) {
    throw Error(ErrorCode::DomainViolation,
                "sequence '" + name_ + "' needs exactly J initial values");
  }
  cache_->values = std::move(initial_values);
}

Rational HolonomicSequence::eval(std::int64_t n) const {
  if (n < start_) {
    throw Error(ErrorCode::IndexBelowStart,
                name_ + " evaluated at " + std::to_string(n) + " < start " + std::to_string(start_));
  }
  const auto index = static_cast<std::size_t>(n - start_);
  std::lock_guard lock(cache_->mutex);
  auto& values = cache_->values;
  const std::size_t order = op_.order();
  const Polynomial& lead = op_.leading();
  while (values.size() <= index) {
    const std::int64_t m = start_ + static_cast<std::int64_t>(values.size());
    if (auto it = cache_->overrides.find(m); it != cache_->overrides.end()) {
      values.push_back(it->second);
      continue;
    }
    const std::int64_t k = m - static_cast<std::int64_t>(order);
    const Rational at = make_rational(k);
    const Rational a_lead = lead(at);
    if (a_lead == 0) {
      if (!closed_form_) {
        throw Error(ErrorCode::SingularLeadingCoefficient,
                    name_ + ": a_J vanishes at n = " + std::to_string(k) + " and no override exists");
      }
      values.push_back(closed_form_(m));
      continue;
    }
    Rational acc(0);
    const std::size_t base = values.size() - order;
    for (std::size_t i = 0; i < order; ++i) {
      const Polynomial& a = op_.coefficient(i);
      if (!a.is_zero()) acc += a(at) * values[base + i];
    }
    values.push_back(-acc / a_lead);
  }
  return values[index];
}

Rational HolonomicSequence::closed_form(std::int64_t n) const {
  if (!closed_form_) throw Error(ErrorCode::DomainViolation, name_ + " has no closed form");
  return closed_form_(n);
}

void HolonomicSequence::set_override(std::int64_t n, const Rational& value) {
  std::lock_guard lock(cache_->mutex);
  cache_->overrides[n] = value;
  const auto index = n - start_;
  if (index >= 0 && static_cast<std::size_t>(index) < cache_->values.size()) {
    cache_->values.resize(static_cast<std::size_t>(index));
    if (cache_->values.size() < op_.order()) {
      throw Error(ErrorCode::DomainViolation, "override inside the initial values");
    }
  }
}

TermFunction HolonomicSequence::as_function() const {
  return [seq = *this](std::int64_t n) -> Rational { return seq.eval(n); };
}

// ---------------------------------------------------------------------------

Integer domb_number(std::int64_t n) {
  Integer sum(0);
  for (std::int64_t k = 0; k <= n; ++k) {
    const Integer b = binomial(n, k);
    sum += b * b * binomial(2 * k, k) * binomial(2 * (n - k), n - k);
  }
  return sum;
}

Integer franel_number(std::int64_t n) {
  Integer sum(0);
  for (std::int64_t k = 0; k <= n; ++k) {
    const Integer b = binomial(n, k);
    sum += b * b * b;
  }
  return sum;
}

Rational harmonic_number(std::int64_t n, unsigned order) {
  Rational sum(0);
  for (std::int64_t k = 1; k <= n; ++k) {
    sum += make_rational(Integer(1), pow_integer(to_integer(k), order));
  }
  return sum;
}

Integer central_trinomial(std::int64_t n, const Integer& b, const Integer& c) {
  Integer sum(0);
  for (std::int64_t k = 0; 2 * k <= n; ++k) {
    sum += binomial(n, 2 * k) * binomial(2 * k, k) *
           pow_integer(b, static_cast<unsigned long>(n - 2 * k)) *
           pow_integer(c, static_cast<unsigned long>(k));
  }
  return sum;
}

// ---------------------------------------------------------------------------

std::vector<Rational> read_terms(std::istream& in) {
  std::vector<Rational> out;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_space();
    if (i == line.size()) continue;

    auto read_int = [&](bool allow_sign) {
      const std::size_t begin = i;
      if (allow_sign && i < line.size() && (line[i] == '-' || line[i] == '+')) ++i;
      const std::size_t digits = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (i == digits) throw ParseError(line_start + i, {"integer"}, "malformed term");
      std::string text = line.substr(begin, i - begin);
      if (text.front() == '+') text.erase(0, 1);
      return Integer(text, 10);
    };
    const Integer num = read_int(true);
    Integer den(1);
    if (i < line.size() && line[i] == '/') {
      ++i;
      const std::size_t den_pos = line_start + i;
      den = read_int(false);
      if (den == 0) throw ParseError(den_pos, {"nonzero denominator"}, "zero denominator");
    }
    skip_space();
    if (i != line.size()) throw ParseError(line_start + i, {"end of line", "/"}, "trailing input");
    out.push_back(make_rational(num, den));
  }
  return out;
}

}  // namespace holoreduce
