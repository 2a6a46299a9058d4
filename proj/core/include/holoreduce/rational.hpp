#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace holoreduce {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

Integer binomial(std::int64_t n, std::int64_t k);

Integer pow_integer(const Integer& base, unsigned long exponent);
Rational pow_rational(const Rational& base, long exponent);

}  // namespace holoreduce
