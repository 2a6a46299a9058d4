#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "holoreduce/degree.hpp"
#include "holoreduce/rational.hpp"

namespace holoreduce {

/// Dense univariate polynomial over Q. Coefficient i multiplies n^i; the
/// stored vector never ends in a zero, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: constants promote
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial monomial(const Rational& c, std::size_t power);
  static Polynomial variable() { return monomial(Rational(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Degree degree() const noexcept;

  /// Coefficient of n^i (zero past the degree).
  Rational coefficient(std::size_t i) const;
  Rational leading_coefficient() const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Rational operator()(std::int64_t x) const { return (*this)(make_rational(x)); }

  /// p(n + k).
  Polynomial shift(const Rational& k) const;
  Polynomial shift(std::int64_t k) const { return shift(make_rational(k)); }

  Polynomial derivative() const;
  Polynomial monic() const;

  /// Positive-or-negative rational c with *this = c * primitive_part(), where
  /// the primitive part has coprime integer coefficients and a positive
  /// leading coefficient. Zero for the zero polynomial.
  Rational content() const;
  Polynomial primitive_part() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator/=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(Polynomial a, long c) { return a *= Rational(c); }
  friend Polynomial operator*(long c, Polynomial a) { return a *= Rational(c); }
  friend Polynomial operator*(Polynomial a, int c) { return a *= Rational(c); }
  friend Polynomial operator*(int c, Polynomial a) { return a *= Rational(c); }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Euclidean division a = q*b + r with deg r < deg b. Throws DivisionByZero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// a / b when b divides a; throws DivisionNotExact otherwise.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

bool divides(const Polynomial& b, const Polynomial& a);

/// Monic gcd. Throws BothZero when a == b == 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Resultant over Q (the Sylvester determinant). Zero when either input is 0.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]).
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Exact set of integer roots. Throws ZeroPolynomial.
std::set<Integer> integer_roots(const Polynomial& p);

/// s(s-1)...(s-k+1) as a polynomial in s; 1 for k == 0.
Polynomial falling_factorial(std::size_t k);

/// Product of p(n + k) for k in [first, last]; 1 when first > last.
Polynomial shifted_product(const Polynomial& p, std::int64_t first, std::int64_t last);

}  // namespace holoreduce
