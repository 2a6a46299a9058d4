#pragma once

#include "holoreduce/polynomial.hpp"

namespace holoreduce {

/// numer/denom in canonical form: coprime, denominator monic.
class RationalFunction {
 public:
  RationalFunction() : denom_(1) {}
  RationalFunction(Polynomial numer);  // NOLINT: polynomials promote
  RationalFunction(Polynomial numer, Polynomial denom);

  const Polynomial& numer() const noexcept { return numer_; }
  const Polynomial& denom() const noexcept { return denom_; }

  bool is_zero() const noexcept { return numer_.is_zero(); }
  bool is_polynomial() const noexcept { return denom_.is_constant(); }

  /// Throws DivisionByZero at a pole.
  Rational operator()(const Rational& x) const;

  RationalFunction operator-() const { return {-numer_, denom_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  Polynomial numer_;
  Polynomial denom_;
};

}  // namespace holoreduce
