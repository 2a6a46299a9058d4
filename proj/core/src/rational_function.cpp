#include "holoreduce/rational_function.hpp"

#include "holoreduce/error.hpp"

namespace holoreduce {

RationalFunction::RationalFunction(Polynomial numer) : numer_(std::move(numer)), denom_(1) {}

RationalFunction::RationalFunction(Polynomial numer, Polynomial denom) {
  if (denom.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (numer.is_zero()) {
    denom_ = Polynomial(1);
    return;
  }
  const Polynomial g = gcd(numer, denom);
  numer_ = exact_divide(numer, g);
  denom_ = exact_divide(denom, g);
  const Rational lc = denom_.leading_coefficient();
  numer_ /= lc;
  denom_ /= lc;
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = denom_(x);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational function evaluated at a pole");
  return numer_(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.numer_ * b.denom_ + b.numer_ * a.denom_, a.denom_ * b.denom_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.numer_ * b.denom_ - b.numer_ * a.denom_, a.denom_ * b.denom_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.numer_ * b.numer_, a.denom_ * b.denom_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  return {a.numer_ * b.denom_, a.denom_ * b.numer_};
}

}  // namespace holoreduce
