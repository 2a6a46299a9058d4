#include "holoreduce/shift_operator.hpp"

#include "holoreduce/error.hpp"

namespace holoreduce {

ShiftOperator::ShiftOperator(std::vector<Polynomial> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Polynomial& ShiftOperator::coefficient(std::size_t i) const {
  static const Polynomial zero;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

Degree ShiftOperator::max_coefficient_degree() const {
  Degree d = Degree::neg_inf();
  for (const auto& a : coeffs_) d = std::max(d, a.degree());
  return d;
}

Rational ShiftOperator::apply_at(std::int64_t n, std::span<const Rational> window) const {
  if (window.size() < coeffs_.size()) {
    throw Error(ErrorCode::DomainViolation, "operator window shorter than order + 1");
  }
  const Rational at = make_rational(n);
  Rational acc(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) acc += coeffs_[i](at) * window[i];
  }
  return acc;
}

ShiftOperator ShiftOperator::scaled(const Rational& c) const {
  std::vector<Polynomial> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return ShiftOperator(std::move(out));
}

Polynomial adjoint_apply(const ShiftOperator& op, const Polynomial& x) {
  Polynomial out;
  if (x.is_zero()) return out;
  for (std::size_t i = 0; i <= op.order() && !op.is_zero(); ++i) {
    const auto shift = -static_cast<std::int64_t>(i);
    out += op.coefficient(i).shift(shift) * x.shift(shift);
  }
  return out;
}

std::vector<Polynomial> certificate_polys(const ShiftOperator& op, const Polynomial& x) {
  const std::size_t order = op.order();
  if (op.is_zero() || order == 0) {
    throw Error(ErrorCode::OrderZero, "certificates need an operator of order >= 1");
  }
  // term[j] = a_{k}(n - j) x(n - j) is needed for every (k, j) with k = i + j.
  std::vector<Polynomial> shifted_x(order + 1);
  for (std::size_t j = 1; j <= order; ++j) shifted_x[j] = x.shift(-static_cast<std::int64_t>(j));
  std::vector<Polynomial> u(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 1; j <= order - i; ++j) {
      u[i] += op.coefficient(i + j).shift(-static_cast<std::int64_t>(j)) * shifted_x[j];
    }
  }
  return u;
}

Rational boundary_term(std::span<const Polynomial> certificate, const TermFunction& f,
                       std::int64_t n) {
  const Rational at = make_rational(n);
  Rational acc(0);
  for (std::size_t i = 0; i < certificate.size(); ++i) {
    if (certificate[i].is_zero()) continue;
    acc += certificate[i](at) * f(n + static_cast<std::int64_t>(i));
  }
  return acc;
}

}  // namespace holoreduce
