#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "holoreduce/polynomial.hpp"

namespace holoreduce {

/// L = sum_{i=0}^{J} a_i(n) S^i acting by L(F)(n) = sum_i a_i(n) F(n+i).
/// Trailing zero coefficients are trimmed; a_0 may be zero.
class ShiftOperator {
 public:
  ShiftOperator() = default;
  explicit ShiftOperator(std::vector<Polynomial> coefficients);

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// J, the index of the last nonzero coefficient. Zero for the zero operator.
  std::size_t order() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  const Polynomial& coefficient(std::size_t i) const;
  const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }
  const Polynomial& leading() const { return coefficient(order()); }
  const Polynomial& trailing() const { return coefficient(0); }

  /// max_i deg a_i.
  Degree max_coefficient_degree() const;

  /// sum_i a_i(n) * window[i]; window holds F(n), ..., F(n+J).
  Rational apply_at(std::int64_t n, std::span<const Rational> window) const;

  ShiftOperator scaled(const Rational& c) const;

  friend bool operator==(const ShiftOperator&, const ShiftOperator&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// L*(x)(n) = sum_{i=0}^{J} a_i(n-i) x(n-i).
Polynomial adjoint_apply(const ShiftOperator& op, const Polynomial& x);

/// u_i(n) = sum_{j=1}^{J-i} a_{i+j}(n-j) x(n-j), i = 0..J-1. Throws OrderZero.
///
/// With B(n) = sum_i u_i(n) F(n+i) and L F = 0 these satisfy
///   L*(x)(n) F(n) = B(n) - B(n+1),
/// i.e. L*(x) F = Delta(-B), so sum_{n=a}^{b-1} L*(x)(n) F(n) = B(a) - B(b).
std::vector<Polynomial> certificate_polys(const ShiftOperator& op, const Polynomial& x);

/// Sequence access used by certificate evaluation: n -> F(n).
using TermFunction = std::function<Rational(std::int64_t)>;

/// B(n) = sum_i u_i(n) F(n+i).
Rational boundary_term(std::span<const Polynomial> certificate, const TermFunction& f,
                       std::int64_t n);

}  // namespace holoreduce
