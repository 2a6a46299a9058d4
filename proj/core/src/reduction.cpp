#include "holoreduce/reduction.hpp"

#include <string>

#include "holoreduce/error.hpp"

namespace holoreduce {
namespace {

void require_reducing_operator(const ShiftOperator& op) {
  if (op.is_zero()) throw Error(ErrorCode::ZeroOperator, "reduction by the zero operator");
  if (op.order() == 0) throw Error(ErrorCode::OrderZero, "reduction needs an operator of order >= 1");
}

void require_builder_inputs(const ShiftOperator& op, const Polynomial& coefficient,
                            const Polynomial& factor, std::size_t order, const char* which) {
  require_reducing_operator(op);
  if (coefficient.is_zero()) {
    throw Error(ErrorCode::ZeroInput, std::string(which) + " coefficient is zero");
  }
  if (order < op.order()) {
    throw Error(ErrorCode::OrderTooSmall, "shift-product order must be at least the operator order");
  }
  if (factor.is_zero() || !divides(factor, coefficient)) {
    throw Error(ErrorCode::FactorNotDivisor,
                std::string("factor does not divide the ") + which + " coefficient");
  }
}

}  // namespace

ReductionResult polynomial_reduce(const Polynomial& p, const ShiftOperator& op) {
  require_reducing_operator(op);
  const DegreeProfile profile = degree_profile(op);
  const std::int64_t deg_op = profile.degree.value();

  Polynomial remainder = p;
  std::vector<Rational> multiplier;
  for (std::int64_t top = remainder.degree().is_neg_inf() ? -1 : remainder.degree().value();
       top >= 0 && top >= deg_op; --top) {
    const Rational c = remainder.coefficient(static_cast<std::size_t>(top));
    if (c == 0) continue;
    const std::int64_t s = top - deg_op;
    if (profile.exceptional.contains(to_integer(s))) continue;
    const auto power = static_cast<std::size_t>(s);
    const Polynomial image = adjoint_apply(op, Polynomial::monomial(Rational(1), power));
    if (image.degree() != Degree(top)) {
      throw Error(ErrorCode::InternalInconsistency, "L*(n^s) missed its predicted degree");
    }
    const Rational f = c / image.leading_coefficient();
    remainder -= image * f;
    if (multiplier.size() <= power) multiplier.resize(power + 1, Rational(0));
    multiplier[power] += f;
  }

  ReductionResult out;
  out.remainder = std::move(remainder);
  out.multiplier = Polynomial(std::move(multiplier));
  out.certificate = certificate_polys(op, out.multiplier);
  out.operator_used = op;
  return out;
}

Polynomial sp_expand(const ShiftProductSpec& spec) {
  if (spec.order == 0) return Polynomial(1);
  const auto count = static_cast<std::int64_t>(spec.order);
  if (spec.direction == Side::Upper) {
    return shifted_product(spec.base, spec.base_shift + 1, spec.base_shift + count);
  }
  return shifted_product(spec.base, spec.base_shift - count, spec.base_shift - 1);
}

ShiftOperator build_L1_lower(const ShiftOperator& op, const Polynomial& factor, std::size_t order) {
  require_builder_inputs(op, op.trailing(), factor, order, "trailing");
  const auto J = static_cast<std::int64_t>(op.order());
  const auto I = static_cast<std::int64_t>(order);
  const Polynomial cofactor = exact_divide(op.trailing(), factor);

  std::vector<Polynomial> coeffs(op.order() + 1);
  coeffs[0] = cofactor * shifted_product(factor, -I, -(I - J + 1));
  for (std::int64_t i = 1; i <= J; ++i) {
    coeffs[static_cast<std::size_t>(i)] = op.coefficient(static_cast<std::size_t>(i)) *
                                          shifted_product(factor, 1, i - 1) *
                                          shifted_product(factor, -(I - i), -(I - J + 1));
  }
  return ShiftOperator(std::move(coeffs));
}

ShiftOperator build_L1_upper(const ShiftOperator& op, const Polynomial& factor, std::size_t order) {
  require_builder_inputs(op, op.leading(), factor, order, "leading");
  const auto J = static_cast<std::int64_t>(op.order());
  const auto I = static_cast<std::int64_t>(order);
  const Polynomial cofactor = exact_divide(op.leading(), factor);

  std::vector<Polynomial> coeffs(op.order() + 1);
  for (std::int64_t i = 0; i < J; ++i) {
    coeffs[static_cast<std::size_t>(i)] = op.coefficient(static_cast<std::size_t>(i)) *
                                          shifted_product(factor, -(J - i - 1), -1) *
                                          shifted_product(factor, I - J + 1, I - J + i);
  }
  coeffs[static_cast<std::size_t>(J)] = cofactor * shifted_product(factor, I - J + 1, I);
  return ShiftOperator(std::move(coeffs));
}

ShiftProductSpec shift_product_spec(const ShiftOperator& op, const Polynomial& factor, Side side,
                                    std::size_t order) {
  ShiftProductSpec spec;
  spec.base = factor;
  spec.direction = side;
  spec.order = order;
  spec.base_shift = side == Side::Upper ? -static_cast<std::int64_t>(op.order()) : 0;
  return spec;
}

RationalReductionResult rational_reduce(const Polynomial& p, const ShiftOperator& op,
                                        const Polynomial& factor, Side side, std::size_t order,
                                        RationalReduceOptions options) {
  require_reducing_operator(op);
  const std::size_t attempts = options.auto_grow ? options.max_growth + 1 : 1;
  for (std::size_t growth = 0; growth < attempts; ++growth) {
    const std::size_t current = order + growth;
    ShiftOperator derived = side == Side::Lower ? build_L1_lower(op, factor, current)
                                                : build_L1_upper(op, factor, current);
    ShiftProductSpec spec = shift_product_spec(op, factor, side, current);
    ReductionResult reduction = polynomial_reduce(p * sp_expand(spec), derived);

    const Degree derived_degree = degree_profile(derived).degree;
    if (!reduction.remainder.is_zero() && reduction.remainder.degree() >= derived_degree) {
      continue;
    }

    RationalReductionResult out;
    out.remainder_numer = reduction.remainder;
    out.denominator = std::move(spec);
    out.derived_operator = std::move(derived);
    out.reduction = std::move(reduction);
    out.side = side;
    out.order = current;
    out.growth = growth;
    const DegreeProfile profile = degree_profile(op);
    if (profile.strongly_nondegenerated) {
      out.degree_bound = profile.degree +
                         (static_cast<std::int64_t>(op.order()) - 1) * factor.degree().value();
    }
    return out;
  }
  std::string msg = "remainder kept a term at or above deg L1 for I = " + std::to_string(order);
  if (options.auto_grow) {
    msg += " .. " + std::to_string(order + options.max_growth) + " (auto-grow cap reached)";
  }
  throw Error(ErrorCode::IrreducibleAtThisI, msg);
}

AdmissibilityReport denominator_admissibility(const ShiftOperator& op, const Polynomial& b) {
  require_reducing_operator(op);
  if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "denominator is zero");
  if (op.trailing().is_zero()) throw Error(ErrorCode::ZeroInput, "a_0 is zero");
  const auto J = static_cast<std::int64_t>(op.order());
  AdmissibilityReport out;
  out.trailing_leading = gcd_condition(op.trailing(), op.leading(), 0);
  out.denominator_self = gcd_condition(b, b, J);
  out.trailing_denominator = gcd_condition(op.trailing(), b, J);
  out.denominator_leading = gcd_condition(b, op.leading(), 0);
  return out;
}

}  // namespace holoreduce
