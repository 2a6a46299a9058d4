#include "holoreduce/degree_profile.hpp"

#include <map>

#include "holoreduce/error.hpp"

namespace holoreduce {

DegreeProfile degree_profile(const ShiftOperator& op) {
  if (op.is_zero()) throw Error(ErrorCode::ZeroOperator, "degree profile of the zero operator");
  const std::size_t order = op.order();
  const auto signed_order = static_cast<std::int64_t>(order);

  DegreeProfile out;
  out.b.resize(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    for (std::size_t j = k; j <= order; ++j) {
      const auto shift = static_cast<std::int64_t>(j) - signed_order;
      out.b[k] += op.coefficient(order - j).shift(shift) *
                  Rational(binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)));
    }
  }

  out.degree = Degree::neg_inf();
  for (std::size_t k = 0; k <= order; ++k) {
    out.degree = std::max(out.degree, out.b[k].degree() - static_cast<std::int64_t>(k));
  }
  if (out.degree.is_neg_inf()) {
    throw Error(ErrorCode::InternalInconsistency, "all b_k vanish for a nonzero operator");
  }

  for (std::size_t k = 0; k <= order; ++k) {
    const std::int64_t power = out.degree.value() + static_cast<std::int64_t>(k);
    if (power < 0) continue;
    const Rational c = out.b[k].coefficient(static_cast<std::size_t>(power));
    if (c != 0) out.indicial += falling_factorial(k) * c;
  }
  if (out.indicial.is_zero()) {
    throw Error(ErrorCode::InternalInconsistency, "indicial polynomial vanished");
  }
  for (const auto& r : integer_roots(out.indicial)) {
    if (r >= 0) out.exceptional.insert(r);
  }

  // L*(n^s) != 0 for some s <= J, since at most J degrees can be exceptional.
  bool found = false;
  for (std::size_t s = 0; s <= order; ++s) {
    if (!adjoint_apply(op, Polynomial::monomial(Rational(1), s)).is_zero()) {
      out.continued_zero_index = s;
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(ErrorCode::InternalInconsistency,
                "L*(n^s) vanished for every s <= J; continued zero index undefined");
  }

  out.max_coefficient_degree = op.max_coefficient_degree();
  out.degenerated = !out.exceptional.empty();
  out.strongly_nondegenerated = out.degree == out.max_coefficient_degree;
  return out;
}

DegreeLawReport degree_law_check(const ShiftOperator& op, const Polynomial& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "degree law needs a nonzero polynomial");
  const DegreeProfile profile = degree_profile(op);
  DegreeLawReport out;
  out.actual = adjoint_apply(op, x).degree();
  out.nominal = profile.degree + x.degree();
  out.ordering = out.actual < out.nominal ? DegreeOrdering::Less : DegreeOrdering::Equal;
  const bool exceptional = profile.exceptional.contains(Integer(static_cast<long>(x.degree().value())));
  out.law_holds = out.actual <= out.nominal && ((out.ordering == DegreeOrdering::Less) == exceptional);
  return out;
}

std::set<Integer> shift_collisions(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "shift collisions of a zero polynomial");
  if (a.is_constant() || b.is_constant()) return {};
  // Res_n(a(n), b(n+h)) has degree deg a * deg b in h; sample and interpolate.
  const auto samples = static_cast<std::size_t>(a.degree().value() * b.degree().value()) + 1;
  std::vector<Rational> hs;
  std::vector<Rational> values;
  hs.reserve(samples);
  values.reserve(samples);
  for (std::size_t h = 0; h < samples; ++h) {
    hs.emplace_back(static_cast<long>(h));
    values.push_back(resultant(a, b.shift(hs.back())));
  }
  const Polynomial res = interpolate(hs, values);
  if (res.is_zero()) {
    throw Error(ErrorCode::InternalInconsistency, "shift resultant vanished identically");
  }
  return integer_roots(res);
}

bool gcd_condition(const Polynomial& a, const Polynomial& b, std::int64_t offset) {
  const auto collisions = shift_collisions(a, b);
  const Integer first = to_integer(offset);
  for (const auto& h : collisions) {
    if (h >= first) return false;
  }
  return true;
}

SummableDegreeBounds summable_degree_bounds(const ShiftOperator& op) {
  if (op.is_zero()) throw Error(ErrorCode::ZeroOperator, "bounds of the zero operator");
  if (op.order() == 0) throw Error(ErrorCode::OrderZero, "bounds need an operator of order >= 1");
  const DegreeProfile profile = degree_profile(op);

  SummableDegreeBounds out;
  const auto cl = static_cast<std::int64_t>(profile.continued_zero_index);
  out.upper = profile.degree + cl;
  out.witness = adjoint_apply(op, Polynomial::monomial(Rational(1), profile.continued_zero_index));

  out.lower_valid = !op.trailing().is_zero() && gcd_condition(op.trailing(), op.leading(), 0);
  if (!out.lower_valid) return out;

  // Summable p are exactly the images L*(x). Above max R_L every x gives
  // degree deg L + deg x; below it, find the least degree in span{L*(n^s)}
  // by echelon reduction on leading terms.
  if (profile.exceptional.empty()) {
    out.lower = profile.degree + cl;
    return out;
  }
  const long top = profile.exceptional.rbegin()->get_si();
  Degree best = profile.degree + static_cast<std::int64_t>(top + 1);
  std::map<std::int64_t, Polynomial> pivots;
  for (long s = 0; s <= top; ++s) {
    Polynomial v = adjoint_apply(op, Polynomial::monomial(Rational(1), static_cast<std::size_t>(s)));
    while (!v.is_zero()) {
      const auto it = pivots.find(v.degree().value());
      if (it == pivots.end()) break;
      v -= it->second * (v.leading_coefficient() / it->second.leading_coefficient());
    }
    if (v.is_zero()) continue;
    best = std::min(best, v.degree());
    pivots.emplace(v.degree().value(), std::move(v));
  }
  out.lower = best;
  return out;
}

}  // namespace holoreduce
