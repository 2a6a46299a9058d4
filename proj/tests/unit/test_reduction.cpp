#include <doctest.h>

#include "holoreduce/error.hpp"
#include "holoreduce/exprio.hpp"
#include "holoreduce/reduction.hpp"
#include "holoreduce/sequences.hpp"
#include "holoreduce/verify.hpp"
#include "support/generators.hpp"

using namespace holoreduce;
using holoreduce::testing::Gen;

namespace {

const Polynomial n = Polynomial::variable();

const ShiftOperator& op_of(const char* key) { return catalog_sequence(key).op(); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

struct Case {
  const char* key;
  Polynomial p;
  Polynomial factor;
  Side side;
  std::size_t order;
  Polynomial remainder;
};

std::vector<Case> known_cases() {
  const Rational ninth = make_rational(1, 9);
  const Rational e81 = make_rational(1, 81);
  return {
      {"domb_over_neg32n", 3 * n + 1, pow(n + 2, 2), Side::Upper, 2,
       ninth * parse_polynomial("15*n^4 + 78*n^3 + 141*n^2 + 103*n + 27")},
      {"domb_over_neg32n", 3 * n + 1, pow(n + 2, 3), Side::Upper, 2,
       -e81 * parse_polynomial("239 + 807*n + 993*n^2 + 582*n^3 + 165*n^4 + 18*n^5")},
      {"domb_over_neg32n", 3 * n + 1, pow(n + 1, 2), Side::Lower, 2,
       -ninth * parse_polynomial("39*n^4 - 21*n^3 - 9*n^2 + 5*n + 2")},
      {"domb_over_neg32n", 3 * n + 1, pow(n + 1, 3), Side::Lower, 2,
       e81 * parse_polynomial("-26 - 21*n + 105*n^2 - 9*n^3 - 147*n^4 + 306*n^5")},
      {"domb_over_neg32n", 3 * n + 1, pow(n + 2, 2), Side::Upper, 3,
       make_rational(1, 243) * parse_polynomial("228*n^4 + 1879*n^3 + 5895*n^2 + 8701*n + 5729")},
      {"domb_over_16n", 3 * n + 1, n + 1, Side::Lower, 2, 2 * pow(n + 1, 2)},
  };
}

}  // namespace

TEST_CASE("shift product expansion") {
  CHECK(sp_expand({n + 1, Side::Lower, 2, 0}) == n * (n - 1));
  CHECK(sp_expand({pow(n + 2, 2), Side::Upper, 2, -2}) == pow(n + 1, 2) * pow(n + 2, 2));
  CHECK(sp_expand({pow(n, 3) + 7, Side::Upper, 0, 5}) == Polynomial(1));
  CHECK(sp_expand({n, Side::Lower, 0, 0}) == Polynomial(1));
}

TEST_CASE("polynomial reduction of the congruence summand") {
  const ShiftOperator l1 = build_L1_lower(op_of("domb_over_16n"), n + 1, 2);
  const auto r = polynomial_reduce(n * (n - 1) * (3 * n + 1), l1);
  CHECK(r.remainder == 2 * pow(n + 1, 2));
  CHECK(r.multiplier == Polynomial(-1));
  CHECK(r.operator_used == l1);
  CHECK(r.certificate == certificate_polys(l1, Polynomial(-1)));
}

TEST_CASE("polynomial reduction of the first series summand") {
  const ShiftOperator l1 = build_L1_upper(op_of("domb_over_neg32n"), pow(n + 2, 2), 2);
  const Polynomial p = (3 * n + 1) * pow(n + 1, 2) * pow(n + 2, 2);
  const auto r = polynomial_reduce(p, l1);
  CHECK(r.remainder == make_rational(1, 9) * parse_polynomial("27 + 103*n + 141*n^2 + 78*n^3 + 15*n^4"));
  // the leading terms force +1/9 (3 = 27 * 1/9)
  CHECK(r.multiplier == Polynomial(make_rational(1, 9)));
  CHECK(r.remainder + adjoint_apply(l1, r.multiplier) == p);
}

TEST_CASE("polynomial reduction of zero") {
  const auto r = polynomial_reduce(Polynomial(), op_of("domb"));
  CHECK(r.remainder.is_zero());
  CHECK(r.multiplier.is_zero());
  CHECK(code_of([] { polynomial_reduce(n, ShiftOperator()); }) == ErrorCode::ZeroOperator);
  CHECK(code_of([] { polynomial_reduce(n, ShiftOperator({n})); }) == ErrorCode::OrderZero);
}

TEST_CASE("lower builder examples") {
  const ShiftOperator l1 = build_L1_lower(op_of("domb_over_16n"), n + 1, 2);
  const ShiftOperator expected({2 * (n - 1) * n * pow(n + 1, 2),
                                -n * (3 + 2 * n) * (12 + 15 * n + 5 * pow(n, 2)), 8 * pow(n + 2, 4)});
  CHECK(l1 == expected);
  for (std::size_t order = 2; order <= 4; ++order) {
    CHECK(build_L1_lower(op_of("domb_over_neg32n"), Polynomial(1), order) == op_of("domb_over_neg32n"));
  }
  // a_0 divided out completely: trailing coefficient is a shift product of the factor
  const ShiftOperator full = build_L1_lower(op_of("domb_over_neg32n"), pow(n + 1, 3), 2);
  CHECK(full.coefficient(0) == pow(n, 3) * pow(n - 1, 3));
  CHECK(full.coefficient(1) == op_of("domb_over_neg32n").coefficient(1) * pow(n, 3));
  CHECK(full.coefficient(2) == op_of("domb_over_neg32n").coefficient(2) * pow(n + 2, 3));
}

TEST_CASE("upper builder examples") {
  const ShiftOperator l1 = build_L1_upper(op_of("domb_over_neg32n"), pow(n + 2, 2), 2);
  CHECK(l1.coefficient(2) == 16 * (2 + n) * pow(3 + n, 2) * pow(4 + n, 2));
  CHECK(l1.coefficient(1) == pow(3 + n, 2) * (3 + 2 * n) * (12 + 15 * n + 5 * pow(n, 2)));
  CHECK(l1.coefficient(0) == pow(1 + n, 5));
  CHECK(build_L1_upper(op_of("domb_over_neg32n"), Polynomial(1), 2) == op_of("domb_over_neg32n"));
}

TEST_CASE("builder errors") {
  const auto& op = op_of("domb_over_neg32n");
  CHECK(code_of([&] { build_L1_lower(op, n + 2, 2); }) == ErrorCode::FactorNotDivisor);
  CHECK(code_of([&] { build_L1_upper(op, n + 1, 2); }) == ErrorCode::FactorNotDivisor);
  CHECK(code_of([&] { build_L1_lower(op, n + 1, 1); }) == ErrorCode::OrderTooSmall);
  CHECK(code_of([&] { build_L1_upper(op, n + 2, 1); }) == ErrorCode::OrderTooSmall);
  CHECK(code_of([&] { build_L1_lower(ShiftOperator({Polynomial(), n}), n, 1); }) == ErrorCode::ZeroInput);
}

TEST_CASE("rational reduction reproduces the known numerators") {
  for (const auto& c : known_cases()) {
    const auto rr = rational_reduce(c.p, op_of(c.key), c.factor, c.side, c.order);
    CAPTURE(print(c.factor));
    CAPTURE(c.order);
    CHECK(rr.remainder_numer == c.remainder);
    const Polynomial sp = sp_expand(rr.denominator);
    CHECK(rr.remainder_numer + adjoint_apply(rr.derived_operator, rr.reduction.multiplier) == c.p * sp);
    if (rr.degree_bound) CHECK(rr.remainder_numer.degree() < *rr.degree_bound);
  }
  const auto t = rational_reduce(3 * n + 1, op_of("domb_over_16n"), n + 1, Side::Lower, 2);
  CHECK(sp_expand(t.denominator) == n * (n - 1));
}

TEST_CASE("cubic factors") {
  const auto& op = op_of("domb_over_neg32n");
  const auto up = rational_reduce(3 * n + 1, op, pow(n + 2, 3), Side::Upper, 2);
  CHECK(sp_expand(up.denominator) == pow(n + 1, 3) * pow(n + 2, 3));
  const auto lo = rational_reduce(3 * n + 1, op, pow(n + 1, 3), Side::Lower, 2);
  CHECK(sp_expand(lo.denominator) == pow(n, 3) * pow(n - 1, 3));
  CHECK(lo.reduction.multiplier == make_rational(1, 81) * (9 * n - 4));
  CHECK(up.reduction.multiplier == make_rational(1, 81) * (9 * n + 23));
}

TEST_CASE("factor 1 is the plain polynomial reduction") {
  const auto& op = op_of("domb_over_neg32n");
  const auto rr = rational_reduce(3 * n + 1, op, Polynomial(1), Side::Upper, 2);
  CHECK(rr.remainder_numer == polynomial_reduce(3 * n + 1, op).remainder);
  CHECK(sp_expand(rr.denominator) == Polynomial(1));
}

TEST_CASE("exactness on random nondegenerated operators") {
  Gen g(41);
  int seen = 0;
  while (seen < 300) {
    const ShiftOperator op = g.operator_(3, 3);
    const auto prof = degree_profile(op);
    if (prof.degenerated) continue;
    ++seen;
    const Polynomial p = g.polynomial(9);
    const auto r = polynomial_reduce(p, op);
    CHECK(r.remainder + adjoint_apply(op, r.multiplier) == p);
    CHECK(r.remainder.degree() < prof.degree);
    CHECK(polynomial_reduce(r.remainder, op).remainder == r.remainder);
  }
}

TEST_CASE("degree contract on degenerated operators") {
  Gen g(42);
  int seen = 0;
  long guard = 0;
  while (seen < 100 && ++guard < 200000) {
    // S-weighted sums of a shared leading coefficient tend to degenerate
    const Polynomial a = g.polynomial_of_degree(g.index(3), 5, true);
    const ShiftOperator op({a * g.integer(-3, 3), a.shift(-1) * g.integer(-3, 3), a.shift(-2) * g.integer(1, 3)});
    if (op.is_zero() || op.order() == 0) continue;
    const auto prof = degree_profile(op);
    if (!prof.degenerated) continue;
    ++seen;
    const Polynomial p = g.polynomial(8);
    const auto r = polynomial_reduce(p, op);
    CHECK(r.remainder + adjoint_apply(op, r.multiplier) == p);
    for (std::size_t d = 0; d < r.remainder.coefficients().size(); ++d) {
      if (r.remainder.coefficient(d) == 0) continue;
      const auto dd = static_cast<std::int64_t>(d);
      if (Degree(dd) < prof.degree) continue;
      CHECK(prof.exceptional.count(Integer(static_cast<long>(dd - prof.degree.value()))) == 1);
    }
    CHECK(polynomial_reduce(r.remainder, op).remainder == r.remainder);
  }
  CHECK(seen == 100);
}

TEST_CASE("scaling the operator scales the multiplier") {
  Gen g(43);
  for (int t = 0; t < 100; ++t) {
    const ShiftOperator op = g.operator_(3, 3);
    const Polynomial p = g.polynomial(8);
    const Rational c = g.nonzero_rational();
    const auto a = polynomial_reduce(p, op);
    const auto b = polynomial_reduce(p, op.scaled(c));
    CHECK(b.remainder == a.remainder);
    CHECK(b.multiplier * c == a.multiplier);
  }
}

TEST_CASE("derived operators annihilate the divided sequence") {
  for (const auto& c : known_cases()) {
    const auto& seq = catalog_sequence(c.key);
    const auto rr = rational_reduce(c.p, seq.op(), c.factor, c.side, c.order);
    const auto g = divided_sequence(seq, rr.denominator);
    const auto& l1 = rr.derived_operator;
    const std::int64_t first = seq.start() + static_cast<std::int64_t>(c.order);
    for (std::int64_t m = first; m < first + 100; ++m) {
      std::vector<Rational> window;
      for (std::size_t i = 0; i <= l1.order(); ++i) window.push_back(g(m + static_cast<std::int64_t>(i)));
      if (l1.apply_at(m, window) != 0) {
        FAIL(print(c.factor) << " n=" << m);
        break;
      }
    }
  }
}

TEST_CASE("rational reduction telescopes over windows") {
  for (const auto& c : known_cases()) {
    const auto& seq = catalog_sequence(c.key);
    const auto rr = rational_reduce(c.p, seq.op(), c.factor, c.side, c.order);
    const auto f = seq.as_function();
    const auto g = divided_sequence(seq, rr.denominator);
    const Polynomial sp = sp_expand(rr.denominator);
    const auto& u = rr.reduction.certificate;
    const std::int64_t a0 = seq.start() + static_cast<std::int64_t>(c.order);
    std::vector<Rational> prefix{Rational(0)};
    for (std::int64_t m = a0; m <= a0 + 100; ++m) {
      const Rational d = c.p(m) * f(m) - rr.remainder_numer(m) / sp(m) * f(m);
      prefix.push_back(prefix.back() + d);
    }
    for (std::int64_t a = a0; a <= a0 + 100; a += 7) {
      for (std::int64_t b = a; b <= a0 + 100; b += 13) {
        const Rational sum = prefix[static_cast<std::size_t>(b - a0 + 1)] - prefix[static_cast<std::size_t>(a - a0)];
        CHECK(sum == boundary_term(u, g, a) - boundary_term(u, g, b + 1));
      }
    }
  }
}

TEST_CASE("denominator admissibility") {
  const auto& harmonic = op_of("harmonic_example23");
  const auto h5 = denominator_admissibility(harmonic, n + 5);
  CHECK(h5.trailing_leading);
  CHECK_FALSE(h5.denominator_leading);
  CHECK_FALSE(h5.all());
  CHECK(denominator_admissibility(harmonic, 2 * n + 1).all());
  CHECK(denominator_admissibility(harmonic, Polynomial(1)).all());

  const auto d = denominator_admissibility(op_of("domb_over_16n"), n * (n - 1));
  CHECK_FALSE(d.trailing_denominator);
  CHECK_FALSE(d.all());

  CHECK(code_of([&] { denominator_admissibility(harmonic, Polynomial()); }) == ErrorCode::ZeroInput);
}
