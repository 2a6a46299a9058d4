#include <doctest.h>

#include <cmath>

#include "holoreduce/error.hpp"
#include "holoreduce/exprio.hpp"
#include "holoreduce/verify.hpp"

using namespace holoreduce;

namespace {

const Polynomial n = Polynomial::variable();
const std::string kFixtures = HOLOREDUCE_FIXTURE_DIR;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

IdentityFixture identity(const std::string& name) {
  return std::get<IdentityFixture>(load_fixture(kFixtures + "/" + name + ".fixture"));
}

CongruenceFixture congruence(const std::string& name) {
  return std::get<CongruenceFixture>(load_fixture(kFixtures + "/" + name + ".fixture"));
}

const char* const kDerived[] = {"domb_neg32_upper2_sq", "domb_neg32_upper2_cube", "domb_neg32_lower2_sq",
                                "domb_neg32_lower2_cube", "domb_neg32_upper3_sq"};

struct Setup {
  ShiftOperator l1;
  TermFunction g;
};

Setup congruence_setup() {
  const auto& seq = catalog_sequence("domb_over_16n");
  const ShiftOperator l1 = build_L1_lower(seq.op(), n + 1, 2);
  return {l1, divided_sequence(seq, ShiftProductSpec{n + 1, Side::Lower, 2, 0})};
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace

TEST_CASE("telescoping boundary of the congruence decomposition") {
  const auto [l1, g] = congruence_setup();
  for (long p : {7L, 13L, 19L}) {
    const auto r = check_telescoping(g, 2, l1, Polynomial(1), 2, p);
    CHECK(r.holds);
    const Rational pp = Rational(p * p);
    const Rational expected = 5 + 2 * pp * Rational(p * p - 3 * p + 2) * g(p - 1) - 8 * pp * pp * g(p);
    CHECK(r.sum == expected);
    CHECK(r.boundary_start == 5);
  }
}

TEST_CASE("empty telescoping window") {
  const auto [l1, g] = congruence_setup();
  const auto r = check_telescoping(g, 2, l1, Polynomial(1), 9, 9);
  CHECK(r.holds);
  CHECK(r.sum == 0);
  CHECK(r.boundary_start == r.boundary_end);
}

TEST_CASE("telescoping of the Franel summand against direct summation") {
  const auto& seq = catalog_sequence("franel_example22");
  const auto r = check_telescoping("franel_example22", seq.op(), Polynomial(1), 2, 30);
  Rational direct(0);
  for (std::int64_t m = 2; m < 30; ++m) direct += (2 - 3 * m) * seq.eval(m);
  CHECK(r.holds);
  CHECK(r.sum == direct);
}

TEST_CASE("telescoping outcome is invariant under scaling x") {
  const auto& seq = catalog_sequence("harmonic_example23");
  for (long c : {-3L, 2L, 7L}) {
    const auto a = check_telescoping("harmonic_example23", seq.op(), pow(n, 2) + 1, 1, 40);
    const auto b = check_telescoping("harmonic_example23", seq.op(), c * (pow(n, 2) + 1), 1, 40);
    CHECK(a.holds == b.holds);
    CHECK(b.sum == c * a.sum);
    CHECK(b.boundary_start == c * a.boundary_start);
  }
}

TEST_CASE("telescoping domain errors") {
  const auto& seq = catalog_sequence("harmonic_example23");
  CHECK(code_of([&] { check_telescoping("harmonic_example23", seq.op(), n, 0, 5); }) == ErrorCode::DomainViolation);
  CHECK(code_of([&] { check_telescoping("harmonic_example23", seq.op(), n, 5, 4); }) == ErrorCode::DomainViolation);
  CHECK(code_of([&] { check_telescoping("missing", seq.op(), n, 1, 4); }) == ErrorCode::UnknownSequence);
}

TEST_CASE("derived identities check exactly") {
  const auto source = identity("domb_neg32");
  const auto& seq = catalog_sequence(source.sequence);
  for (const char* name : kDerived) {
    CAPTURE(name);
    const auto fix = identity(name);
    REQUIRE(fix.derivation.has_value());
    const auto& d = *fix.derivation;
    const auto rr = rational_reduce(source.numer, seq.op(), d.factor, d.side, d.order);
    const auto rep = verify_identity_exact(fix, source, rr, 200, d.scale);
    CHECK(rep.summand_matches);
    CHECK(rep.reduction_consistent);
    CHECK(rep.telescopes);
    CHECK(rep.target_matches);
    CHECK(rep.derived_target == fix.target);
    CHECK(rep.ok());
  }
}

TEST_CASE("identity against itself") {
  const auto source = identity("domb_neg32");
  const auto& seq = catalog_sequence(source.sequence);
  const auto rep = verify_identity_exact(source, source, identity_reduction(source.numer, seq.op()), 50);
  CHECK(rep.ok());
  CHECK(rep.boundary_at_start == 0);
  CHECK(rep.target_matches);
}

TEST_CASE("a wrong scale or target is reported") {
  const auto source = identity("domb_neg32");
  const auto& seq = catalog_sequence(source.sequence);
  auto fix = identity("domb_neg32_lower2_sq");
  const auto& d = *fix.derivation;
  const auto rr = rational_reduce(source.numer, seq.op(), d.factor, d.side, d.order);
  CHECK_FALSE(verify_identity_exact(fix, source, rr, 50, Rational(9)).ok());
  fix.target = parse_pi_linear("11/12 - 18/pi");
  const auto rep = verify_identity_exact(fix, source, rr, 50, d.scale);
  CHECK(rep.ok());
  CHECK_FALSE(rep.target_matches);

  auto other = fix;
  other.sequence = "domb_over_16n";
  CHECK(code_of([&] { verify_identity_exact(other, source, rr, 50, d.scale); }) == ErrorCode::MismatchedSequence);
}

TEST_CASE("numeric partial sums obey the alternating bound") {
  const auto source = identity("domb_neg32");
  const auto& seq = catalog_sequence(source.sequence);
  const auto r = numeric_series_check(source, 100, Acceleration::None, 256);
  const Rational omitted = abs(source.numer(100) * seq.eval(100));
  CHECK(r.abs_error.to_double() <= to_double(omitted));
  CHECK(std::abs(r.target.to_double() - 2 / M_PI) < 1e-15);
}

TEST_CASE("exact and numeric partial sums agree") {
  for (const char* name : {"domb_neg32", "domb_neg32_upper2_sq", "domb_neg32_lower2_cube"}) {
    const auto fix = identity(name);
    for (std::size_t terms : {100U, 400U, 1000U}) {
      const double exact = to_double(exact_partial_sum(fix, terms));
      const double numeric = numeric_series_check(fix, terms, Acceleration::None).value.to_double();
      CHECK(std::abs(exact - numeric) <= std::ldexp(1.0, -50) * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("averaged sums refine monotonically") {
  for (const char* name : {"domb_neg32", "domb_neg32_upper3_sq", "domb_neg32_lower2_sq"}) {
    const auto fix = identity(name);
    double previous = 1e300;
    for (std::size_t terms : {100U, 200U, 400U, 800U}) {
      const double err = numeric_series_check(fix, terms, Acceleration::Average1).abs_error.to_double();
      CHECK(err <= previous + 1e-6);
      previous = err;
    }
    CHECK(previous <= 1e-4);
  }
}

TEST_CASE("numeric preconditions") {
  const auto fix = identity("domb_neg32");
  CHECK(code_of([&] { numeric_series_check(fix, 99, Acceleration::None); }) == ErrorCode::DomainViolation);
  CHECK(code_of([&] { numeric_series_check(fix, 100, Acceleration::None, 32); }) == ErrorCode::DomainViolation);
}

TEST_CASE("modular helpers") {
  CHECK(rational_mod(make_rational(3, 2), Integer(49)) == 26);
  CHECK(rational_mod(make_rational(-1, 3), Integer(49)) == 16);
  CHECK(code_of([] { rational_mod(make_rational(1, 7), Integer(49)); }) == ErrorCode::NonInvertibleDenominator);
  CHECK(is_prime(43));
  CHECK_FALSE(is_prime(49));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("congruences hold for the listed primes") {
  const std::vector<long> primes{43, 7, 13, 19, 31, 37};
  const auto zero = verify_congruence(congruence("domb_16_cong"), primes);
  REQUIRE(zero.size() == 6);
  CHECK(zero.front().prime == 7);
  for (const auto& r : zero) {
    CHECK(r.holds);
    CHECK(r.residue == 0);
  }
  for (const auto& r : verify_congruence(congruence("domb_16_cong_rational"), primes)) {
    CHECK(r.holds);
    CHECK(r.residue == rational_mod(make_rational(3, 2), r.modulus));
  }
}

TEST_CASE("congruence sum agrees with the reduction route") {
  const auto [l1, g] = congruence_setup();
  const auto& seq = catalog_sequence("domb_over_16n");
  for (long p : {7L, 13L, 19L, 31L}) {
    Rational direct(0), summand(0);
    for (long m = 2; m < p; ++m) {
      direct += make_rational((m + 1) * (m + 1), m * (m - 1)) * seq.eval(m);
      summand += (3 * m + 1) * seq.eval(m);
    }
    const Rational pp(p * p);
    const Rational boundary = 5 + 2 * pp * Rational(p * p - 3 * p + 2) * g(p - 1) - 8 * pp * pp * g(p);
    CHECK(direct == (summand + boundary) / 2);
    const Integer m2(p * p);
    CHECK(rational_mod(direct, m2) == rational_mod((summand + 5) / 2, m2));
  }
}

TEST_CASE("congruence edge cases") {
  auto empty = congruence("domb_16_cong");
  empty.start = 10;
  const auto r = verify_congruence(empty, {7});
  REQUIRE(r.size() == 1);
  CHECK(r[0].residue == 0);
  CHECK(r[0].holds);

  CHECK(code_of([] { verify_congruence(congruence("domb_16_cong"), {5}); }) == ErrorCode::PrimeFilterViolation);
  CHECK(code_of([] { verify_congruence(congruence("domb_16_cong"), {49}); }) == ErrorCode::PrimeFilterViolation);

  auto singular = congruence("domb_16_cong");
  singular.denom = n - 1;
  CHECK(code_of([&] { verify_congruence(singular, {7}); }) == ErrorCode::NonInvertibleDenominator);

  auto wrong = congruence("domb_16_cong_rational");
  wrong.target = Rational(1);
  for (const auto& w : verify_congruence(wrong, {7, 13})) CHECK_FALSE(w.holds);
}

TEST_CASE("fixture files round trip") {
  for (const char* name : {"domb_neg32", "domb_neg32_upper2_sq", "domb_neg32_upper2_cube", "domb_neg32_lower2_sq",
                           "domb_neg32_lower2_cube", "domb_neg32_upper3_sq", "domb_16_cong",
                           "domb_16_cong_rational"}) {
    CAPTURE(name);
    const auto fix = load_fixture(kFixtures + "/" + name + ".fixture");
    const std::string text = format_fixture(fix);
    CHECK(format_fixture(parse_fixture(text)) == text);
  }
  CHECK(identity("domb_neg32_lower2_sq").target == PiLinear{make_rational(33, 4), Rational(-18)});
  CHECK(identity("domb_neg32_lower2_cube").target == PiLinear{make_rational(-217, 8), Rational(162)});
  CHECK(congruence("domb_16_cong_rational").target == make_rational(3, 2));
}

TEST_CASE("pi-linear values") {
  CHECK(parse_pi_linear("2/pi") == PiLinear{Rational(0), Rational(2)});
  CHECK(parse_pi_linear("80 - 162/pi") == PiLinear{Rational(80), Rational(-162)});
  CHECK(parse_pi_linear(" -217/8 + 162/pi ") == PiLinear{make_rational(-217, 8), Rational(162)});
  CHECK(parse_pi_linear("7") == PiLinear{Rational(7), Rational(0)});
  for (const char* s : {"2/pi", "80 - 162/pi", "33/4 - 18/pi", "0"}) {
    const auto v = parse_pi_linear(s);
    CHECK(parse_pi_linear(format_pi_linear(v)) == v);
  }
  CHECK_THROWS_AS(parse_pi_linear("2/e"), Error);
}

TEST_CASE("malformed fixtures") {
  const std::string good = "kind = identity\nsequence = domb_over_neg32n\nnumerator = 3*n+1\nstart = 0\ntarget = 2/pi\n";
  CHECK(std::holds_alternative<IdentityFixture>(parse_fixture(good)));
  CHECK(code_of([&] { parse_fixture(good + "colour = red\n"); }) == ErrorCode::InvalidFixture);
  CHECK(code_of([&] { parse_fixture(good + "start = 1\n"); }) == ErrorCode::InvalidFixture);
  CHECK(code_of([] { parse_fixture("kind = identity\nsequence = x\n"); }) == ErrorCode::InvalidFixture);
  CHECK(code_of([] { parse_fixture("kind = other\n"); }) == ErrorCode::InvalidFixture);
  CHECK(code_of([] { parse_fixture("no equals sign\n"); }) == ErrorCode::InvalidFixture);
  CHECK(code_of([] { load_fixture("/nonexistent/file.fixture"); }) == ErrorCode::InvalidFixture);
}
