// One PASS/FAIL line per acceptance criterion. Usage: acceptance [--criterion K]
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "holoreduce/exprio.hpp"
#include "holoreduce/verify.hpp"
#include "support/generators.hpp"

using namespace holoreduce;

namespace {

const Polynomial n = Polynomial::variable();
const std::string kFixtures = HOLOREDUCE_FIXTURE_DIR;

constexpr double kSeriesTolerance = 1e-4;
constexpr std::size_t kSeriesTerms = 100000;
constexpr long kSeriesBits = 96;
constexpr std::size_t kTelescopeIndices = 100;
constexpr std::size_t kRandomOperators = 200;
constexpr std::size_t kRoundTrips = 500;
constexpr std::size_t kGuessTerms = 40;
constexpr std::size_t kHeldOut = 30;
const std::vector<long> kPrimes{7, 13, 19, 31, 37, 43};

/// Collects failed sub-checks of one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

const ShiftOperator& op_of(const char* key) { return catalog_sequence(key).op(); }

IdentityFixture identity(const std::string& name) {
  return std::get<IdentityFixture>(load_fixture(kFixtures + "/" + name + ".fixture"));
}

CongruenceFixture congruence(const std::string& name) {
  return std::get<CongruenceFixture>(load_fixture(kFixtures + "/" + name + ".fixture"));
}

struct KnownIdentity {
  const char* fixture;
  Polynomial factor;
  Side side;
  std::size_t order;
  const char* numerator;
  Polynomial denominator;
};

std::vector<KnownIdentity> known_identities() {
  return {
      {"domb_neg32_upper2_sq", pow(n + 2, 2), Side::Upper, 2, "27 + 103*n + 141*n^2 + 78*n^3 + 15*n^4",
       pow(n + 1, 2) * pow(n + 2, 2)},
      {"domb_neg32_upper2_cube", pow(n + 2, 3), Side::Upper, 2,
       "239 + 807*n + 993*n^2 + 582*n^3 + 165*n^4 + 18*n^5", pow(n + 1, 3) * pow(n + 2, 3)},
      {"domb_neg32_lower2_sq", pow(n + 1, 2), Side::Lower, 2, "2 + 5*n - 9*n^2 - 21*n^3 + 39*n^4",
       pow(n, 2) * pow(n - 1, 2)},
      {"domb_neg32_lower2_cube", pow(n + 1, 3), Side::Lower, 2,
       "-26 - 21*n + 105*n^2 - 9*n^3 - 147*n^4 + 306*n^5", pow(n, 3) * pow(n - 1, 3)},
      {"domb_neg32_upper3_sq", pow(n + 2, 2), Side::Upper, 3, "5729 + 8701*n + 5895*n^2 + 1879*n^3 + 228*n^4",
       pow(n + 1, 2) * pow(n + 2, 2) * pow(n + 3, 2)},
  };
}

void criterion1(Checks& c) {
  const auto ex22 = degree_profile(op_of("franel_example22"));
  c.expect(ex22.degree == Degree(2) && ex22.continued_zero_index == 0, "franel_example22 profile");
  const auto ex23 = degree_profile(op_of("harmonic_example23"));
  c.expect(ex23.degree == Degree(1) && ex23.continued_zero_index == 1 && ex23.degenerated, "harmonic_example23 profile");
  const auto ex27 = degree_profile(op_of("central_binomial_example27"));
  c.expect(ex27.degree == Degree(3) && ex27.continued_zero_index == 0, "central_binomial_example27 profile");
  const auto ex32 = degree_profile(op_of("domb_over_16n"));
  c.expect(ex32.degree == Degree(2) && !ex32.degenerated && ex32.max_coefficient_degree == Degree(3) &&
               !ex32.strongly_nondegenerated,
           "domb_over_16n profile");
}

void criterion2(Checks& c) {
  const ShiftOperator l1 = build_L1_upper(op_of("domb_over_neg32n"), pow(n + 2, 2), 2);
  const auto a = polynomial_reduce((3 * n + 1) * pow(n + 1, 2) * pow(n + 2, 2), l1);
  c.expect(a.remainder == make_rational(1, 9) * parse_polynomial("27 + 103*n + 141*n^2 + 78*n^3 + 15*n^4"),
           "series remainder");
  c.expect(a.multiplier == Polynomial(make_rational(-1, 9)),
           "series multiplier: expected -1/9, computed " + print(a.multiplier));

  const ShiftOperator l2 = build_L1_lower(op_of("domb_over_16n"), n + 1, 2);
  const auto b = polynomial_reduce(n * (n - 1) * (3 * n + 1), l2);
  c.expect(b.remainder == 2 * pow(n + 1, 2), "congruence remainder");
  c.expect(b.multiplier == Polynomial(-1), "congruence multiplier");
}

void criterion3(Checks& c) {
  const auto source = identity("domb_neg32");
  const auto& op = catalog_sequence(source.sequence).op();
  for (const auto& p : known_identities()) {
    const auto fix = identity(p.fixture);
    const Rational scale = fix.derivation ? fix.derivation->scale : Rational(0);
    const auto rr = rational_reduce(source.numer, op, p.factor, p.side, p.order);
    const Polynomial numerator = parse_polynomial(p.numerator);
    c.expect(scale * rr.remainder_numer == numerator, std::string(p.fixture) + " numerator");
    c.expect(sp_expand(rr.denominator) == p.denominator, std::string(p.fixture) + " denominator");
    c.expect(fix.numer == numerator && fix.denom == p.denominator, std::string(p.fixture) + " fixture summand");
  }
}

bool telescopes_pointwise(const std::vector<Polynomial>& u, const TermFunction& g, const TermFunction& lhs,
                          std::int64_t first) {
  for (std::size_t k = 0; k < kTelescopeIndices; ++k) {
    const auto m = first + static_cast<std::int64_t>(k);
    if (lhs(m) != boundary_term(u, g, m) - boundary_term(u, g, m + 1)) return false;
  }
  return true;
}

void criterion4(Checks& c) {
  const auto source = identity("domb_neg32");
  const auto& seq = catalog_sequence(source.sequence);
  const auto f = seq.as_function();
  for (const auto& p : known_identities()) {
    const auto fix = identity(p.fixture);
    const auto rr = rational_reduce(source.numer, seq.op(), p.factor, p.side, p.order);
    const auto g = divided_sequence(seq, rr.denominator);
    const Polynomial sp = sp_expand(rr.denominator);
    const TermFunction lhs = [&](std::int64_t m) -> Rational {
      return source.numer(m) * f(m) - rr.remainder_numer(m) / sp(m) * f(m);
    };
    c.expect(telescopes_pointwise(rr.reduction.certificate, g, lhs, fix.start), std::string(p.fixture));
  }

  const auto& domb16 = catalog_sequence("domb_over_16n");
  const auto rr = rational_reduce(3 * n + 1, domb16.op(), n + 1, Side::Lower, 2);
  const auto g = divided_sequence(domb16, rr.denominator);
  const auto f16 = domb16.as_function();
  const Polynomial sp = sp_expand(rr.denominator);
  const TermFunction lhs = [&](std::int64_t m) -> Rational {
    return (3 * m + 1) * f16(m) - rr.remainder_numer(m) / sp(m) * f16(m);
  };
  c.expect(telescopes_pointwise(rr.reduction.certificate, g, lhs, 2), "congruence decomposition");
  const auto window = check_telescoping(g, 2, rr.derived_operator, Polynomial(1), 2,
                                        2 + static_cast<std::int64_t>(kTelescopeIndices));
  c.expect(window.holds, "congruence decomposition window");
}

void criterion5(Checks& c) {
  for (const char* name : {"domb_neg32", "domb_neg32_upper2_sq", "domb_neg32_upper2_cube", "domb_neg32_lower2_sq",
                           "domb_neg32_lower2_cube", "domb_neg32_upper3_sq"}) {
    const auto r = numeric_series_check(identity(name), kSeriesTerms, Acceleration::Average1, kSeriesBits);
    std::ostringstream msg;
    msg << name << " error " << r.abs_error.to_string(6);
    c.expect(r.abs_error.to_double() <= kSeriesTolerance, msg.str());
  }
}

void criterion6(Checks& c) {
  for (const auto& r : verify_congruence(congruence("domb_16_cong"), kPrimes)) {
    c.expect(r.holds && r.residue == 0, "zero congruence at p = " + std::to_string(r.prime));
  }
  for (const auto& r : verify_congruence(congruence("domb_16_cong_rational"), kPrimes)) {
    c.expect(r.holds && r.residue == rational_mod(make_rational(3, 2), r.modulus),
             "3/2 congruence at p = " + std::to_string(r.prime));
  }
}

void criterion7(Checks& c) {
  testing::Gen gen(20241);
  for (std::size_t t = 0; t < kRandomOperators; ++t) {
    const ShiftOperator op = gen.operator_(3, 3);
    const auto prof = degree_profile(op);
    const auto bounds = summable_degree_bounds(op);
    const std::string tag = " (" + print(op) + ")";
    c.expect(prof.continued_zero_index <= op.order(), "C_L <= J" + tag);
    c.expect(prof.degenerated || prof.continued_zero_index == 0, "nondegenerated => C_L = 0" + tag);
    c.expect(bounds.witness.degree() <= prof.degree + Degree(static_cast<std::int64_t>(prof.continued_zero_index)),
             "witness degree" + tag);
    Polynomial x = gen.polynomial(5);
    if (x.is_zero()) x = Polynomial(1);
    c.expect(degree_law_check(op, x).law_holds, "degree law" + tag);
  }
}

bool annihilates(const ShiftOperator& op, const TermFunction& f, std::int64_t from, std::int64_t count) {
  for (std::int64_t m = from; m < from + count; ++m) {
    std::vector<Rational> w;
    for (std::size_t i = 0; i <= op.order(); ++i) w.push_back(f(m + static_cast<std::int64_t>(i)));
    if (op.apply_at(m, w) != 0) return false;
  }
  return true;
}

std::optional<ShiftOperator> guess(const char* key) {
  const auto f = catalog_sequence(key).as_function();
  std::vector<Rational> terms;
  for (std::size_t k = 0; k < kGuessTerms; ++k) terms.push_back(f(static_cast<std::int64_t>(k)));
  return guess_annihilator(terms, 0, 2, 3);
}

void criterion8(Checks& c) {
  const auto held_from = static_cast<std::int64_t>(kGuessTerms);
  const auto held = static_cast<std::int64_t>(kHeldOut);
  const auto franel = guess("franel");
  c.expect(franel.has_value() && annihilates(*franel, catalog_sequence("franel").as_function(), held_from, held),
           "Franel held-out terms");
  const auto domb = guess("domb");
  c.expect(domb.has_value() && annihilates(*domb, catalog_sequence("domb").as_function(), held_from, held),
           "Domb held-out terms");
  if (!domb) return;
  std::vector<Polynomial> conj;
  for (std::size_t i = 0; i <= domb->order(); ++i) {
    conj.push_back(domb->coefficient(i) * pow_rational(Rational(16), static_cast<long>(i)));
  }
  const ShiftOperator conjugated(conj);
  const ShiftOperator& target = op_of("domb_over_16n");
  const Rational ratio = target.leading().leading_coefficient() / conjugated.leading().leading_coefficient();
  c.expect(conjugated.order() == target.order() && conjugated.scaled(ratio) == target,
           "conjugated Domb guess against domb_over_16n");
}

void criterion9(Checks& c) {
  testing::Gen gen(777);
  for (std::size_t t = 0; t < kRoundTrips; ++t) {
    const Polynomial p = gen.polynomial(8, 1000);
    const std::string pt = print(p);
    c.expect(parse_polynomial(pt) == p && print(parse_polynomial(pt)) == pt, "polynomial " + pt);

    const RationalFunction r(gen.polynomial(5, 50), gen.polynomial_of_degree(gen.index(4), 50));
    const std::string rt = print(r);
    c.expect(parse_rational_function(rt) == r && print(parse_rational_function(rt)) == rt, "rational function " + rt);

    const ShiftOperator op = gen.operator_(4, 4, 100);
    const std::string ot = print(op);
    c.expect(parse_operator(ot) == op && print(parse_operator(ot)) == ot, "operator " + ot);
  }
  c.expect(parse_operator("(n+1)^3 + (2*n+3)*(5*n^2+15*n+12)*S + 16*(n+2)^3*S^2") == op_of("domb_over_neg32n"),
           "series operator");
  c.expect(parse_operator("S - 1") == ShiftOperator({Polynomial(-1), Polynomial(1)}), "difference operator");
  c.expect(parse_operator("2*(1+n)^3 - (3+2*n)*(12+15*n+5*n^2)*S + 8*(2+n)^3*S^2") == op_of("domb_over_16n"),
           "domb_over_16n operator");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  void (*run)(Checks&);
};

const Criterion kCriteria[] = {
    {1, "classification regression", 1, criterion1},
    {2, "reduction regression", 1, criterion2},
    {3, "identity generation", 5, criterion3},
    {4, "telescoping exactness", 30, criterion4},
    {5, "numeric series verification", 60, criterion5},
    {6, "congruence verification", 30, criterion6},
    {7, "bound properties", 60, criterion7},
    {8, "guessing round-trip", 30, criterion8},
    {9, "parser/printer round-trip", 10, criterion9},
};

bool run(const Criterion& k) {
  Checks checks;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    k.run(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  checks.expect(seconds < k.limit_seconds, "runtime over the limit");
  const bool pass = checks.failures().empty();
  std::cout << "criterion " << k.id << ": " << (pass ? "PASS" : "FAIL") << " (" << k.title << ", " << seconds
            << " s, limit " << k.limit_seconds << " s)\n";
  std::size_t shown = 0;
  for (const auto& f : checks.failures()) {
    if (++shown > 10) {
      std::cout << "    ... " << checks.failures().size() - 10 << " more\n";
      break;
    }
    std::cout << "    failed: " << f << '\n';
  }
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion K]\n";
      return 2;
    }
  }
  bool all = true;
  bool any = false;
  for (const auto& k : kCriteria) {
    if (only != 0 && k.id != only) continue;
    any = true;
    all = run(k) && all;
  }
  if (!any) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return all ? 0 : 1;
}
