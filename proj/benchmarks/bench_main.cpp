#include <benchmark/benchmark.h>

#include "holoreduce/exprio.hpp"
#include "holoreduce/verify.hpp"

using namespace holoreduce;

namespace {

const Polynomial n = Polynomial::variable();

void BM_PolynomialShift(benchmark::State& state) {
  const Polynomial p = pow(3 * n - 7, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(p.shift(5));
}
BENCHMARK(BM_PolynomialShift)->Arg(8)->Arg(32)->Arg(128);

void BM_Resultant(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const Polynomial a = pow(n + 1, d) + n;
  const Polynomial b = pow(2 * n - 3, d) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(resultant(a, b));
}
BENCHMARK(BM_Resultant)->Arg(4)->Arg(8)->Arg(16);

void BM_DegreeProfile(benchmark::State& state) {
  const auto& op = catalog_sequence("domb_over_16n").op();
  for (auto _ : state) benchmark::DoNotOptimize(degree_profile(op));
}
BENCHMARK(BM_DegreeProfile);

void BM_PolynomialReduce(benchmark::State& state) {
  const ShiftOperator l1 = build_L1_upper(catalog_sequence("domb_over_neg32n").op(), pow(n + 2, 2), 2);
  const Polynomial p = (3 * n + 1) * pow(n + 1, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_reduce(p, l1));
}
BENCHMARK(BM_PolynomialReduce)->Arg(4)->Arg(16)->Arg(64);

void BM_RationalReduce(benchmark::State& state) {
  const auto& op = catalog_sequence("domb_over_neg32n").op();
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rational_reduce(3 * n + 1, op, pow(n + 2, 2), Side::Upper, order));
  }
}
BENCHMARK(BM_RationalReduce)->DenseRange(2, 6);

void BM_SequenceEval(benchmark::State& state) {
  const auto& base = catalog_sequence("domb_over_neg32n");
  const auto last = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    // fresh cache each iteration
    const HolonomicSequence seq("domb", base.op(), 0, {base.eval(0), base.eval(1)});
    benchmark::DoNotOptimize(seq.eval(last));
  }
}
BENCHMARK(BM_SequenceEval)->Arg(100)->Arg(1000);

void BM_NumericSeries(benchmark::State& state) {
  IdentityFixture fix;
  fix.sequence = "domb_over_neg32n";
  fix.numer = 3 * n + 1;
  fix.target = PiLinear{Rational(0), Rational(2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        numeric_series_check(fix, static_cast<std::size_t>(state.range(0)), Acceleration::Average1));
  }
}
BENCHMARK(BM_NumericSeries)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Congruence(benchmark::State& state) {
  CongruenceFixture fix;
  fix.sequence = "domb_over_16n";
  fix.numer = pow(n + 1, 2);
  fix.denom = n * (n - 1);
  fix.start = 2;
  fix.target = make_rational(3, 2);
  const std::vector<long> primes{7, 13, 19, 31, 37, 43, 61, 67, 73, 79};
  for (auto _ : state) benchmark::DoNotOptimize(verify_congruence(fix, primes));
}
BENCHMARK(BM_Congruence)->Unit(benchmark::kMillisecond);

void BM_ParseOperator(benchmark::State& state) {
  const std::string text = "(n+1)^3 + (2*n+3)*(5*n^2+15*n+12)*S + 16*(n+2)^3*S^2";
  for (auto _ : state) benchmark::DoNotOptimize(parse_operator(text));
}
BENCHMARK(BM_ParseOperator);

void BM_GuessDomb(benchmark::State& state) {
  std::vector<Rational> terms;
  for (std::int64_t k = 0; k < 40; ++k) terms.emplace_back(domb_number(k));
  for (auto _ : state) benchmark::DoNotOptimize(guess_annihilator(terms, 0, 2, 3));
}
BENCHMARK(BM_GuessDomb)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
