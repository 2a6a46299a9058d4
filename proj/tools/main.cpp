#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "holoreduce/error.hpp"

namespace {

using holoreduce::ErrorCode;
using namespace holoreduce::cli;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NegativeShiftPower:
    case ErrorCode::InvalidFixture:
    case ErrorCode::InsufficientTerms:
    case ErrorCode::UnknownSequence:
    case ErrorCode::PrimeFilterViolation:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "structured"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reductions and identity checks for holonomic sequences", "holoreduce"};
  app.require_subcommand(1);

  std::string format = "text";

  ClassifyArgs classify;
  auto* c_classify = app.add_subcommand("classify", "Degree profile and summable-degree bounds of an operator");
  c_classify->add_option("--operator", classify.op, "Shift operator, e.g. \"(n+1)*S - n\"")->required();
  add_format(c_classify, format);

  ReduceArgs reduce;
  auto* c_reduce = app.add_subcommand("reduce", "Polynomial reduction modulo the image of the adjoint");
  c_reduce->add_option("--operator", reduce.op, "Shift operator")->required();
  c_reduce->add_option("--poly", reduce.poly, "Polynomial to reduce")->required();
  add_format(c_reduce, format);

  RationalReduceArgs rational;
  auto* c_rational = app.add_subcommand("rational-reduce", "Rational reduction over a shift-product denominator");
  c_rational->add_option("--operator", rational.op, "Shift operator")->required();
  c_rational->add_option("--poly", rational.poly, "Polynomial multiplier of F")->required();
  c_rational->add_option("--factor", rational.factor, "Divisor of a_0 (lower) or a_J (upper)")->required();
  c_rational->add_option("--side", rational.side, "lower or upper")
      ->check(CLI::IsMember({"lower", "upper"}))
      ->capture_default_str();
  c_rational->add_option("--order", rational.order, "Shift-product length I (default: the operator order)");
  c_rational->add_flag("--auto-grow", rational.auto_grow, "Retry with I+1 .. I+8 when irreducible");
  add_format(c_rational, format);

  GuessArgs guess;
  auto* c_guess = app.add_subcommand("guess", "Guess an annihilating operator from terms");
  c_guess->add_option("--terms", guess.terms_file, "File with one exact rational per line")->required();
  c_guess->add_option("--start", guess.start, "Index of the first term")->capture_default_str();
  c_guess->add_option("--max-order", guess.max_order, "Largest order tried")->capture_default_str();
  c_guess->add_option("--max-deg", guess.max_deg, "Largest coefficient degree tried")->capture_default_str();
  add_format(c_guess, format);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Check a fixture exactly, numerically or modulo p^2");
  c_verify->add_option("--fixture", verify.fixture, "Fixture file")->required()->check(CLI::ExistingFile);
  c_verify->add_option("--mode", verify.mode, "exact, numeric or congruence")
      ->check(CLI::IsMember({"exact", "numeric", "congruence"}))
      ->capture_default_str();
  c_verify->add_option("--N", verify.terms, "Number of terms (numeric)")->capture_default_str();
  c_verify->add_option("--accel", verify.accel, "none or average1 (numeric)")
      ->check(CLI::IsMember({"none", "average1"}))
      ->capture_default_str();
  c_verify->add_option("--tolerance", verify.tolerance, "Absolute tolerance (numeric)")->capture_default_str();
  c_verify->add_option("--primes", verify.primes, "Comma-separated primes (congruence)")->capture_default_str();
  c_verify->add_option("--window", verify.window, "Telescoping window length (exact)")->capture_default_str();
  c_verify->add_option("--source", verify.source, "Override the source fixture (exact)");
  add_format(c_verify, format);

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "Evaluate a catalog sequence");
  c_eval->add_option("--sequence", eval.sequence, "Catalog key");
  c_eval->add_option("--n", eval.n, "First index")->capture_default_str();
  c_eval->add_option("--count", eval.count, "Number of values")->capture_default_str();
  c_eval->add_flag("--list", eval.list, "List catalog keys");
  add_format(c_eval, format);

  SumArgs sum;
  auto* c_sum = app.add_subcommand("sum", "Exact partial sum of numer(n)/denom(n) F(n)");
  c_sum->add_option("--fixture", sum.fixture, "Take the summand from a fixture")->check(CLI::ExistingFile);
  c_sum->add_option("--sequence", sum.sequence, "Catalog key");
  c_sum->add_option("--numer", sum.numer, "Numerator polynomial");
  c_sum->add_option("--denom", sum.denom, "Denominator polynomial")->capture_default_str();
  c_sum->add_option("--start", sum.start, "First index")->capture_default_str();
  c_sum->add_option("--terms", sum.terms, "Number of terms")->capture_default_str();
  add_format(c_sum, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto fmt = *holoreduce::parse_format(format);
  try {
    if (*c_classify) return run_classify(classify, fmt, std::cout);
    if (*c_reduce) return run_reduce(reduce, fmt, std::cout);
    if (*c_rational) return run_rational_reduce(rational, fmt, std::cout);
    if (*c_guess) return run_guess(guess, fmt, std::cout);
    if (*c_verify) return run_verify(verify, fmt, std::cout);
    if (*c_eval) {
      if (!eval.list && eval.sequence.empty()) throw UsageError("eval needs --sequence or --list");
      return run_eval(eval, fmt, std::cout);
    }
    if (*c_sum) return run_sum(sum, fmt, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const holoreduce::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
