#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holoreduce/degree_profile.hpp"
#include "holoreduce/error.hpp"
#include "holoreduce/reduction.hpp"
#include "holoreduce/verify.hpp"
#include "report.hpp"

namespace holoreduce::cli {
namespace {

std::string degree_text(const Degree& d) {
  return d.is_neg_inf() ? "-inf" : std::to_string(d.value());
}

nlohmann::json degree_json(const Degree& d) {
  return d.is_neg_inf() ? nlohmann::json(nullptr) : nlohmann::json(d.value());
}

void add_degree(Report& r, const std::string& key, const Degree& d) {
  r.add_raw(key, degree_text(d), degree_text(d), degree_json(d));
}

void add_certificate(Report& r, const std::vector<Polynomial>& cert) {
  for (std::size_t i = 0; i < cert.size(); ++i) r.add("u_" + std::to_string(i), cert[i]);
}

Side parse_side(const std::string& text) {
  if (text == "upper") return Side::Upper;
  if (text == "lower") return Side::Lower;
  throw UsageError("--side must be 'lower' or 'upper'");
}

std::vector<long> parse_primes(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long p = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(p);
    } catch (const std::logic_error&) {
      throw UsageError("--primes expects a comma-separated list of integers, got '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--primes is empty");
  return out;
}

template <class T>
const T& expect_kind(const Fixture& f, const std::string& what) {
  if (const auto* p = std::get_if<T>(&f)) return *p;
  throw UsageError(what);
}

}  // namespace

long precision_bits_from_env() {
  const char* env = std::getenv("HOLOREDUCE_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  try {
    std::size_t used = 0;
    const long bits = std::stol(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
    if (bits < kDefaultPrecisionBits) {
      throw UsageError("HOLOREDUCE_PRECISION_BITS must be at least " + std::to_string(kDefaultPrecisionBits));
    }
    return bits;
  } catch (const std::logic_error&) {
    throw UsageError(std::string("HOLOREDUCE_PRECISION_BITS is not an integer: ") + env);
  }
}

int run_classify(const ClassifyArgs& args, Format format, std::ostream& out) {
  const ShiftOperator op = parse_operator(args.op);
  const DegreeProfile prof = degree_profile(op);

  Report r("classify");
  std::string head = "degL=" + degree_text(prof.degree) + " CL=" + std::to_string(prof.continued_zero_index);
  std::optional<SummableDegreeBounds> bounds;
  if (op.order() >= 1) {
    bounds = summable_degree_bounds(op);
    head += " upper=" + degree_text(bounds->upper);
    head += " lower=" + (bounds->lower ? degree_text(*bounds->lower) : std::string("none"));
  }
  r.headline(head);

  r.add("operator", op);
  add_degree(r, "degL", prof.degree);
  add_degree(r, "dL", prof.max_coefficient_degree);
  r.add("indicial", prof.indicial);
  std::string roots_text = "{";
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& s : prof.exceptional) {
    roots_text += (roots.empty() ? "" : ", ") + s.get_str();
    roots.push_back(s.get_str());
  }
  roots_text += "}";
  r.add_raw("R_L", roots_text, "$\\{" + roots_text.substr(1, roots_text.size() - 2) + "\\}$", roots);
  r.add_integer("CL", static_cast<long long>(prof.continued_zero_index));
  r.add_flag("degenerated", prof.degenerated);
  r.add_flag("strongly_nondegenerated", prof.strongly_nondegenerated);
  if (bounds) {
    add_degree(r, "upper", bounds->upper);
    r.add_flag("lower_valid", bounds->lower_valid);
    if (bounds->lower) {
      add_degree(r, "lower", *bounds->lower);
    } else {
      r.add_raw("lower", "none", "none", nullptr);
    }
    r.add("witness", bounds->witness);
  }
  r.write(out, format);
  return kExitOk;
}

int run_reduce(const ReduceArgs& args, Format format, std::ostream& out) {
  const ShiftOperator op = parse_operator(args.op);
  const Polynomial p = parse_polynomial(args.poly);
  const ReductionResult rr = polynomial_reduce(p, op);

  Report r("reduce");
  r.add("operator", op);
  r.add("polynomial", p);
  r.add("remainder", rr.remainder);
  r.add("multiplier", rr.multiplier);
  add_certificate(r, rr.certificate);
  r.write(out, format);
  return kExitOk;
}

int run_rational_reduce(const RationalReduceArgs& args, Format format, std::ostream& out) {
  const ShiftOperator op = parse_operator(args.op);
  const Polynomial p = parse_polynomial(args.poly);
  const Polynomial factor = parse_polynomial(args.factor);
  const Side side = parse_side(args.side);
  const std::size_t order = args.order == 0 ? op.order() : args.order;

  RationalReduceOptions options;
  options.auto_grow = args.auto_grow;
  const RationalReductionResult rr = rational_reduce(p, op, factor, side, order, options);
  const Polynomial sp = sp_expand(rr.denominator);

  Report r("rational-reduce");
  r.add("operator", op);
  r.add("polynomial", p);
  r.add("factor", factor);
  r.add("side", side == Side::Upper ? "upper" : "lower");
  r.add_integer("order", static_cast<long long>(rr.order));
  r.add_integer("growth", static_cast<long long>(rr.growth));
  r.add("derived_operator", rr.derived_operator);
  r.add("shift_product", sp);
  r.add("remainder", rr.remainder_numer);
  r.add("rational_remainder", RationalFunction(rr.remainder_numer, sp));
  r.add("multiplier", rr.reduction.multiplier);
  add_certificate(r, rr.reduction.certificate);
  if (rr.degree_bound) {
    add_degree(r, "degree_bound", *rr.degree_bound);
  } else {
    r.add_raw("degree_bound", "none", "none", nullptr);
  }
  r.write(out, format);
  return kExitOk;
}

int run_guess(const GuessArgs& args, Format format, std::ostream& out) {
  std::ifstream in(args.terms_file);
  if (!in) throw UsageError("cannot open terms file '" + args.terms_file + "'");
  const std::vector<Rational> terms = read_terms(in);
  const auto found = guess_annihilator(terms, args.start, args.max_order, args.max_deg);

  Report r("guess");
  r.headline(found ? print(*found) : "none");
  r.add_integer("terms", static_cast<long long>(terms.size()));
  if (found) {
    r.add("operator", *found);
  } else {
    r.add_raw("operator", "none", "none", nullptr);
  }
  r.write(out, format);
  return found ? kExitOk : kExitCheckFailed;
}

int run_verify(const VerifyArgs& args, Format format, std::ostream& out) {
  const Fixture fixture = load_fixture(args.fixture);
  Report r("verify");
  r.add("fixture", args.fixture);
  r.add("mode", args.mode);

  if (args.mode == "exact") {
    const auto& fix = expect_kind<IdentityFixture>(fixture, "exact mode needs an identity fixture");
    const auto& seq = catalog_sequence(fix.sequence);
    IdentityCheckReport rep;
    if (fix.derivation) {
      const auto& d = *fix.derivation;
      std::filesystem::path source_path =
          args.source ? std::filesystem::path(*args.source)
                      : std::filesystem::path(args.fixture).parent_path() / d.source;
      const Fixture loaded = load_fixture(source_path.string());
      const auto& source = expect_kind<IdentityFixture>(loaded, "source must be an identity fixture");
      if (!source.denom.is_constant()) throw UsageError("source summand must be polynomial");
      const Polynomial p = source.numer / source.denom.leading_coefficient();
      const auto rr = rational_reduce(p, seq.op(), d.factor, d.side, d.order);
      rep = verify_identity_exact(fix, source, rr, args.window, d.scale);
      r.add("source", source_path.string());
    } else {
      if (!fix.denom.is_constant()) throw UsageError("a fixture without a source must be polynomial");
      const auto rr = identity_reduction(fix.numer / fix.denom.leading_coefficient(), seq.op());
      rep = verify_identity_exact(fix, fix, rr, args.window);
    }
    const bool pass = rep.ok() && rep.target_matches;
    r.headline(std::string("exact: ") + (pass ? "PASS" : "FAIL"));
    r.add_integer("window", static_cast<long long>(args.window));
    r.add_flag("summand_matches", rep.summand_matches);
    r.add_flag("reduction_consistent", rep.reduction_consistent);
    r.add_flag("telescopes", rep.telescopes);
    r.add("boundary_at_start", rep.boundary_at_start);
    r.add("derived_target", format_pi_linear(rep.derived_target));
    r.add("target", format_pi_linear(fix.target));
    r.add_flag("target_matches", rep.target_matches);
    r.write(out, format);
    return pass ? kExitOk : kExitCheckFailed;
  }

  if (args.mode == "numeric") {
    const auto& fix = expect_kind<IdentityFixture>(fixture, "numeric mode needs an identity fixture");
    Acceleration accel;
    if (args.accel == "none") {
      accel = Acceleration::None;
    } else if (args.accel == "average1") {
      accel = Acceleration::Average1;
    } else {
      throw UsageError("--accel must be 'none' or 'average1'");
    }
    if (!(args.tolerance > 0)) throw UsageError("--tolerance must be positive");
    const long bits = precision_bits_from_env();
    const NumericReport rep = numeric_series_check(fix, args.terms, accel, bits);
    const bool pass = rep.abs_error <= BigFloat(Rational(args.tolerance), bits);
    r.headline(std::string("numeric: ") + (pass ? "PASS" : "FAIL"));
    r.add_integer("terms", static_cast<long long>(args.terms));
    r.add("accel", args.accel);
    r.add_integer("precision_bits", bits);
    r.add("value", rep.value.to_string(30));
    r.add("target", rep.target.to_string(30));
    r.add("abs_error", rep.abs_error.to_string(6));
    r.add("tolerance", BigFloat(Rational(args.tolerance), 64).to_string(6));
    r.add_integer("lost_bits", rep.lost_bits);
    r.add_flag("within_tolerance", pass);
    r.write(out, format);
    return pass ? kExitOk : kExitCheckFailed;
  }

  if (args.mode == "congruence") {
    const auto& fix = expect_kind<CongruenceFixture>(fixture, "congruence mode needs a congruence fixture");
    const auto reports = verify_congruence(fix, parse_primes(args.primes));
    std::size_t passed = 0;
    std::string text;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& rep : reports) {
      passed += rep.holds;
      text += "\n  p=" + std::to_string(rep.prime) + " residue=" + rep.residue.get_str() +
              " expected=" + rep.expected.get_str() + " " + (rep.holds ? "ok" : "MISMATCH");
      rows.push_back({{"prime", rep.prime},
                      {"modulus", rep.modulus.get_str()},
                      {"residue", rep.residue.get_str()},
                      {"expected", rep.expected.get_str()},
                      {"holds", rep.holds}});
    }
    const bool pass = passed == reports.size();
    r.headline(std::string("congruence: ") + (pass ? "PASS" : "FAIL") + " (" + std::to_string(passed) + "/" +
               std::to_string(reports.size()) + " primes)");
    r.add("target", fix.target_text);
    r.add_raw("results", text, text, rows);
    r.write(out, format);
    return pass ? kExitOk : kExitCheckFailed;
  }

  throw UsageError("--mode must be exact, numeric or congruence");
}

int run_eval(const EvalArgs& args, Format format, std::ostream& out) {
  Report r("eval");
  if (args.list) {
    for (const auto& e : catalog()) {
      r.add_raw(e.key, e.description + " (start " + std::to_string(e.sequence.start()) + ")", e.description,
                {{"description", e.description}, {"start", e.sequence.start()}, {"operator", to_json(e.sequence.op())}});
    }
    r.write(out, format);
    return kExitOk;
  }
  const auto& seq = catalog_sequence(args.sequence);
  r.add("sequence", seq.name());
  r.add("operator", seq.op());
  for (std::size_t k = 0; k < args.count; ++k) {
    const std::int64_t n = args.n + static_cast<std::int64_t>(k);
    r.add("F(" + std::to_string(n) + ")", seq.eval(n));
  }
  r.write(out, format);
  return kExitOk;
}

int run_sum(const SumArgs& args, Format format, std::ostream& out) {
  IdentityFixture fix;
  if (!args.fixture.empty()) {
    std::visit(
        [&fix](const auto& f) {
          fix.sequence = f.sequence;
          fix.numer = f.numer;
          fix.denom = f.denom;
          fix.start = f.start;
        },
        load_fixture(args.fixture));
  } else {
    if (args.sequence.empty() || args.numer.empty()) {
      throw UsageError("sum needs --fixture, or --sequence with --numer");
    }
    fix.sequence = args.sequence;
    fix.numer = parse_polynomial(args.numer);
    fix.denom = parse_polynomial(args.denom);
    fix.start = args.start;
  }
  const Rational value = exact_partial_sum(fix, args.terms);
  const long bits = precision_bits_from_env();

  Report r("sum");
  r.add("sequence", fix.sequence);
  r.add("summand", RationalFunction(fix.numer, fix.denom));
  r.add_integer("start", fix.start);
  r.add_integer("terms", static_cast<long long>(args.terms));
  r.add("value", value);
  r.add("decimal", BigFloat(value, bits).to_string(30));
  r.write(out, format);
  return kExitOk;
}

}  // namespace holoreduce::cli
