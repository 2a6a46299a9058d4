#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "holoreduce/exprio.hpp"

namespace holoreduce::cli {

/// Bad invocation detected after option parsing (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ClassifyArgs {
  std::string op;
};

struct ReduceArgs {
  std::string op;
  std::string poly;
};

struct RationalReduceArgs {
  std::string op;
  std::string poly;
  std::string factor;
  std::string side = "upper";
  std::size_t order = 0;
  bool auto_grow = false;
};

struct GuessArgs {
  std::string terms_file;
  std::int64_t start = 0;
  std::size_t max_order = 2;
  std::size_t max_deg = 3;
};

struct VerifyArgs {
  std::string fixture;
  std::string mode = "exact";
  std::size_t terms = 100000;
  std::string accel = "average1";
  double tolerance = 1e-4;
  std::string primes = "7,13,19,31,37,43";
  std::size_t window = 200;
  std::optional<std::string> source;
};

struct EvalArgs {
  std::string sequence;
  std::int64_t n = 0;
  std::size_t count = 1;
  bool list = false;
};

struct SumArgs {
  std::string fixture;
  std::string sequence;
  std::string numer;
  std::string denom = "1";
  std::int64_t start = 0;
  std::size_t terms = 10;
};

// Each returns the process exit code and writes its report to `out`.
// Library errors propagate to the caller.
int run_classify(const ClassifyArgs& args, Format format, std::ostream& out);
int run_reduce(const ReduceArgs& args, Format format, std::ostream& out);
int run_rational_reduce(const RationalReduceArgs& args, Format format, std::ostream& out);
int run_guess(const GuessArgs& args, Format format, std::ostream& out);
int run_verify(const VerifyArgs& args, Format format, std::ostream& out);
int run_eval(const EvalArgs& args, Format format, std::ostream& out);
int run_sum(const SumArgs& args, Format format, std::ostream& out);

/// HOLOREDUCE_PRECISION_BITS, defaulting to 96. Throws UsageError.
long precision_bits_from_env();

}  // namespace holoreduce::cli
