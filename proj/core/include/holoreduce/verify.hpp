#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "holoreduce/bigfloat.hpp"
#include "holoreduce/reduction.hpp"
#include "holoreduce/sequences.hpp"

namespace holoreduce {

/// r0 + r1/pi.
struct PiLinear {
  Rational rational_part;
  Rational pi_part;

  friend bool operator==(const PiLinear&, const PiLinear&) = default;
};

/// How a derived identity is obtained from its source: rational reduction of
/// the source numerator with (factor, side, order); the fixture numerator over
/// its denominator equals scale * remainder / shift product.
struct IdentityDerivation {
  std::string source;  // path of the source fixture, relative to this one
  Polynomial factor;
  Side side = Side::Upper;
  std::size_t order = 0;
  Rational scale{1};
};

/// sum_{n >= start} numer(n)/denom(n) * F(n) = target.
struct IdentityFixture {
  std::string sequence;
  Polynomial numer;
  Polynomial denom{1};
  std::int64_t start = 0;
  std::string target_text;
  PiLinear target;
  std::optional<IdentityDerivation> derivation;
};

/// sum_{n=start}^{p-1} numer(n)/denom(n) * F(n) == target (mod p^2) for every
/// prime p == filter_residue (mod filter_modulus).
struct CongruenceFixture {
  std::string sequence;
  Polynomial numer;
  Polynomial denom{1};
  std::int64_t start = 0;
  unsigned modulus_power = 2;
  long filter_residue = 1;
  long filter_modulus = 3;
  std::string target_text;
  Rational target;
};

using Fixture = std::variant<IdentityFixture, CongruenceFixture>;

// ---------------------------------------------------------------------------

struct TelescopingReport {
  bool holds = false;
  Rational sum;             // sum_{n=a}^{b-1} L*(x)(n) F(n)
  Rational boundary_start;  // B(a)
  Rational boundary_end;    // B(b)
};

/// Exact check of sum_{n=a}^{b-1} L*(x)(n) F(n) = B(a) - B(b). F must be
/// defined on [domain_start, b + J). Throws DomainViolation.
TelescopingReport check_telescoping(const TermFunction& f, std::int64_t domain_start,
                                    const ShiftOperator& op, const Polynomial& x,
                                    std::int64_t a, std::int64_t b);

TelescopingReport check_telescoping(std::string_view sequence_key, const ShiftOperator& op,
                                    const Polynomial& x, std::int64_t a, std::int64_t b);

/// G(n) = F(n) / sp_expand(spec)(n).
TermFunction divided_sequence(const HolonomicSequence& f, const ShiftProductSpec& spec);

/// Trivial reduction p = L*(0) + p over the empty shift product; pairs a
/// fixture with itself.
RationalReductionResult identity_reduction(const Polynomial& p, const ShiftOperator& op);

struct IdentityCheckReport {
  bool summand_matches = false;       // fixture summand == scale * remainder / SP
  bool reduction_consistent = false;  // remainder + L1*(x) == p * SP
  bool telescopes = false;            // pointwise and windowed, exactly
  Rational boundary_at_start;         // B(fixture start)
  PiLinear derived_target;            // scale * (source value - head - B(start))
  bool target_matches = false;

  bool ok() const { return summand_matches && reduction_consistent && telescopes; }
};

/// Exact check that source summand minus fixture summand / scale telescopes
/// with the certificate of `rr` on [fix.start, fix.start + window].
/// Throws MismatchedSequence, DomainViolation.
IdentityCheckReport verify_identity_exact(const IdentityFixture& fix, const IdentityFixture& source,
                                          const RationalReductionResult& rr, std::size_t window,
                                          const Rational& scale = Rational(1));

enum class Acceleration { None, Average1 };

struct NumericReport {
  BigFloat value;
  BigFloat target;
  BigFloat abs_error;
  long lost_bits = 0;
};

constexpr long kDefaultPrecisionBits = 96;
constexpr long kMinFractionalBits = 64;

/// Partial sum of the first N terms (optionally averaged with the N-1 sum) at
/// `bits` precision against r0 + r1/pi. Throws PrecisionLoss when
/// cancellation leaves fewer than 64 good bits, DomainViolation for N < 100.
NumericReport numeric_series_check(const IdentityFixture& fix, std::size_t terms, Acceleration accel,
                                   long bits = kDefaultPrecisionBits);

/// Exact float-free partial sum over [start, start + terms).
Rational exact_partial_sum(const IdentityFixture& fix, std::size_t terms);

struct CongruenceReport {
  long prime = 0;
  Integer modulus;   // p^power
  Integer residue;   // the sum mod modulus
  Integer expected;  // the target mod modulus
  bool holds = false;
};

/// x mod m for a rational x with denominator prime to m. Throws NonInvertibleDenominator.
Integer rational_mod(const Rational& x, const Integer& m);

bool is_prime(long p);

/// One report per prime, sorted by prime; primes are checked concurrently.
/// Throws PrimeFilterViolation, NonInvertibleDenominator.
std::vector<CongruenceReport> verify_congruence(const CongruenceFixture& fix,
                                                const std::vector<long>& primes);

// ---------------------------------------------------------------------------
// Fixture files: "key = value" lines, '#' comments.

/// Throws InvalidFixture / ParseError.
Fixture parse_fixture(std::string_view text);
Fixture load_fixture(const std::string& path);
std::string format_fixture(const Fixture& fixture);

/// "r0 + r1/pi" with rational r0, r1; either part may be omitted.
PiLinear parse_pi_linear(std::string_view text);
std::string format_pi_linear(const PiLinear& value);

}  // namespace holoreduce
