#include "holoreduce/verify.hpp"

#include <algorithm>
#include <deque>
#include <future>

#include "holoreduce/error.hpp"

namespace holoreduce {
namespace {

Rational certificate_boundary(std::span<const Polynomial> certificate, const TermFunction& f,
                              std::int64_t n) {
  if (certificate.empty()) return Rational(0);
  return boundary_term(certificate, f, n);
}

/// Polynomial with coefficients pre-rounded to `bits`, evaluated by Horner.
class FloatPolynomial {
 public:
  FloatPolynomial(const Polynomial& p, long bits) : acc_(bits) {
    for (const auto& c : p.coefficients()) coeffs_.emplace_back(c, bits);
  }

  bool is_zero() const { return coeffs_.empty(); }

  const BigFloat& operator()(std::int64_t n) {
    mpfr_set_zero(acc_.raw(), 1);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      mpfr_mul_si(acc_.raw(), acc_.raw(), static_cast<long>(n), MPFR_RNDN);
      mpfr_add(acc_.raw(), acc_.raw(), it->get(), MPFR_RNDN);
    }
    return acc_;
  }

 private:
  std::vector<BigFloat> coeffs_;
  BigFloat acc_;
};

Rational term_value(const IdentityFixture& fix, const HolonomicSequence& seq, std::int64_t n) {
  const Rational d = fix.denom(n);
  if (d == 0) {
    throw Error(ErrorCode::DomainViolation, "denominator vanishes at n = " + std::to_string(n));
  }
  return fix.numer(n) / d * seq.eval(n);
}

}  // namespace

TelescopingReport check_telescoping(const TermFunction& f, std::int64_t domain_start,
                                    const ShiftOperator& op, const Polynomial& x,
                                    std::int64_t a, std::int64_t b) {
  if (b < a) throw Error(ErrorCode::DomainViolation, "window end precedes its start");
  if (a < domain_start) {
    throw Error(ErrorCode::DomainViolation,
                "window starts at " + std::to_string(a) + " below the domain start " +
                    std::to_string(domain_start));
  }
  const auto cert = certificate_polys(op, x);
  const Polynomial lhs = adjoint_apply(op, x);

  TelescopingReport out;
  for (std::int64_t n = a; n < b; ++n) out.sum += lhs(n) * f(n);
  out.boundary_start = certificate_boundary(cert, f, a);
  out.boundary_end = certificate_boundary(cert, f, b);
  out.holds = out.sum == out.boundary_start - out.boundary_end;
  return out;
}

TelescopingReport check_telescoping(std::string_view sequence_key, const ShiftOperator& op,
                                    const Polynomial& x, std::int64_t a, std::int64_t b) {
  const auto& seq = catalog_sequence(sequence_key);
  return check_telescoping(seq.as_function(), seq.start(), op, x, a, b);
}

TermFunction divided_sequence(const HolonomicSequence& f, const ShiftProductSpec& spec) {
  return [f, sp = sp_expand(spec)](std::int64_t n) -> Rational {
    const Rational d = sp(n);
    if (d == 0) {
      throw Error(ErrorCode::DivisionByZero, "shift product vanishes at n = " + std::to_string(n));
    }
    return f.eval(n) / d;
  };
}

RationalReductionResult identity_reduction(const Polynomial& p, const ShiftOperator& op) {
  RationalReductionResult out;
  out.remainder_numer = p;
  out.denominator = ShiftProductSpec{Polynomial(1), Side::Upper, 0, 0};
  out.derived_operator = op;
  out.reduction = ReductionResult{p, Polynomial(), std::vector<Polynomial>(op.order()), op};
  return out;
}

IdentityCheckReport verify_identity_exact(const IdentityFixture& fix, const IdentityFixture& source,
                                          const RationalReductionResult& rr, std::size_t window,
                                          const Rational& scale) {
  if (fix.sequence != source.sequence) {
    throw Error(ErrorCode::MismatchedSequence,
                "fixture over '" + fix.sequence + "' but source over '" + source.sequence + "'");
  }
  if (!source.denom.is_constant() || source.denom.is_zero()) {
    throw Error(ErrorCode::DomainViolation, "source summand must have a constant denominator");
  }
  if (scale == 0) throw Error(ErrorCode::DomainViolation, "scale must be nonzero");
  if (fix.start < source.start) {
    throw Error(ErrorCode::DomainViolation, "fixture starts before its source");
  }

  const auto& seq = catalog_sequence(fix.sequence);
  const Polynomial p = source.numer / source.denom.leading_coefficient();
  const Polynomial sp = sp_expand(rr.denominator);

  IdentityCheckReport out;
  out.reduction_consistent =
      rr.remainder_numer == rr.reduction.remainder &&
      rr.reduction.remainder + adjoint_apply(rr.derived_operator, rr.reduction.multiplier) == p * sp;
  out.summand_matches = fix.numer * sp == scale * rr.remainder_numer * fix.denom;

  const TermFunction g = divided_sequence(seq, rr.denominator);
  const auto& cert = rr.reduction.certificate;
  auto boundary = [&](std::int64_t n) -> Rational { return certificate_boundary(cert, g, n); };

  const std::int64_t a = fix.start;
  const std::int64_t b = a + static_cast<std::int64_t>(window);
  bool pointwise = true;
  Rational total;
  Rational b_here = boundary(a);
  out.boundary_at_start = b_here;
  for (std::int64_t n = a; n < b; ++n) {
    const Rational diff = p(n) * seq.eval(n) - term_value(fix, seq, n) / scale;
    const Rational b_next = boundary(n + 1);
    if (diff != b_here - b_next) pointwise = false;
    total += diff;
    b_here = b_next;
  }
  out.telescopes = pointwise && total == out.boundary_at_start - b_here;

  Rational head;
  for (std::int64_t n = source.start; n < fix.start; ++n) head += p(n) * seq.eval(n);
  out.derived_target.rational_part =
      scale * (source.target.rational_part - head - out.boundary_at_start);
  out.derived_target.pi_part = scale * source.target.pi_part;
  out.target_matches = out.derived_target == fix.target;
  return out;
}

Rational exact_partial_sum(const IdentityFixture& fix, std::size_t terms) {
  const auto& seq = catalog_sequence(fix.sequence);
  Rational sum;
  for (std::size_t k = 0; k < terms; ++k) sum += term_value(fix, seq, fix.start + static_cast<std::int64_t>(k));
  return sum;
}

NumericReport numeric_series_check(const IdentityFixture& fix, std::size_t terms, Acceleration accel,
                                   long bits) {
  if (terms < 100) throw Error(ErrorCode::DomainViolation, "numeric check needs at least 100 terms");
  if (bits < kMinFractionalBits) {
    throw Error(ErrorCode::DomainViolation,
                "precision below " + std::to_string(kMinFractionalBits) + " bits");
  }
  const auto& seq = catalog_sequence(fix.sequence);
  if (fix.start < seq.start()) {
    throw Error(ErrorCode::DomainViolation, "fixture starts below the sequence domain");
  }
  const ShiftOperator& op = seq.op();
  const std::size_t order = op.order();
  if (order == 0) throw Error(ErrorCode::OrderZero, "sequence operator has order zero");

  std::vector<FloatPolynomial> coeffs;
  for (const auto& a : op.coefficients()) coeffs.emplace_back(a, bits);
  FloatPolynomial numer(fix.numer, bits);
  FloatPolynomial denom(fix.denom, bits);

  std::deque<BigFloat> window;
  for (std::size_t i = 0; i < order; ++i) {
    window.emplace_back(seq.eval(seq.start() + static_cast<std::int64_t>(i)), bits);
  }

  const std::int64_t last = fix.start + static_cast<std::int64_t>(terms) - 1;
  BigFloat partial(bits);
  BigFloat previous(bits);
  BigFloat peak(bits);
  BigFloat term(bits);
  BigFloat next(bits);
  for (std::int64_t k = seq.start();; ++k) {
    if (k >= fix.start) {
      if (fix.denom(k) == 0) {
        throw Error(ErrorCode::DomainViolation, "denominator vanishes at n = " + std::to_string(k));
      }
      mpfr_div(term.raw(), numer(k).get(), denom(k).get(), MPFR_RNDN);
      term *= window.front();
      if (k == last) previous = partial;
      partial += term;
      if (peak < partial.abs()) peak = partial.abs();
    }
    if (k == last) break;

    const std::int64_t ahead = k + static_cast<std::int64_t>(order);
    if (op.leading()(k) == 0) {
      next = BigFloat(seq.eval(ahead), bits);
    } else {
      mpfr_set_zero(next.raw(), 1);
      for (std::size_t i = 0; i < order; ++i) {
        if (coeffs[i].is_zero()) continue;
        mpfr_fma(next.raw(), coeffs[i](k).get(), window[i].get(), next.get(), MPFR_RNDN);
      }
      mpfr_div(next.raw(), next.get(), coeffs[order](k).get(), MPFR_RNDN);
      mpfr_neg(next.raw(), next.get(), MPFR_RNDN);
    }
    window.pop_front();
    window.push_back(next);
  }

  NumericReport out{partial, BigFloat(fix.target.rational_part, bits), BigFloat(bits), 0};
  if (accel == Acceleration::Average1) {
    out.value += previous;
    mpfr_div_ui(out.value.raw(), out.value.get(), 2, MPFR_RNDN);
  }
  if (fix.target.pi_part != 0) {
    out.target += BigFloat(fix.target.pi_part, bits) / BigFloat::pi(bits);
  }
  out.abs_error = (out.value - out.target).abs();

  if (!peak.is_zero()) {
    out.lost_bits = out.value.is_zero() ? bits : std::max(0L, peak.exponent2() - out.value.exponent2());
  }
  if (bits - out.lost_bits < kMinFractionalBits) {
    throw Error(ErrorCode::PrecisionLoss,
                "cancellation lost " + std::to_string(out.lost_bits) + " of " + std::to_string(bits) +
                    " bits");
  }
  return out;
}

Integer rational_mod(const Rational& x, const Integer& m) {
  Integer inverse;
  if (mpz_invert(inverse.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::NonInvertibleDenominator,
                "denominator " + x.get_den().get_str() + " is not invertible mod " + m.get_str());
  }
  Integer out = x.get_num() * inverse;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
  return out;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<CongruenceReport> verify_congruence(const CongruenceFixture& fix,
                                                const std::vector<long>& primes) {
  if (fix.filter_modulus <= 0) throw Error(ErrorCode::InvalidFixture, "prime filter modulus must be positive");
  std::vector<long> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (long p : sorted) {
    const long residue = ((p % fix.filter_modulus) + fix.filter_modulus) % fix.filter_modulus;
    if (!is_prime(p) || residue != fix.filter_residue) {
      throw Error(ErrorCode::PrimeFilterViolation,
                  std::to_string(p) + " is not a prime congruent to " +
                      std::to_string(fix.filter_residue) + " mod " + std::to_string(fix.filter_modulus));
    }
  }

  const auto& seq = catalog_sequence(fix.sequence);
  auto check = [&fix, &seq](long p) {
    CongruenceReport out;
    out.prime = p;
    out.modulus = pow_integer(Integer(p), fix.modulus_power);
    out.residue = 0;
    for (std::int64_t n = fix.start; n <= p - 1; ++n) {
      const Rational d = fix.denom(n);
      if (d == 0) {
        throw Error(ErrorCode::NonInvertibleDenominator, "denominator vanishes at n = " + std::to_string(n));
      }
      const Rational f = seq.has_closed_form() ? seq.closed_form(n) : seq.eval(n);
      out.residue += rational_mod(fix.numer(n) * f, out.modulus) * rational_mod(1 / d, out.modulus);
      out.residue %= out.modulus;
    }
    out.expected = rational_mod(fix.target, out.modulus);
    out.holds = out.residue == out.expected;
    return out;
  };

  std::vector<std::future<CongruenceReport>> tasks;
  tasks.reserve(sorted.size());
  for (long p : sorted) tasks.push_back(std::async(std::launch::async, check, p));
  std::vector<CongruenceReport> out;
  out.reserve(tasks.size());
  for (auto& t : tasks) out.push_back(t.get());
  return out;
}

}  // namespace holoreduce
