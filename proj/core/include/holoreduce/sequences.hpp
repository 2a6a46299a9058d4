#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holoreduce/shift_operator.hpp"

namespace holoreduce {

/// A sequence given by an annihilating operator, a start index n0 and the
/// initial values F(n0) .. F(n0+J-1). Values are produced by the forward
/// recurrence F(n+J) = -(sum_{i<J} a_i(n) F(n+i)) / a_J(n) and cached.
///
/// Where a_J(n) vanishes the value comes from an explicit override or, failing
/// that, from the closed-form oracle. Copies share one cache; eval is
/// linearizable across threads.
class HolonomicSequence {
 public:
  HolonomicSequence(std::string name, ShiftOperator op, std::int64_t start,
                    std::vector<Rational> initial_values, TermFunction closed_form = {});

  const std::string& name() const noexcept { return name_; }
  const ShiftOperator& op() const noexcept { return op_; }
  std::int64_t start() const noexcept { return start_; }
  bool has_closed_form() const noexcept { return static_cast<bool>(closed_form_); }

  /// Throws IndexBelowStart, SingularLeadingCoefficient.
  Rational eval(std::int64_t n) const;
  Rational operator()(std::int64_t n) const { return eval(n); }

  /// Direct evaluation through the closed form. Throws DomainViolation if absent.
  Rational closed_form(std::int64_t n) const;

  /// Pins F(n) for an index where the recurrence is singular.
  void set_override(std::int64_t n, const Rational& value);

  TermFunction as_function() const;

 private:
  struct Cache;

  std::string name_;
  ShiftOperator op_;
  std::int64_t start_;
  TermFunction closed_form_;
  std::shared_ptr<Cache> cache_;
};

// Closed forms used as oracles and catalog definitions.
Integer domb_number(std::int64_t n);      // sum_k C(n,k)^2 C(2k,k) C(2(n-k),n-k)
Integer franel_number(std::int64_t n);    // sum_k C(n,k)^3
Rational harmonic_number(std::int64_t n, unsigned order = 1);
/// Coefficient of x^n in (x^2 + b x + c)^n.
Integer central_trinomial(std::int64_t n, const Integer& b, const Integer& c);

struct CatalogEntry {
  std::string key;
  HolonomicSequence sequence;
  std::string description;
};

/// Built once; safe to use from several threads.
const std::vector<CatalogEntry>& catalog();

/// Throws UnknownSequence.
const HolonomicSequence& catalog_sequence(std::string_view key);

/// Guesses an annihilator of the sequence terms[k] = F(start + k).
///
/// For ascending order r = 1..max_order and coefficient degree d = 0..max_deg
/// solves sum_{i<=r, e<=d} c_{i,e} n^e F(n+i) = 0 on all but the last 10
/// terms; the first nontrivial solution that also annihilates those 10
/// held-out terms is returned, scaled to primitive integer coefficients with
/// a positive leading coefficient of a_r. Throws InsufficientTerms when
/// terms.size() < (max_order+1)(max_deg+2) + max_order + 10.
std::optional<ShiftOperator> guess_annihilator(std::span<const Rational> terms, std::int64_t start,
                                               std::size_t max_order, std::size_t max_deg);

constexpr std::size_t kGuessHeldOut = 10;

std::size_t guess_required_terms(std::size_t max_order, std::size_t max_deg);

/// One exact rational per line ("p/q" or an integer); '#' starts a comment.
/// Throws ParseError with the byte offset of the offending token.
std::vector<Rational> read_terms(std::istream& in);

}  // namespace holoreduce
