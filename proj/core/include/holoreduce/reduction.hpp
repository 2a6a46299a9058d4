#pragma once

#include <optional>
#include <vector>

#include "holoreduce/degree_profile.hpp"
#include "holoreduce/shift_operator.hpp"

namespace holoreduce {

/// p = L*(multiplier) + remainder, with certificate u_i = certificate_polys(L, multiplier).
/// Hence p F = remainder F + Delta(-B) where B(n) = sum_i u_i(n) F(n+i).
struct ReductionResult {
  Polynomial remainder;
  Polynomial multiplier;
  std::vector<Polynomial> certificate;
  ShiftOperator operator_used;
};

/// Greedy top-down reduction modulo L*(Q[n]). A monomial of degree
/// deg L + s is eliminated with L*(n^s) unless s lies in R_L; whatever is
/// left has degrees in [0, deg L) or in deg L + R_L.
/// Throws ZeroOperator or OrderZero.
ReductionResult polynomial_reduce(const Polynomial& p, const ShiftOperator& op);

enum class Side { Lower, Upper };

/// Product of `order` shifts of `base`:
///   Upper: prod_{j=1}^{I} A(n + base_shift + j)
///   Lower: prod_{j=1}^{I} A(n + base_shift - j)
/// and 1 for I = 0. Lower with base_shift 0 is SP_{-I}(A_0(n)); Upper with
/// base_shift -J is SP_I(A_J(n-J)).
struct ShiftProductSpec {
  Polynomial base;
  Side direction = Side::Upper;
  std::size_t order = 0;
  std::int64_t base_shift = 0;
};

Polynomial sp_expand(const ShiftProductSpec& spec);

/// Annihilator of G = F / SP_{-I}(A0) built from L in ann F, where A0 | a_0.
/// Throws FactorNotDivisor, OrderTooSmall (I < J), OrderZero, ZeroInput (a_0 == 0).
ShiftOperator build_L1_lower(const ShiftOperator& op, const Polynomial& factor, std::size_t order);

/// Annihilator of G = F / SP_I(A_J(n-J)) built from L in ann F, where A_J | a_J.
/// Throws FactorNotDivisor, OrderTooSmall, OrderZero.
ShiftOperator build_L1_upper(const ShiftOperator& op, const Polynomial& factor, std::size_t order);

/// p F = remainder_numer / sp_expand(denominator) * F + Delta(-B), with B
/// the boundary term of `reduction` evaluated on G = F / sp_expand(denominator).
struct RationalReductionResult {
  Polynomial remainder_numer;
  ShiftProductSpec denominator;
  ShiftOperator derived_operator;
  ReductionResult reduction;
  Side side = Side::Upper;
  std::size_t order = 0;
  /// deg L + (J-1) deg factor; the remainder is strictly below it when L is
  /// strongly nondegenerated. Empty otherwise.
  std::optional<Degree> degree_bound;
  /// Number of extra shift-product factors added by auto-grow.
  std::size_t growth = 0;
};

ShiftProductSpec shift_product_spec(const ShiftOperator& op, const Polynomial& factor, Side side,
                                    std::size_t order);

struct RationalReduceOptions {
  bool auto_grow = false;
  std::size_t max_growth = 8;
};

/// Builds L1 for (factor, side, I), reduces p * SP with it, and packages the
/// rational remainder. Throws IrreducibleAtThisI when the reduction leaves a
/// term at or above deg L1 (possible only for operators that are not
/// strongly nondegenerated); with auto_grow, retries I+1 .. I+max_growth first.
RationalReductionResult rational_reduce(const Polynomial& p, const ShiftOperator& op,
                                        const Polynomial& factor, Side side, std::size_t order,
                                        RationalReduceOptions options = {});

/// Which of the four coprimality conditions hold for all h >= 0:
///   gcd(a_0(n), a_J(n+h)), gcd(b(n), b(n+J+h)), gcd(a_0(n), b(n+J+h)), gcd(b(n), a_J(n+h)).
/// When all hold, a summable (a/b) F forces b | a.
struct AdmissibilityReport {
  bool trailing_leading = false;
  bool denominator_self = false;
  bool trailing_denominator = false;
  bool denominator_leading = false;

  bool all() const {
    return trailing_leading && denominator_self && trailing_denominator && denominator_leading;
  }
};

/// Throws ZeroInput (b == 0 or a_0 a_J == 0) and OrderZero.
AdmissibilityReport denominator_admissibility(const ShiftOperator& op, const Polynomial& b);

}  // namespace holoreduce
