#pragma once

#include <optional>
#include <set>
#include <vector>

#include "holoreduce/shift_operator.hpp"

namespace holoreduce {

/// Degree classification of a recurrence operator.
///
/// The binomial recombinations b_k(n) = sum_{j=k}^{J} C(j,k) a_{J-j}(n+j-J)
/// control the degree of L*(x): deg L = max_k (deg b_k - k), and the
/// coefficient of n^{deg L + deg x} in L*(x) is governed by the indicial
/// polynomial f(s) = sum_k [n^{deg L + k}] b_k(n) * s(s-1)...(s-k+1).
/// Degrees s in R_L (nonnegative integer roots of f) are exactly the ones
/// where deg L*(n^s) drops below deg L + s.
struct DegreeProfile {
  Degree degree;                      // deg L
  Degree max_coefficient_degree;      // d_L
  std::vector<Polynomial> b;          // b_0 .. b_J
  Polynomial indicial;                // f(s)
  std::set<Integer> exceptional;      // R_L
  std::size_t continued_zero_index;   // C_L: least s with L*(n^s) != 0
  bool degenerated;                   // R_L nonempty
  bool strongly_nondegenerated;       // deg L == d_L
};

/// Throws ZeroOperator, or InternalInconsistency if no s <= J gives L*(n^s) != 0.
DegreeProfile degree_profile(const ShiftOperator& op);

enum class DegreeOrdering { Less, Equal };

struct DegreeLawReport {
  DegreeOrdering ordering;  // deg L*(x) against deg L + deg x
  Degree actual;
  Degree nominal;           // deg L + deg x
  bool law_holds;           // "<" iff degenerated and deg x in R_L
};

/// Throws ZeroInput for x == 0.
DegreeLawReport degree_law_check(const ShiftOperator& op, const Polynomial& x);

/// Integers h with gcd(a(n), b(n+h)) != 1: the integer roots of
/// Res_n(a(n), b(n+h)) viewed as a polynomial in h.
std::set<Integer> shift_collisions(const Polynomial& a, const Polynomial& b);

/// True iff gcd(a(n), b(n+h)) = 1 for every integer h >= offset.
bool gcd_condition(const Polynomial& a, const Polynomial& b, std::int64_t offset);

struct SummableDegreeBounds {
  Degree upper;                 // deg L + C_L
  Polynomial witness;           // L*(n^{C_L}); witness * F is summable
  bool lower_valid;             // gcd(a_0(n), a_J(n+h)) = 1 for all h >= 0
  std::optional<Degree> lower;  // least deg of a nonzero L*(x), when valid
};

/// Throws ZeroOperator; OrderZero when J == 0.
SummableDegreeBounds summable_degree_bounds(const ShiftOperator& op);

}  // namespace holoreduce
