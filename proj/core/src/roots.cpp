#include <algorithm>

#include "holoreduce/error.hpp"
#include "holoreduce/polynomial.hpp"

namespace holoreduce {
namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& squarefree) {
  std::vector<Polynomial> chain{squarefree, squarefree.derivative()};
  while (!chain.back().is_constant()) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs, so Sturm counts are unaffected.
    const Rational c = r.content();
    chain.push_back(-(r / (c < 0 ? -c : c)));
  }
  return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, const Integer& x) {
  const Rational at(x);
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Collects integer roots of `poly` in (lo, hi]; vlo/vhi are the Sturm
/// sign-change counts at the endpoints.
void isolate(const std::vector<Polynomial>& chain, const Polynomial& poly,
             const Integer& constant_term, const Integer& lo, int vlo, const Integer& hi,
             int vhi, std::set<Integer>& out) {
  if (vlo - vhi <= 0) return;
  if (hi - lo == 1) {
    if (hi != 0 && mpz_divisible_p(constant_term.get_mpz_t(), hi.get_mpz_t()) != 0 &&
        poly(Rational(hi)) == 0) {
      out.insert(hi);
    }
    return;
  }
  Integer mid = lo + hi;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
  const int vmid = sign_changes(chain, mid);
  isolate(chain, poly, constant_term, lo, vlo, mid, vmid, out);
  isolate(chain, poly, constant_term, mid, vmid, hi, vhi, out);
}

}  // namespace

std::set<Integer> integer_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "integer_roots of the zero polynomial");
  std::set<Integer> roots;

  // Integer content first: divisor arguments need integer coefficients.
  const Polynomial prim = p.primitive_part();
  const auto& c = prim.coefficients();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.insert(Integer(0));
  const Polynomial stripped(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
  if (stripped.is_constant()) return roots;

  const Integer constant_term = stripped.coefficient(0).get_num();
  const Polynomial squarefree =
      exact_divide(stripped, gcd(stripped, stripped.derivative())).primitive_part();

  // Cauchy bound: every root satisfies |x| < 1 + max |a_i / a_d|.
  Rational worst(0);
  const Rational lead = abs(squarefree.leading_coefficient());
  for (const auto& a : squarefree.coefficients()) worst = std::max<Rational>(worst, abs(a) / lead);
  Integer bound;
  mpz_cdiv_q(bound.get_mpz_t(), worst.get_num().get_mpz_t(), worst.get_den().get_mpz_t());
  bound += 1;

  const auto chain = sturm_chain(squarefree);
  const Integer lo = -bound;
  isolate(chain, squarefree, constant_term, lo, sign_changes(chain, lo), bound,
          sign_changes(chain, bound), roots);
  return roots;
}

}  // namespace holoreduce
