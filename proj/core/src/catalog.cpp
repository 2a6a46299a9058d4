#include <algorithm>

#include "holoreduce/error.hpp"
#include "holoreduce/sequences.hpp"

namespace holoreduce {
namespace {

Rational signed_power_ratio(const Integer& value, std::int64_t base, std::int64_t n) {
  return make_rational(value, pow_integer(to_integer(base), static_cast<unsigned long>(n)));
}

std::vector<CatalogEntry> build_catalog() {
  const Polynomial n = Polynomial::variable();
  std::vector<CatalogEntry> out;

  auto add = [&](std::string key, std::vector<Polynomial> coeffs, std::int64_t start,
                 TermFunction closed_form, std::string description) {
    const ShiftOperator op(std::move(coeffs));
    std::vector<Rational> initial;
    for (std::size_t i = 0; i < op.order(); ++i) {
      initial.push_back(closed_form(start + static_cast<std::int64_t>(i)));
    }
    out.push_back(CatalogEntry{key, HolonomicSequence(key, op, start, std::move(initial), closed_form),
                               std::move(description)});
  };

  const Polynomial domb_mid = (2 * n + 3) * (5 * pow(n, 2) + 15 * n + 12);

  add("domb",
      {64 * pow(n + 1, 3), -2 * domb_mid, pow(n + 2, 3)}, 0,
      [](std::int64_t m) -> Rational { return Rational(domb_number(m)); },
      "Domb numbers sum_k C(n,k)^2 C(2k,k) C(2(n-k),n-k)");

  add("franel",
      {-8 * pow(n + 1, 2), -(7 * pow(n, 2) + 21 * n + 16), pow(n + 2, 2)}, 0,
      [](std::int64_t m) -> Rational { return Rational(franel_number(m)); },
      "Franel numbers sum_k C(n,k)^3");

  add("domb_over_16n",
      {2 * pow(n + 1, 3), -domb_mid, 8 * pow(n + 2, 3)}, 0,
      [](std::int64_t m) -> Rational { return signed_power_ratio(domb_number(m), 16, m); },
      "Domb(n) / 16^n");

  add("domb_over_neg32n",
      {pow(n + 1, 3), domb_mid, 16 * pow(n + 2, 3)}, 0,
      [](std::int64_t m) -> Rational { return signed_power_ratio(domb_number(m), -32, m); },
      "Domb(n) / (-32)^n");

  add("franel_example22",
      {8 * n * (pow(n, 2) - 1), -n * (7 * pow(n, 2) + 21 * n + 16), -pow(n + 2, 3)}, 2,
      [](std::int64_t m) -> Rational {
        const Rational f(franel_number(m));
        return (m % 2 == 0 ? f : Rational(-f)) / Rational(to_integer(m * (m - 1)));
      },
      "(-1)^n f_n / (n(n-1)), f_n the Franel numbers");

  add("harmonic_example23",
      {n * pow(n + 1, 2), -(n + 1) * (n + 2) * (2 * n + 3), pow(n + 2, 2) * (n + 3)}, 1,
      [](std::int64_t m) -> Rational { return harmonic_number(m) / Rational(to_integer(m * (m + 1))); },
      "H_n / (n(n+1))");

  add("central_binomial_example27",
      {pow(2 * n - 1, 4), -16 * pow(n + 1, 4)}, 0,
      [](std::int64_t m) -> Rational {
        const Integer c = binomial(2 * m, m);
        const Integer odd = to_integer(2 * m - 1);
        return make_rational(pow_integer(c, 4),
                             pow_integer(odd, 4) * pow_integer(Integer(256), static_cast<unsigned long>(m)));
      },
      "C(2n,n)^4 / ((2n-1)^4 256^n)");

  for (unsigned order = 1; order <= 3; ++order) {
    const Polynomial hi = pow(n + 2, order);
    const Polynomial lo = pow(n + 1, order);
    add("harmonic_" + std::to_string(order), {lo, -(hi + lo), hi}, 0,
        [order](std::int64_t m) -> Rational { return harmonic_number(m, order); },
        "harmonic numbers of order " + std::to_string(order));
  }

  const Integer b(62);
  const Integer c(1);
  add("t_poly",
      {(n + 1) * Rational(b * b - 4 * c), -(2 * n + 3) * Rational(b), n + 2}, 0,
      [b, c](std::int64_t m) -> Rational { return Rational(central_trinomial(m, b, c)); },
      "T_n(62, 1), coefficient of x^n in (x^2 + 62x + 1)^n");

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const HolonomicSequence& catalog_sequence(std::string_view key) {
  const auto& entries = catalog();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const CatalogEntry& e) { return e.key == key; });
  if (it == entries.end()) {
    throw Error(ErrorCode::UnknownSequence, "no catalog sequence named '" + std::string(key) + "'");
  }
  return it->sequence;
}

}  // namespace holoreduce
