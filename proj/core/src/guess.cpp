#include <algorithm>

#include "holoreduce/error.hpp"
#include "holoreduce/sequences.hpp"

namespace holoreduce {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

/// One nonzero kernel vector of `m`, or empty when the kernel is trivial.
std::vector<Rational> kernel_vector(Matrix m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (pivot_cols.size() == cols) return {};

  std::size_t free_col = 0;
  for (std::size_t p = 0; free_col < cols; ++free_col) {
    if (p < pivot_cols.size() && pivot_cols[p] == free_col) {
      ++p;
      continue;
    }
    break;
  }
  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free_col];
  return v;
}

ShiftOperator normalized(std::vector<Polynomial> coeffs) {
  ShiftOperator op(std::move(coeffs));
  Integer num_gcd(0);
  Integer den_lcm(1);
  for (const auto& a : op.coefficients()) {
    for (const auto& c : a.coefficients()) {
      if (c == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (op.leading().leading_coefficient() < 0) scale = -scale;
  return op.scaled(scale);
}

bool annihilates(const ShiftOperator& op, std::span<const Rational> terms, std::int64_t start) {
  const std::size_t order = op.order();
  for (std::size_t k = 0; k + order < terms.size(); ++k) {
    if (op.apply_at(start + static_cast<std::int64_t>(k), terms.subspan(k, order + 1)) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::size_t guess_required_terms(std::size_t max_order, std::size_t max_deg) {
  return (max_order + 1) * (max_deg + 2) + max_order + kGuessHeldOut;
}

std::optional<ShiftOperator> guess_annihilator(std::span<const Rational> terms, std::int64_t start,
                                               std::size_t max_order, std::size_t max_deg) {
  const std::size_t required = guess_required_terms(max_order, max_deg);
  if (terms.size() < required) {
    throw Error(ErrorCode::InsufficientTerms, "need at least " + std::to_string(required) +
                                                  " terms, got " + std::to_string(terms.size()));
  }
  const std::size_t fit = terms.size() - kGuessHeldOut;

  for (std::size_t order = 1; order <= max_order; ++order) {
    for (std::size_t deg = 0; deg <= max_deg; ++deg) {
      const std::size_t cols = (order + 1) * (deg + 1);
      Matrix m;
      for (std::size_t k = 0; k + order < fit; ++k) {
        const Rational at = make_rational(start + static_cast<std::int64_t>(k));
        std::vector<Rational> row(cols);
        for (std::size_t i = 0; i <= order; ++i) {
          Rational power(1);
          for (std::size_t e = 0; e <= deg; ++e) {
            row[i * (deg + 1) + e] = power * terms[k + i];
            power *= at;
          }
        }
        m.push_back(std::move(row));
      }
      const auto v = kernel_vector(std::move(m), cols);
      if (v.empty()) continue;

      std::vector<Polynomial> coeffs;
      for (std::size_t i = 0; i <= order; ++i) {
        coeffs.emplace_back(std::vector<Rational>(v.begin() + static_cast<std::ptrdiff_t>(i * (deg + 1)),
                                                  v.begin() + static_cast<std::ptrdiff_t>((i + 1) * (deg + 1))));
      }
      ShiftOperator candidate = normalized(std::move(coeffs));
      if (!candidate.is_zero() && annihilates(candidate, terms, start)) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace holoreduce
