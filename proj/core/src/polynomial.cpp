#include "holoreduce/polynomial.hpp"

#include <algorithm>

#include "holoreduce/error.hpp"

namespace holoreduce {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer pow_integer(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow_rational(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
    Rational inv = 1 / base;
    return pow_rational(inv, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  return make_rational(pow_integer(base.get_num(), e), pow_integer(base.get_den(), e));
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  Polynomial p;
  if (c == 0) return p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_[power] = c;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return Degree::neg_inf();
  return Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::shift(const Rational& k) const {
  if (k == 0 || is_constant()) return *this;
  // Taylor shift by repeated synthetic division: O(d^2) rational ops.
  std::vector<Rational> c = coeffs_;
  const std::size_t d = c.size() - 1;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = d - 1;; --j) {
      c[j] += k * c[j + 1];
      if (j == i) break;
    }
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this / leading_coefficient();
}

Rational Polynomial::content() const {
  if (is_zero()) return Rational(0);
  Integer g(0);
  Integer l(1);
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational out = make_rational(g, l);
  if (leading_coefficient() < 0) out = -out;
  return out;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  return *this / content();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
  if (c == 0) throw Error(ErrorCode::DivisionByZero, "polynomial divided by zero");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const Rational lead = bc.back();
  std::vector<Rational> q(r.size() - db, Rational(0));
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    const Rational f = r[k] / lead;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::DivisionNotExact, "divisor does not divide dividend");
  return q;
}

bool divides(const Polynomial& b, const Polynomial& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    // Keeping the remainders primitive stops coefficient growth.
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.monic();
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  // res(A, B) = (-1)^{deg A deg B} res(B, A), and res(B, A) = lc(B)^{deg A - deg R} res(B, R)
  // for R = A mod B. Terminates with res(A, c) = c^{deg A} for constant c.
  Polynomial x = a;
  Polynomial y = b;
  Rational acc(1);
  for (;;) {
    const long dx = static_cast<long>(x.degree().value());
    const long dy = static_cast<long>(y.degree().value());
    if (dy == 0) {
      acc *= pow_rational(y.leading_coefficient(), dx);
      return acc;
    }
    Polynomial r = divmod(x, y).second;
    if (r.is_zero()) return Rational(0);
    const long dr = static_cast<long>(r.degree().value());
    if ((dx * dy) % 2 != 0) acc = -acc;
    acc *= pow_rational(y.leading_coefficient(), dx - dr);
    x = std::move(y);
    y = std::move(r);
  }
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  // Newton divided differences.
  const std::size_t m = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      const Rational den = xs[i] - xs[i - level];
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
      if (i == level) break;
    }
  }
  Polynomial out;
  for (std::size_t i = m; i-- > 0;) {
    out *= Polynomial(std::vector<Rational>{-xs[i], Rational(1)});
    out += Polynomial(dd[i]);
  }
  return out;
}

Polynomial falling_factorial(std::size_t k) {
  Polynomial out(1);
  for (std::size_t i = 0; i < k; ++i) {
    out *= Polynomial(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
  }
  return out;
}

Polynomial shifted_product(const Polynomial& p, std::int64_t first, std::int64_t last) {
  Polynomial out(1);
  for (std::int64_t k = first; k <= last; ++k) out *= p.shift(k);
  return out;
}

}  // namespace holoreduce
