#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace holoreduce {

/// Polynomial degree with a dedicated -infinity for the zero polynomial.
/// Addition absorbs -infinity, so deg(a*b) = deg a + deg b holds for all a, b.
class Degree {
 public:
  constexpr Degree() : value_(kNegInf) {}
  constexpr Degree(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent

  static constexpr Degree neg_inf() { return Degree(kNegInf, Tag{}); }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }

  /// Only meaningful when !is_neg_inf().
  constexpr std::int64_t value() const { return value_; }

  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr bool operator==(Degree, Degree) = default;

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr Degree operator-(Degree a, std::int64_t k) {
    return a.is_neg_inf() ? a : Degree(a.value_ - k);
  }

  friend std::ostream& operator<<(std::ostream& os, Degree d) {
    if (d.is_neg_inf()) return os << "-inf";
    return os << d.value_;
  }

 private:
  struct Tag {};
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  constexpr Degree(std::int64_t v, Tag) : value_(v) {}

  std::int64_t value_;
};

}  // namespace holoreduce
