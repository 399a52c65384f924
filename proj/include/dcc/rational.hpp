#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace dcc {

namespace detail {

using int128 = __int128;

inline int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string to_string128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + int(v % 10)));
    v /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace detail

// Exact rational with 128-bit components. Tie-strength and membership scores
// are compared exactly so that argmax decisions and the cascade acceptance
// test never depend on floating-point rounding.
class Ratio {
public:
  constexpr Ratio() = default;

  Ratio(detail::int128 num, detail::int128 den) : num_(num), den_(den) {
    assert(den_ != 0);
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    detail::int128 g = detail::gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Ratio zero() { return Ratio(); }

  bool is_zero() const { return num_ == 0; }

  // Real-valued view; exact for all magnitudes seen here.
  double value() const {
    return static_cast<double>(static_cast<long double>(num_) /
                               static_cast<long double>(den_));
  }

  std::int64_t num() const { return static_cast<std::int64_t>(num_); }
  std::int64_t den() const { return static_cast<std::int64_t>(den_); }

  Ratio operator+(const Ratio& o) const {
    return Ratio(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }

  Ratio operator*(const Ratio& o) const { return Ratio(num_ * o.num_, den_ * o.den_); }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    detail::int128 lhs = a.num_ * b.den_;
    detail::int128 rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) {
    return os << detail::to_string128(r.num_) << "/" << detail::to_string128(r.den_);
  }

private:
  detail::int128 num_ = 0;
  detail::int128 den_ = 1;
};

using TieStrength = Ratio;

}  // namespace dcc
