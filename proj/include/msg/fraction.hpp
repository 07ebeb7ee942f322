#ifndef MSG_FRACTION_HPP
#define MSG_FRACTION_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "msg/errors.hpp"

namespace msg {

// Exact rational with int64 numerator/denominator.  All intermediates go
// through __int128 and overflow of the reduced result throws instead of
// wrapping; the quantities handled here (Euler characteristics, algebraic
// coordinates of unit quaternions) stay tiny, so a throw means a logic bug.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(long long n) : num_(n), den_(1) {}
  Fraction(long long n, long long d) {
    if (d == 0) throw DomainError("fraction with zero denominator");
    reduce_from(n, d);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128(n, d);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128(n, d);
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) throw DomainError("fraction division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Fraction operator-() const {
    Fraction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
  Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const { return (double)num_ / (double)den_; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Fraction from128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw OverflowError("fraction overflow");
    Fraction r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
  void reduce_from(long long n, long long d) {
    Fraction r = from128(n, d);
    num_ = r.num_;
    den_ = r.den_;
  }

  long long num_;
  long long den_;
};

}  // namespace msg

#endif
