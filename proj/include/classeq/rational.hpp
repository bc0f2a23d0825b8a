#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "classeq/error.hpp"

namespace classeq {

namespace detail {

using int128 = __int128;

constexpr int128 abs128(int128 v) { return v < 0 ? -v : v; }

constexpr int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// Exact rational number, stored reduced with positive denominator on 64 bits.
/// All intermediates run in 128 bits; narrowing a result that does not fit
/// back into 64 bits throws OverflowError rather than wrapping. Nothing in the
/// correctness paths ever touches floating point.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) {
    *this = make(num, den);
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    detail::int128 g = detail::gcd128(a.den_, b.den_);
    detail::int128 bd = b.den_ / g;
    detail::int128 num = detail::int128(a.num_) * bd +
                         detail::int128(b.num_) * (a.den_ / g);
    return make(num, detail::int128(a.den_) * bd);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(detail::int128(a.num_) * b.num_,
                detail::int128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw PreconditionError("division by zero rational");
    return make(detail::int128(a.num_) * b.den_,
                detail::int128(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    detail::int128 lhs = detail::int128(a.num_) * b.den_;
    detail::int128 rhs = detail::int128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q", or plain "p" for integers.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  static std::int64_t narrow(detail::int128 v) {
    if (v > detail::int128(INT64_MAX) || v < detail::int128(INT64_MIN)) {
      throw OverflowError("exact rational arithmetic overflowed 64 bits");
    }
    return static_cast<std::int64_t>(v);
  }

  static Rational make(detail::int128 num, detail::int128 den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    detail::int128 g = detail::gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace classeq
