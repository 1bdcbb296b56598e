// Exact scalar arithmetic: arbitrary-precision rationals and half-integers.
//
// Every eigenvalue, weight entry, and transition datum in this library is a
// Rational. Floats appear only in the numeric cross-check path (closedform).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace spinspec {

using Int = boost::multiprecision::cpp_int;

// Always in lowest terms with positive denominator (enforced by the backend).
// Division by zero throws std::overflow_error.
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Parses the "p/q" form emitted by to_string (also plain "p"). The
// denominator must be a positive integer literal; anything else throws
// std::invalid_argument.
Rational parse_rational(std::string_view text);

inline Rational make_rational(const Int& num, const Int& den) {
  return Rational(num) / Rational(den);
}

// A half-integer n/2, stored as its doubled value so parity (integer vs
// half-odd) stays decidable. Weight entries live here.
class HalfInt {
 public:
  HalfInt() = default;
  HalfInt(int whole) : twice_(2 * Int(whole)) {}  // NOLINT: implicit by design

  static HalfInt from_twice(Int twice) {
    HalfInt h;
    h.twice_ = std::move(twice);
    return h;
  }

  const Int& twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }
  Rational value() const { return make_rational(twice_, 2); }

  std::string str() const;
  // Accepts "p" or "p/2" with p odd; everything else throws
  // std::invalid_argument.
  static HalfInt parse(std::string_view text);

  HalfInt operator-() const { return from_twice(-twice_); }
  HalfInt abs() const { return twice_ < 0 ? -*this : *this; }

  friend HalfInt operator+(const HalfInt& a, const HalfInt& b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend HalfInt operator-(const HalfInt& a, const HalfInt& b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend bool operator==(const HalfInt& a, const HalfInt& b) {
    return a.twice_ == b.twice_;
  }
  friend bool operator!=(const HalfInt& a, const HalfInt& b) {
    return !(a == b);
  }
  friend bool operator<(const HalfInt& a, const HalfInt& b) {
    return a.twice_ < b.twice_;
  }
  friend bool operator<=(const HalfInt& a, const HalfInt& b) {
    return a.twice_ <= b.twice_;
  }
  friend bool operator>(const HalfInt& a, const HalfInt& b) { return b < a; }
  friend bool operator>=(const HalfInt& a, const HalfInt& b) { return b <= a; }

 private:
  Int twice_ = 0;
};

}  // namespace spinspec
