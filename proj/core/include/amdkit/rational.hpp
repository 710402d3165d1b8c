#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "amdkit/error.hpp"

namespace amdkit {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative fraction, always stored reduced with positive denominator.
// Every probability and bound in this toolkit is a ratio of integer counts,
// so no floating point enters any comparison.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num, BigInt den);
  Rational(std::uint64_t num, std::uint64_t den) : Rational(BigInt(num), BigInt(den)) {}
  static Rational from_integer(std::uint64_t v) { return Rational(BigInt(v), BigInt(1)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  std::string str() const;     // "num/den", or just "num" when den == 1
  double to_double() const;

 private:
  BigInt num_;
  BigInt den_;
};

// ceil(num/den) for nonnegative integers, den > 0.
BigInt ceil_div(const BigInt& num, const BigInt& den);

}  // namespace amdkit
