#include "amdkit/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace amdkit {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  require(den_ != 0, Errc::DivisionByZero, "rational with zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  require(num_ >= 0, Errc::DegenerateParameters, "negative probability or bound");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational operator/(const Rational& a, const Rational& b) {
  require(!b.is_zero(), Errc::DivisionByZero, "rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  return (num + den - 1) / den;
}

}  // namespace amdkit
