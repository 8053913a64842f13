#include "kurepa/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "kurepa/errors.hpp"

namespace kurepa {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

double Rational::to_double() const {
  using boost::multiprecision::cpp_bin_float_100;
  return static_cast<double>(cpp_bin_float_100(num_) / cpp_bin_float_100(den_));
}

std::string Rational::str() const {
  return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& x, const Rational& y) {
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator-(const Rational& x, const Rational& y) {
  return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator*(const Rational& x, const Rational& y) {
  return {x.num_ * y.num_, x.den_ * y.den_};
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw DomainError("rational division by zero");
  return {x.num_ * y.den_, x.den_ * y.num_};
}

Rational operator-(const Rational& x) { return {-x.num_, x.den_}; }

BigInt factorial(unsigned long n) {
  BigInt f = 1;
  for (unsigned long k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace kurepa
