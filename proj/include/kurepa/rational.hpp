#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace kurepa {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt num, BigInt den = 1);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  /// Nearest double (correctly rounded by the big-number backend).
  double to_double() const;
  std::string str() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x);
  friend bool operator==(const Rational& x, const Rational& y) = default;

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

BigInt factorial(unsigned long n);

}  // namespace kurepa
