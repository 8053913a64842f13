#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "kurepa/errors.hpp"
#include "kurepa/rational.hpp"
#include "kurepa/special_functions.hpp"
#include "kurepa/verify.hpp"
#include "oracles.hpp"

using kurepa::Complex;
namespace sf = kurepa::sf;

namespace {

double rel(Complex a, Complex b) { return kurepa::verify::relative_difference(a, b); }

Complex random_point(kurepa::verify::Lcg64& rng, double re_lo, double re_hi, double im_lo,
                     double im_hi) {
  return {rng.uniform(re_lo, re_hi), rng.uniform(im_lo, im_hi)};
}

double distance_to_nonpositive_integer(Complex z) {
  const double n = std::min(0.0, std::round(z.real()));
  return std::abs(z - n);
}

}  // namespace

TEST(Gamma, KnownValues) {
  EXPECT_LT(rel(sf::gamma(1.0), 1.0), 1e-14);
  EXPECT_LT(rel(sf::gamma(5.0), 24.0), 1e-14);
  EXPECT_LT(rel(sf::gamma(0.5), std::sqrt(std::numbers::pi)), 1e-14);
  EXPECT_LT(rel(sf::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)), 1e-14);
}

TEST(Gamma, MatchesExactFactorials) {
  for (unsigned n = 1; n <= 50; ++n) {
    const double exact = kurepa::Rational(kurepa::factorial(n - 1)).to_double();
    EXPECT_LT(rel(sf::gamma(static_cast<double>(n)), exact), 1e-13) << "n=" << n;
  }
}

TEST(Gamma, MatchesStirlingOracle) {
  kurepa::verify::Lcg64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Complex z = random_point(rng, -30.0, 50.0, -20.0, 20.0);
    if (distance_to_nonpositive_integer(z) < 0.05) continue;
    EXPECT_LT(rel(sf::gamma(z), oracle::gamma(z)), 1e-11) << z;
  }
}

TEST(Gamma, PolesThrow) {
  for (double p : {0.0, -1.0, -3.0, -17.0}) {
    try {
      sf::gamma(p);
      FAIL() << "no PoleError at " << p;
    } catch (const kurepa::PoleError& e) {
      EXPECT_EQ(e.location(), static_cast<std::int64_t>(p));
    }
  }
  EXPECT_THROW(sf::gamma(Complex(-3.0 + 1e-13, 0.0)), kurepa::PoleError);
  EXPECT_NO_THROW(sf::gamma(Complex(-3.0, 1e-6)));
}

TEST(Gamma, NonFiniteInputIsDomainError) {
  EXPECT_THROW(sf::gamma(Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)),
               kurepa::DomainError);
  EXPECT_THROW(sf::gamma(Complex(std::numeric_limits<double>::infinity(), 0.0)),
               kurepa::DomainError);
}

TEST(Gamma, RecurrenceReflectionAndConjugation) {
  kurepa::verify::Lcg64 rng(12);
  for (int k = 0; k < 200; ++k) {
    const Complex z = random_point(rng, -10.0, 10.0, -5.0, 5.0);
    if (distance_to_nonpositive_integer(z) < 0.05 || distance_to_nonpositive_integer(z + 1.0) < 0.05)
      continue;
    EXPECT_LT(rel(sf::gamma(z + 1.0), z * sf::gamma(z)), 1e-12) << z;
    EXPECT_LT(rel(sf::gamma(std::conj(z)), std::conj(sf::gamma(z))), 1e-14) << z;
    if (distance_to_nonpositive_integer(1.0 - z) >= 0.05) {
      const Complex lhs = sf::gamma(z) * sf::gamma(1.0 - z);
      const Complex rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
      EXPECT_LT(rel(lhs, rhs), 1e-11) << z;
    }
  }
}

TEST(LnGamma, KnownValuesAndExpConsistency) {
  EXPECT_LT(std::abs(sf::ln_gamma(1.0)), 1e-14);
  EXPECT_LT(std::abs(sf::ln_gamma(2.0)), 1e-14);
  EXPECT_NEAR(sf::ln_gamma(10.0).real(), 12.801827480081469, 1e-12);
  EXPECT_NEAR(sf::ln_gamma(200.0).real(), std::lgamma(200.0), 1e-10);
  kurepa::verify::Lcg64 rng(13);
  for (int k = 0; k < 200; ++k) {
    const Complex z = random_point(rng, -20.0, 60.0, -10.0, 10.0);
    if (distance_to_nonpositive_integer(z) < 0.05) continue;
    EXPECT_LT(rel(std::exp(sf::ln_gamma(z)), sf::gamma(z)), 1e-11) << z;
  }
  EXPECT_THROW(sf::ln_gamma(-2.0), kurepa::PoleError);
}

TEST(MinusOnePower, ExactAtIntegersAndSignFlip) {
  EXPECT_EQ(sf::minus_one_power(0.0), Complex(1.0, 0.0));
  EXPECT_EQ(sf::minus_one_power(1.0), Complex(-1.0, 0.0));
  EXPECT_EQ(sf::minus_one_power(-7.0), Complex(-1.0, 0.0));
  EXPECT_EQ(sf::minus_one_power(0.5), Complex(0.0, 1.0));
  kurepa::verify::Lcg64 rng(14);
  for (int k = 0; k < 200; ++k) {
    const Complex a = random_point(rng, -10.0, 10.0, -2.0, 2.0);
    EXPECT_LT(rel(sf::minus_one_power(a + 1.0), -sf::minus_one_power(a)), 1e-13) << a;
    EXPECT_LT(rel(sf::minus_one_power(a), std::exp(Complex(0.0, std::numbers::pi) * a)), 1e-12);
  }
}

TEST(SinCosPi, ExactZerosAndUnits) {
  for (int n = -5; n <= 5; ++n) {
    EXPECT_EQ(sf::sin_pi(static_cast<double>(n)), 0.0);
    EXPECT_EQ(sf::cos_pi(n + 0.5), 0.0);
    EXPECT_EQ(std::abs(sf::cos_pi(static_cast<double>(n))), 1.0);
  }
  EXPECT_NEAR(sf::sin_pi(0.25), std::sqrt(0.5), 2.5e-16);
}

TEST(UpperGammaAtMinusOne, SmallPositiveIntegers) {
  EXPECT_LT(std::abs(sf::upper_gamma_at_minus_one(1.0) - std::numbers::e), 1e-12);
  EXPECT_LT(std::abs(sf::upper_gamma_at_minus_one(2.0)), 1e-12);
  EXPECT_LT(std::abs(sf::upper_gamma_at_minus_one(3.0) - std::numbers::e), 1e-12);
  for (int n = 1; n <= 15; ++n) {
    const Complex got = sf::upper_gamma_at_minus_one(static_cast<double>(n));
    const double want = oracle::upper_gamma_positive_integer(n);
    EXPECT_LT(std::abs(got - want), 1e-12 * (1.0 + std::abs(want))) << "n=" << n;
  }
}

TEST(UpperGammaAtMinusOne, NonPositiveIntegersAreFinite) {
  EXPECT_LT(std::abs(sf::upper_gamma_at_minus_one(0.0) -
                     Complex(-1.8951178163559368, -std::numbers::pi)),
            1e-12);
  for (unsigned n = 0; n <= 12; ++n) {
    const Complex got = sf::upper_gamma_at_minus_one(-static_cast<double>(n));
    EXPECT_LT(rel(got, oracle::upper_gamma_negative_integer(n)), 1e-10) << "n=" << n;
  }
}

TEST(UpperGammaAtMinusOne, AgreesWithNaiveFormulaAwayFromIntegers) {
  kurepa::verify::Lcg64 rng(15);
  for (int k = 0; k < 200; ++k) {
    const Complex a = random_point(rng, -12.0, 12.0, -3.0, 3.0);
    const double d = distance_to_nonpositive_integer(a);
    if (d < 0.02) continue;
    EXPECT_LT(rel(sf::upper_gamma_at_minus_one(a), oracle::upper_gamma_naive(a)), 1e-11 / d) << a;
  }
}

TEST(UpperGammaAtMinusOne, RecurrenceHoldsEverywhere) {
  // Gamma(a+1, x) = a Gamma(a, x) + x^a e^{-x} with x = -1.
  kurepa::verify::Lcg64 rng(16);
  for (int k = 0; k < 200; ++k) {
    const Complex a = random_point(rng, -10.0, 10.0, -3.0, 3.0);
    const Complex lhs = sf::upper_gamma_at_minus_one(a + 1.0);
    const Complex rhs = a * sf::upper_gamma_at_minus_one(a) +
                        std::exp(Complex(0.0, std::numbers::pi) * a) * std::numbers::e;
    EXPECT_LT(std::abs(lhs - rhs), 1e-10 * (1.0 + std::abs(lhs))) << a;
  }
}

TEST(UpperGammaAtMinusOne, ContinuousAcrossInterpolationBoundary) {
  for (int n = 0; n <= 6; ++n) {
    for (double angle : {0.0, 1.0, 2.5, 4.0}) {
      const Complex dir = std::polar(1.0, angle);
      const Complex inside = -static_cast<double>(n) + 0.0999 * dir;
      const Complex outside = -static_cast<double>(n) + 0.1001 * dir;
      const Complex fi = sf::upper_gamma_at_minus_one(inside);
      const Complex fo = sf::upper_gamma_at_minus_one(outside);
      EXPECT_LT(std::abs(fi - fo), 1e-2 * (1.0 + std::abs(fo))) << n << " " << angle;
      EXPECT_LT(rel(fi, oracle::upper_gamma_naive(inside)), 1e-9);
    }
  }
}

TEST(EiOne, MatchesExactSeries) {
  const double want = oracle::ei_one_exact();
  EXPECT_NEAR(want, 1.8951178163559368, 4e-16);
  EXPECT_NEAR(sf::ei_one(), want, 1e-15);
  EXPECT_GT(sf::ei_one(), 1.8);
  EXPECT_LT(sf::ei_one(), 2.0);
}

TEST(EiOne, ConsistentWithUpperGammaAtZero) {
  const Complex lhs = sf::ei_one() + Complex(0.0, std::numbers::pi);
  EXPECT_LT(std::abs(lhs + sf::upper_gamma_at_minus_one(0.0)), 1e-10);
}
