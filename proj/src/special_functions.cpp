#include "kurepa/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "kurepa/errors.hpp"

namespace kurepa::sf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kSeriesCap = 500;

// Lanczos approximation, g = 7, nine terms (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPoleTolerance = 1e-12;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite_argument(Complex z, const char* what) {
  if (!finite(z)) throw DomainError(std::string(what) + ": non-finite argument");
}

Complex require_finite_result(Complex z, const char* what) {
  if (!finite(z)) throw DomainError(std::string(what) + ": result not representable");
  return z;
}

// Nearest point of {0, -1, -2, ...} and its distance from z.
std::pair<long, double> nearest_nonpositive_integer(Complex z) {
  const long n = z.real() >= 0.0 ? 0 : std::lround(z.real());
  return {n, std::abs(z - static_cast<double>(n))};
}

void check_gamma_pole(Complex z) {
  const auto [n, dist] = nearest_nonpositive_integer(z);
  if (dist < kPoleTolerance) throw PoleError(n);
}

// Lanczos sum and the shifted base t for Re z >= 1/2.
std::pair<Complex, Complex> lanczos_parts(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (zm1 + static_cast<double>(k));
  return {series, zm1 + kLanczosG + 0.5};
}

Complex gamma_right(Complex z) {
  const auto [series, t] = lanczos_parts(z);
  const Complex zm1 = z - 1.0;
  return std::sqrt(2.0 * kPi) * std::exp((zm1 + 0.5) * std::log(t) - t) * series;
}

Complex ln_gamma_right(Complex z) {
  const auto [series, t] = lanczos_parts(z);
  const Complex zm1 = z - 1.0;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

// Sum over k >= 0 of 1 / (k! (a + k)): the lower incomplete gamma at x = -1
// without its (-1)^a prefactor.
Complex lower_series(Complex a) {
  Complex sum = 0.0;
  double inv_fact = 1.0;
  for (int k = 0; k < kSeriesCap; ++k) {
    const Complex term = inv_fact / (a + static_cast<double>(k));
    sum += term;
    if (inv_fact < kEps && std::abs(term) <= 0.25 * kEps * std::abs(sum)) return sum;
    inv_fact /= static_cast<double>(k + 1);
  }
  throw ConvergenceError("lower incomplete gamma series: no convergence in " +
                         std::to_string(kSeriesCap) + " terms");
}

Complex upper_gamma_direct(Complex a) { return gamma(a) - minus_one_power(a) * lower_series(a); }

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double sign = x < 0.0 ? -1.0 : 1.0;
  double r = std::fmod(std::abs(x), 2.0);
  if (r >= 1.0) {
    r -= 1.0;
    sign = -sign;
  }
  if (r > 0.5) r = 1.0 - r;
  if (r == 0.0) return 0.0;
  return sign * std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(std::abs(x), 2.0);
  if (r > 1.0) r = 2.0 - r;
  if (r < 0.25) return std::cos(kPi * r);
  const double q = 0.5 - r;
  if (q == 0.0) return 0.0;
  return std::sin(kPi * q);
}

Complex sin_pi(Complex z) {
  const double y = kPi * z.imag();
  return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

Complex minus_one_power(Complex a) {
  require_finite_argument(a, "minus_one_power");
  const double scale = std::exp(-kPi * a.imag());
  return require_finite_result({scale * cos_pi(a.real()), scale * sin_pi(a.real())},
                               "minus_one_power");
}

Complex gamma(Complex z) {
  require_finite_argument(z, "gamma");
  check_gamma_pole(z);
  if (z.real() < 0.5) {
    return require_finite_result(std::numbers::pi / (sin_pi(z) * gamma_right(1.0 - z)), "gamma");
  }
  return require_finite_result(gamma_right(z), "gamma");
}

Complex ln_gamma(Complex z) {
  require_finite_argument(z, "ln_gamma");
  check_gamma_pole(z);
  if (z.real() < 0.5) {
    return require_finite_result(
        std::log(std::numbers::pi) - std::log(sin_pi(z)) - ln_gamma_right(1.0 - z), "ln_gamma");
  }
  return require_finite_result(ln_gamma_right(z), "ln_gamma");
}

Complex upper_gamma_at_minus_one(Complex a) {
  require_finite_argument(a, "upper_gamma_at_minus_one");
  const auto [n, dist] = nearest_nonpositive_integer(a);
  if (dist > 0.1) return require_finite_result(upper_gamma_direct(a), "upper_gamma_at_minus_one");

  // Near a = n the two terms of Gamma(a) - gamma(a, -1) share a pole. The sum
  // is entire, so interpolate it with Cauchy's formula from a circle of radius
  // 1/2 around n, where the direct route is well conditioned. The trapezoidal
  // rule error is O((dist / radius)^nodes) = O(0.2^32).
  constexpr int nodes = 32;
  constexpr double radius = 0.5;
  const Complex center = static_cast<double>(n);
  Complex acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double theta = 2.0 * kPi * (j + 0.5) / nodes;
    const Complex offset = std::polar(radius, theta);
    const Complex w = center + offset;
    acc += upper_gamma_direct(w) * offset / (w - a);
  }
  return require_finite_result(acc / static_cast<double>(nodes), "upper_gamma_at_minus_one");
}

double ei_one() {
  // Ei(1) = gamma + sum_{k>=1} 1/(k k!); terms fall below 1e-17 by k = 17.
  static const double value = [] {
    double sum = 0.0;
    double inv_fact = 1.0;
    for (int k = 1; k <= 25; ++k) {
      inv_fact /= k;
      sum += inv_fact / k;
    }
    return euler_gamma + sum;
  }();
  return value;
}

}  // namespace kurepa::sf
