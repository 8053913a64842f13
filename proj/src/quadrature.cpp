#include "kurepa/quadrature.hpp"

#include <cmath>
#include <vector>

#include "kurepa/errors.hpp"

namespace kurepa::quad {

namespace {

// e^w - 1 without cancellation for small |w|.
Complex expm1(Complex w) {
  const double x = w.real();
  const double y = w.imag();
  const double half_sin = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin, std::exp(x) * std::sin(y)};
}

// (t^z - 1)/(t - 1) = sum_{k>=1} C(z, k) (t - 1)^{k-1}, first six terms.
Complex removable_patch(Complex z, double u) {
  Complex term = z;
  Complex sum = term;
  for (int k = 2; k <= 6; ++k) {
    term *= (z - static_cast<double>(k - 1)) * u / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

double log_tail_formula(double sigma, double cutoff) {
  return -cutoff + std::log(std::pow(cutoff, sigma) + 1.0) - std::log(cutoff - 1.0);
}

}  // namespace

Complex kurepa_integrand(Complex z, double t) {
  if (!(t >= 0.0)) throw DomainError("integrand: t must be non-negative");
  if (z == Complex(0.0)) return 0.0;
  if (t == 0.0) {
    if (z.real() > 0.0) return 1.0;
    throw DomainError("integrand: t^z is singular at t = 0 for Re z <= 0");
  }
  const double u = t - 1.0;
  if (std::abs(u) <= removable_window) return std::exp(-t) * removable_patch(z, u);
  return std::exp(-t) * expm1(z * std::log(t)) / u;
}

double default_tail_cutoff(double sigma, double abs_tol) {
  const double target = std::log(abs_tol / 10.0);
  double cutoff = std::max(4.0, 2.0 * sigma + 2.0);
  while (log_tail_formula(sigma, cutoff) >= target) cutoff += 1.0;
  return cutoff;
}

double tail_bound(double sigma, double tail_cutoff) {
  // Gamma(sigma + 1, T) <= e^{-T} T^sigma * T / (T - sigma) for T > sigma.
  const double growth = tail_cutoff / (tail_cutoff - sigma);
  return std::exp(-tail_cutoff) * (std::pow(tail_cutoff, sigma) * growth + 1.0) /
         (tail_cutoff - 1.0);
}

KurepaResult integrate_K(Complex z, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(z.real() > 0.0)) throw DomainError("integrate_K: requires Re z > 0");
  const double sigma = z.real();
  const double cutoff = cfg.tail_cutoff.value_or(default_tail_cutoff(sigma, cfg.abs_tol));
  if (!(cutoff > sigma + 1.0))
    throw DomainError("integrate_K: tail cutoff must exceed Re z + 1");

  // The window around t = 1 sits inside the middle panel.
  std::vector<double> breakpoints = {0.0, 0.5, 2.0};
  for (double t = 10.0; t < cutoff - 1.0; t += 8.0) breakpoints.push_back(t);
  breakpoints.push_back(cutoff);

  const double tail = tail_bound(sigma, cutoff);
  const double panel_abs_tol = std::max(cfg.abs_tol - tail, 0.5 * cfg.abs_tol);
  const auto estimate = integrate_adaptive([z](double t) { return kurepa_integrand(z, t); },
                                           breakpoints, cfg.rel_tol, panel_abs_tol,
                                           cfg.max_subdivisions);
  KurepaResult result;
  result.value = estimate.value;
  result.method = Method::quadrature;
  result.est_abs_error = estimate.abs_error + tail;
  return result;
}

}  // namespace kurepa::quad
