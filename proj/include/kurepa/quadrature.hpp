#pragma once

#include <span>

#include "kurepa/types.hpp"

namespace kurepa::quad {

/// Half-width of the window around t = 1 where the integrand is replaced by
/// its Taylor expansion.
inline constexpr double removable_window = 1e-6;

/// e^{-t} (t^z - 1) / (t - 1). Throws DomainError for t < 0.
Complex kurepa_integrand(Complex z, double t);

/// Tail cutoff T with e^{-T} (T^sigma + 1) / (T - 1) < abs_tol / 10.
double default_tail_cutoff(double sigma, double abs_tol);

/// Analytic bound on the discarded tail of the integral beyond T.
double tail_bound(double sigma, double tail_cutoff);

struct IntegralEstimate {
  Complex value;
  double abs_error = 0.0;
  int panels = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of a complex-valued
/// function over the consecutive intervals given by `breakpoints`.
/// Panels are refined by largest error first; the final sum runs in
/// left-to-right panel order so results are reproducible.
/// Throws ConvergenceError when `max_panels` is exhausted.
template <typename F>
IntegralEstimate integrate_adaptive(F&& f, std::span<const double> breakpoints, double rel_tol,
                                    double abs_tol, int max_panels);

/// K(z) from the defining integral over [0, infinity). Requires Re z > 0.
KurepaResult integrate_K(Complex z, const QuadratureConfig& cfg = {});

}  // namespace kurepa::quad

#include "kurepa/detail/adaptive.ipp"
