#pragma once

#include "kurepa/types.hpp"

namespace kurepa::sf {

inline constexpr double euler_gamma = 0.57721566490153286;

/// Principal determination of (-1)^a, i.e. e^{i*pi*a}. Exact at integer a.
Complex minus_one_power(Complex a);

/// sin(pi*x) and cos(pi*x) with exact zeros and unit values at (half-)integers.
double sin_pi(double x);
double cos_pi(double x);
Complex sin_pi(Complex z);

/// Complex gamma function (Lanczos, reflection for Re z < 1/2).
/// Throws PoleError within 1e-12 of a non-positive integer.
Complex gamma(Complex z);

/// A logarithm of gamma; only exp(ln_gamma(z)) == gamma(z) is guaranteed,
/// not continuity of the branch.
Complex ln_gamma(Complex z);

/// Upper incomplete gamma Gamma(a, -1) under the principal branch of (-1)^a.
/// Entire in a; no spurious poles at a = 0, -1, -2, ...
Complex upper_gamma_at_minus_one(Complex a);

/// Exponential integral Ei(1).
double ei_one();

}  // namespace kurepa::sf
