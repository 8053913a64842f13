#pragma once

#include <cstdint>
#include <vector>

#include "kurepa/errors.hpp"
#include "kurepa/rational.hpp"
#include "kurepa/types.hpp"

namespace kurepa {

/// Pole of K_i with its exact residue.
struct PoleInfo {
  std::int64_t location = 0;
  int order = 1;
  Rational residue_exact;
  double residue_float = 0.0;
};

/// Left factorial !n = 0! + 1! + ... + (n-1)!, with !0 = 0.
BigInt left_factorial(unsigned long n);

/// Continuation of K through the exponential integral and Gamma(a, -1):
///   K(z) = (Ei(1) + i pi)/e + (-1)^z Gamma(1+z) Gamma(-z, -1)/e.
/// Both factors are singular at every negative integer (including the
/// removable point -2), so z must be farther than `exclusion_radius` from
/// all of them; otherwise NearPoleError.
Complex closed_form_K(Complex z, double exclusion_radius = 1e-3);

/// Closed form of K_i:
///   (-1)^i e^{-1} (Gamma(1-i,-1) - (-1)^z Gamma(1-i-z,-1) Gamma(i+z)/(i-1)!).
Complex closed_form_Ki(FamilyIndex i, Complex z, double exclusion_radius = 1e-3);

/// K(z) with method dispatch. Poles are errors: PoleError exactly at a pole,
/// NearPoleError inside `near_pole_radius`.
///
/// Automatic routing:
///   - within 0.1 of the removable point -2: Cauchy interpolation on a circle
///     (taylor_patch),
///   - 0 < Re z <= 30: quadrature,
///   - Re z > 30: recurrence shift onto the base strip 0 < Re z <= 1,
///   - otherwise the closed form.
KurepaResult K(Complex z, const EvalConfig& cfg = {});

/// K_i(z) = (K(z+i-1) - !(i-1)) / (i-1)!, except for Method::closed_form
/// which evaluates closed_form_Ki directly. Errors report locations in z.
KurepaResult Ki(FamilyIndex i, Complex z, const EvalConfig& cfg = {});

/// All poles of K_i at locations >= -limit, in decreasing location order.
/// Throws DomainError when limit < 1.
std::vector<PoleInfo> pole_catalog(FamilyIndex i, std::int64_t limit);

/// True when `location` is a pole of K_i.
bool is_pole(FamilyIndex i, std::int64_t location);

/// Trapezoidal Cauchy estimate of the residue of K_i at `location`, from 16
/// points on the circle of the given radius (in [1e-4, 0.4]).
Complex residue_numeric(FamilyIndex i, std::int64_t location, double radius,
                        const EvalConfig& cfg = {});

/// Mean of K_i over `points` equally spaced points on a circle. For a circle
/// enclosing no pole this is the value at the center.
Complex circle_mean(FamilyIndex i, Complex center, double radius, int points,
                    const EvalConfig& cfg = {});

/// |(i-1)! (K_i(z+1) - K_i(z)) - Gamma(z+i)| / (1 + |Gamma(z+i)|).
double recurrence_residual(FamilyIndex i, Complex z, const EvalConfig& cfg = {});

/// (i-1)! as a double. Throws DomainError when it overflows.
double factorial_double(long n);

}  // namespace kurepa
