#include "kurepa/kurepa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kurepa/quadrature.hpp"
#include "kurepa/special_functions.hpp"

namespace kurepa {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kExactPole = 1e-12;
// Auto routing: disc around the removable point handled by circle interpolation.
constexpr double kRemovableDisc = 0.1;
constexpr double kQuadratureCeiling = 30.0;
constexpr int kLargeShift = 100;
constexpr std::int64_t kRemovablePoint = -2;

const double kE = std::numbers::e;

struct Nearest {
  std::int64_t location;
  double distance;
};

// Nearest integer <= `ceiling` to z.
Nearest nearest_integer_at_most(Complex z, std::int64_t ceiling) {
  const double r = std::round(z.real());
  std::int64_t n = r >= static_cast<double>(ceiling) ? ceiling : static_cast<std::int64_t>(r);
  return {n, std::abs(z - static_cast<double>(n))};
}

void require_finite(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("argument must be finite");
}

// Poles of K are the negative integers except -2.
void check_K_poles(Complex z, double radius) {
  const auto [n, dist] = nearest_integer_at_most(z, -1);
  if (n == kRemovablePoint) return;
  if (dist < kExactPole) throw PoleError(n);
  if (dist < radius) throw NearPoleError(n, dist);
}

// Every negative integer (the formula's singular set).
void check_formula_singularities(Complex z, std::int64_t first, double radius,
                                 bool removable_is_pole_free, std::int64_t removable) {
  const auto [n, dist] = nearest_integer_at_most(z, first);
  if (dist < kExactPole && !(removable_is_pole_free && n == removable)) throw PoleError(n);
  if (dist < radius) throw NearPoleError(n, dist);
}

bool near_pole_of_K(Complex z) {
  const auto [n, dist] = nearest_integer_at_most(z, -1);
  return n != kRemovablePoint && dist < kRemovableDisc;
}

bool near_removable_of_K(Complex z) {
  const auto [n, dist] = nearest_integer_at_most(z, -1);
  return n == kRemovablePoint && dist <= kRemovableDisc;
}

QuadratureConfig quad_config(const EvalConfig& cfg) {
  QuadratureConfig q = cfg.quad;
  q.rel_tol = std::min(q.rel_tol, cfg.rel_tol);
  return q;
}

KurepaResult closed_form_result(Complex z, double radius) {
  KurepaResult r;
  r.value = closed_form_K(z, radius);
  r.method = Method::closed_form;
  const Complex second = r.value - (sf::ei_one() + Complex(0.0, std::numbers::pi)) / kE;
  double error = 64.0 * kEps * (std::abs(second) + 2.0);
  if (near_removable_of_K(z)) {
    const double dist = std::abs(z - static_cast<double>(kRemovablePoint));
    error /= std::max(dist, kEps);
    r.add_warning(Warning::cancellation);
  }
  r.est_abs_error = error;
  return r;
}

// Value at z of the function sampled on a circle around `center`, by the
// trapezoidal Cauchy integral formula; z must lie inside the circle.
Complex cauchy_interpolate(Complex center, double radius, int nodes, Complex z, double exclusion) {
  Complex acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const Complex offset = std::polar(radius, 2.0 * std::numbers::pi * (j + 0.5) / nodes);
    const Complex w = center + offset;
    acc += closed_form_K(w, exclusion) * offset / (w - z);
  }
  return acc / static_cast<double>(nodes);
}

// K near the removable point -2, where every direct formula is an
// indeterminate form. K is analytic in the disc |z + 2| < 1, so its value is
// recovered from circles that keep well away from both -2 and the poles.
KurepaResult taylor_patch(Complex z, double exclusion) {
  constexpr int nodes = 64;
  const Complex center = static_cast<double>(kRemovablePoint);
  const Complex coarse = cauchy_interpolate(center, 0.25, nodes, z, exclusion);
  const Complex fine = cauchy_interpolate(center, 0.2, nodes, z, exclusion);
  KurepaResult r;
  r.value = coarse;
  r.method = Method::taylor_patch;
  const double spread = std::abs(coarse - fine);
  r.est_abs_error = spread + 64.0 * kEps * (1.0 + std::abs(coarse));
  if (spread > 1e-7) r.add_warning(Warning::cancellation);
  return r;
}

KurepaResult recurrence_shift(Complex z, const EvalConfig& cfg) {
  const double sigma = z.real();
  const QuadratureConfig qcfg = quad_config(cfg);
  KurepaResult r;
  std::int64_t shifts = 0;

  if (sigma > 1.0) {
    // K(z) = K(z0) + sum_{j=1}^{n} Gamma(z0 + j), with 0 < Re z0 <= 1.
    shifts = static_cast<std::int64_t>(std::ceil(sigma)) - 1;
    Complex z0 = z - static_cast<double>(shifts);
    while (z0.real() > 1.0) z0 = z - static_cast<double>(++shifts);
    while (z0.real() <= 0.0) z0 = z - static_cast<double>(--shifts);
    const KurepaResult base = quad::integrate_K(z0, qcfg);

    // Sum the gamma terms relative to the largest so that intermediate
    // powers never overflow before the final scaling.
    std::vector<Complex> logs;
    logs.reserve(static_cast<std::size_t>(shifts));
    double peak = -std::numeric_limits<double>::infinity();
    for (std::int64_t j = 1; j <= shifts; ++j) {
      logs.push_back(sf::ln_gamma(z0 + static_cast<double>(j)));
      peak = std::max(peak, logs.back().real());
    }
    Complex scaled = 0.0;
    double scaled_error = 0.0;
    for (const Complex& l : logs) {
      const Complex term = std::exp(l - peak);
      scaled += term;
      scaled_error += std::abs(term) * (8.0 + std::abs(l));
    }
    if (peak > std::log(std::numeric_limits<double>::max()) - 1.0)
      throw DomainError("K(z) is not representable in double precision");
    const double scale = std::exp(peak);
    r.value = base.value + scale * scaled;
    r.est_abs_error = base.est_abs_error + kEps * scale * scaled_error;
  } else if (sigma <= 0.0) {
    // K(z) = K(z + n) - sum_{j=1}^{n} Gamma(z + j).
    check_formula_singularities(z, -1, cfg.near_pole_radius, true, kRemovablePoint);
    shifts = static_cast<std::int64_t>(std::floor(-sigma)) + 1;
    const Complex z0 = z + static_cast<double>(shifts);
    const KurepaResult base = quad::integrate_K(z0, qcfg);
    Complex sum = 0.0;
    double magnitude = 0.0;
    for (std::int64_t j = 1; j <= shifts; ++j) {
      const Complex g = sf::gamma(z + static_cast<double>(j));
      sum += g;
      magnitude += std::abs(g);
    }
    r.value = base.value - sum;
    r.est_abs_error = base.est_abs_error + 64.0 * kEps * magnitude;
    if (near_removable_of_K(z)) r.add_warning(Warning::cancellation);
  } else {
    r = quad::integrate_K(z, qcfg);
  }
  r.method = Method::recurrence_shift;
  if (shifts > kLargeShift) r.add_warning(Warning::large_shift);
  return r;
}

// Rethrows pole errors raised for K(z + shift) in the coordinates of K_i.
template <typename F>
KurepaResult translate_poles(std::int64_t shift, F&& evaluate) {
  try {
    return evaluate();
  } catch (const PoleError& e) {
    throw PoleError(e.location() - shift);
  } catch (const NearPoleError& e) {
    throw NearPoleError(e.location() - shift, e.distance());
  }
}

}  // namespace

double factorial_double(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  if (n > 170) throw DomainError("factorial overflows double precision");
  double f = 1.0;
  for (long k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

BigInt left_factorial(unsigned long n) {
  BigInt sum = 0;
  BigInt fact = 1;
  for (unsigned long k = 0; k < n; ++k) {
    if (k > 0) fact *= k;
    sum += fact;
  }
  return sum;
}

Complex closed_form_K(Complex z, double exclusion_radius) {
  require_finite(z);
  check_formula_singularities(z, -1, exclusion_radius, true, kRemovablePoint);
  const Complex constant = (sf::ei_one() + Complex(0.0, std::numbers::pi)) / kE;
  return constant +
         sf::minus_one_power(z) * sf::gamma(1.0 + z) * sf::upper_gamma_at_minus_one(-z) / kE;
}

Complex closed_form_Ki(FamilyIndex i, Complex z, double exclusion_radius) {
  require_finite(z);
  const long idx = i.value();
  check_formula_singularities(z, -idx, exclusion_radius, true, -(idx + 1));
  const double sign = idx % 2 == 0 ? 1.0 : -1.0;
  const double fact = factorial_double(idx - 1);
  const Complex head = sf::upper_gamma_at_minus_one(Complex(1.0 - static_cast<double>(idx)));
  const Complex tail = sf::minus_one_power(z) *
                       sf::upper_gamma_at_minus_one(1.0 - static_cast<double>(idx) - z) *
                       sf::gamma(static_cast<double>(idx) + z) / fact;
  return sign / kE * (head - tail);
}

KurepaResult K(Complex z, const EvalConfig& cfg) {
  cfg.validate();
  require_finite(z);
  check_K_poles(z, cfg.near_pole_radius);

  KurepaResult r;
  switch (cfg.method) {
    case Method::automatic:
      if (near_removable_of_K(z)) {
        r = taylor_patch(z, cfg.near_pole_radius);
      } else if (z.real() > kQuadratureCeiling) {
        r = recurrence_shift(z, cfg);
      } else if (z.real() > 0.0) {
        r = quad::integrate_K(z, quad_config(cfg));
      } else {
        r = closed_form_result(z, cfg.near_pole_radius);
      }
      break;
    case Method::quadrature:
      r = quad::integrate_K(z, quad_config(cfg));
      break;
    case Method::closed_form:
      r = closed_form_result(z, cfg.near_pole_radius);
      break;
    case Method::recurrence_shift:
      r = recurrence_shift(z, cfg);
      break;
    case Method::taylor_patch:
      if (!near_removable_of_K(z))
        throw DomainError("taylor_patch applies only within 0.1 of z = -2");
      r = taylor_patch(z, cfg.near_pole_radius);
      break;
  }
  if (near_pole_of_K(z)) r.add_warning(Warning::near_pole);
  return r;
}

KurepaResult Ki(FamilyIndex i, Complex z, const EvalConfig& cfg) {
  cfg.validate();
  require_finite(z);
  const long idx = i.value();
  const std::int64_t shift = idx - 1;
  const double fact = factorial_double(idx - 1);

  if (cfg.method == Method::closed_form) {
    const Complex w = z + static_cast<double>(shift);
    // Same exclusion zones as K(z + i - 1), reported in z.
    translate_poles(shift, [&] {
      check_K_poles(w, cfg.near_pole_radius);
      return KurepaResult{};
    });
    KurepaResult r;
    r.value = closed_form_Ki(i, z, cfg.near_pole_radius);
    r.method = Method::closed_form;
    r.est_abs_error = 64.0 * kEps * (std::abs(r.value) + 2.0 / fact);
    if (near_removable_of_K(w)) {
      r.est_abs_error /= std::max(std::abs(w + 2.0), kEps);
      r.add_warning(Warning::cancellation);
    }
    if (near_pole_of_K(w)) r.add_warning(Warning::near_pole);
    return r;
  }

  KurepaResult r = translate_poles(shift, [&] { return K(z + static_cast<double>(shift), cfg); });
  if (idx == 1) return r;
  const double base = left_factorial(static_cast<unsigned long>(shift)).convert_to<double>();
  r.value = (r.value - base) / fact;
  r.est_abs_error = (r.est_abs_error + kEps * base) / fact;
  return r;
}

bool is_pole(FamilyIndex i, std::int64_t location) {
  const std::int64_t idx = i.value();
  return location == -idx || location <= -(idx + 2);
}

std::vector<PoleInfo> pole_catalog(FamilyIndex i, std::int64_t limit) {
  if (limit < 1) throw DomainError("pole_catalog: limit must be >= 1");
  const long idx = i.value();
  const BigInt scale = factorial(static_cast<unsigned long>(idx - 1));
  std::vector<PoleInfo> poles;

  // Partial sums of (-1)^{k-1}/k! for k = 2..m, built incrementally.
  Rational partial;
  BigInt k_fact = 1;
  std::int64_t m = 1;
  for (std::int64_t location = -1; location >= -limit; --location) {
    if (!is_pole(i, location)) continue;
    PoleInfo p;
    p.location = location;
    if (location == -idx) {
      p.residue_exact = Rational(-1, scale);
    } else {
      const std::int64_t target = -location - idx;
      while (m < target) {
        ++m;
        k_fact *= m;
        partial = partial + Rational(m % 2 == 0 ? -1 : 1, k_fact);
      }
      p.residue_exact = partial / Rational(scale);
    }
    p.residue_float = p.residue_exact.to_double();
    poles.push_back(std::move(p));
  }
  return poles;
}

Complex residue_numeric(FamilyIndex i, std::int64_t location, double radius,
                        const EvalConfig& cfg) {
  if (!is_pole(i, location))
    throw DomainError("z = " + std::to_string(location) + " is not a pole of K_" +
                      std::to_string(i.value()));
  if (!(radius >= 1e-4 && radius <= 0.4))
    throw DomainError("residue radius must lie in [1e-4, 0.4]");
  EvalConfig local = cfg;
  local.near_pole_radius = std::min(cfg.near_pole_radius, 0.5 * radius);
  constexpr int nodes = 16;
  const Complex center = static_cast<double>(location);
  Complex acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const Complex offset = std::polar(radius, 2.0 * std::numbers::pi * j / nodes);
    acc += offset * Ki(i, center + offset, local).value;
  }
  return acc / static_cast<double>(nodes);
}

Complex circle_mean(FamilyIndex i, Complex center, double radius, int points,
                    const EvalConfig& cfg) {
  if (points < 1) throw DomainError("circle_mean: need at least one point");
  if (!(radius > 0.0)) throw DomainError("circle_mean: radius must be positive");
  Complex acc = 0.0;
  for (int j = 0; j < points; ++j) {
    acc += Ki(i, center + std::polar(radius, 2.0 * std::numbers::pi * j / points), cfg).value;
  }
  return acc / static_cast<double>(points);
}

double recurrence_residual(FamilyIndex i, Complex z, const EvalConfig& cfg) {
  const Complex shifted = z + static_cast<double>(i.value());
  const auto [n, dist] = nearest_integer_at_most(shifted, 0);
  if (dist < kExactPole)
    throw DomainError("recurrence_residual: z + i is a non-positive integer");
  const Complex g = sf::gamma(shifted);
  const Complex next = Ki(i, z + 1.0, cfg).value;
  const Complex here = Ki(i, z, cfg).value;
  const double fact = factorial_double(i.value() - 1);
  return std::abs(fact * (next - here) - g) / (1.0 + std::abs(g));
}

}  // namespace kurepa
