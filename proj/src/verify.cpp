#include "kurepa/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>

#include "kurepa/kurepa.hpp"
#include "kurepa/special_functions.hpp"

namespace kurepa::verify {

namespace {

constexpr double kFailedResidual = std::numeric_limits<double>::max();

CheckReport make_report(std::string name, std::int64_t samples, double max_residual,
                        double tolerance) {
  if (!std::isfinite(max_residual)) max_residual = kFailedResidual;
  return {std::move(name), samples, max_residual, tolerance, max_residual <= tolerance};
}

// Distance from z to the nearest non-positive integer.
double distance_to_gamma_poles(Complex z) {
  const double n = std::min(0.0, std::round(z.real()));
  return std::abs(z - n);
}

// Distance from z to the nearest point of {-i, -i-1, -i-2, ...}: poles of K_i
// together with its removable point.
double distance_to_singular_set(long i, Complex z) {
  const double n = std::min(static_cast<double>(-i), std::round(z.real()));
  return std::abs(z - n);
}

Complex draw(Lcg64& rng, double re_lo, double re_hi, double im_lo, double im_hi) {
  const double re = rng.uniform(re_lo, re_hi);
  const double im = rng.uniform(im_lo, im_hi);
  return {re, im};
}

// Uniform on (0, hi].
double open_closed(Lcg64& rng, double hi) { return hi * (1.0 - rng.uniform()); }

double abs_rel(Complex value, Complex reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

using Check = std::function<CheckReport(Lcg64&)>;

struct NamedCheck {
  std::string name;
  Check run;
};

CheckReport gamma_recurrence(Lcg64& rng) {
  double worst = 0.0;
  int samples = 0;
  while (samples < 200) {
    const Complex z = draw(rng, -10.0, 10.0, -10.0, 10.0);
    if (distance_to_gamma_poles(z) < 0.05) continue;
    worst = std::max(worst, std::abs(sf::gamma(z + 1.0) / (z * sf::gamma(z)) - 1.0));
    ++samples;
  }
  return make_report("special_functions.gamma_recurrence", samples, worst, 1e-10);
}

CheckReport gamma_conjugate_symmetry(Lcg64& rng) {
  double worst = 0.0;
  int samples = 0;
  while (samples < 200) {
    const Complex z = draw(rng, -10.0, 10.0, -10.0, 10.0);
    if (distance_to_gamma_poles(z) < 0.05) continue;
    worst = std::max(worst, abs_rel(sf::gamma(std::conj(z)), std::conj(sf::gamma(z))));
    ++samples;
  }
  return make_report("special_functions.gamma_conjugate_symmetry", samples, worst, 1e-12);
}

CheckReport ln_gamma_consistency(Lcg64& rng) {
  double worst = 0.0;
  int samples = 0;
  while (samples < 200) {
    const Complex z = draw(rng, -10.0, 20.0, -10.0, 10.0);
    if (distance_to_gamma_poles(z) < 0.05) continue;
    worst = std::max(worst, abs_rel(std::exp(sf::ln_gamma(z)), sf::gamma(z)));
    ++samples;
  }
  return make_report("special_functions.ln_gamma_exp_consistency", samples, worst, 1e-10);
}

CheckReport upper_gamma_recurrence(Lcg64& rng) {
  double worst = 0.0;
  int samples = 0;
  while (samples < 200) {
    const Complex a = draw(rng, -20.0, 20.0, -20.0, 20.0);
    if (std::abs(a) > 20.0) continue;
    const Complex next = sf::upper_gamma_at_minus_one(a + 1.0);
    const Complex step = a * sf::upper_gamma_at_minus_one(a) + sf::minus_one_power(a) * std::numbers::e;
    worst = std::max(worst, std::abs(next - step) / (1.0 + std::abs(next)));
    ++samples;
  }
  return make_report("special_functions.upper_gamma_recurrence", samples, worst, 1e-9);
}

CheckReport upper_gamma_entire(Lcg64&) {
  double worst = 0.0;
  int samples = 0;
  for (int k = 0; k < 10; ++k, ++samples) {
    const Complex a = -static_cast<double>(k);
    worst = std::max(worst, std::abs(sf::upper_gamma_at_minus_one(a) -
                                     sf::upper_gamma_at_minus_one(a + 1e-6)));
  }
  return make_report("special_functions.upper_gamma_entire", samples, worst, 1e-4);
}

CheckReport upper_gamma_values(Lcg64&) {
  const double e = std::numbers::e;
  const Complex ei_branch = sf::ei_one() + Complex(0.0, std::numbers::pi);
  const double worst = std::max({
      std::abs(sf::upper_gamma_at_minus_one(1.0) - e),
      std::abs(sf::upper_gamma_at_minus_one(2.0)),
      std::abs(sf::upper_gamma_at_minus_one(3.0) - e),
      std::abs(ei_branch + sf::upper_gamma_at_minus_one(0.0)),
  });
  return make_report("special_functions.upper_gamma_values", 4, worst, 1e-12);
}

CheckReport integer_agreement(Lcg64&) {
  EvalConfig cfg;
  cfg.method = Method::quadrature;
  double worst = 0.0;
  for (unsigned n = 1; n <= 10; ++n) {
    const double exact = left_factorial(n).convert_to<double>();
    worst = std::max(worst, abs_rel(K(static_cast<double>(n), cfg).value, exact));
  }
  return make_report("kurepa.integer_agreement", 10, worst, 1e-9);
}

CheckReport zero_at_origin(Lcg64&) {
  return make_report("kurepa.zero_at_origin", 1, std::abs(K(0.0).value), 1e-12);
}

CheckReport family_collapse(Lcg64& rng) {
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    const Complex z{open_closed(rng, 10.0), rng.uniform(-5.0, 5.0)};
    const Complex k = K(z).value;
    worst = std::max(worst, std::abs(Ki(FamilyIndex(1), z).value - k) / (1.0 + std::abs(k)));
  }
  return make_report("kurepa.family_collapse", 100, worst, 1e-10);
}

Check recurrence_check(long i) {
  return [i](Lcg64& rng) {
    const FamilyIndex idx(i);
    double worst = 0.0;
    int samples = 0;
    while (samples < 50) {
      const Complex z = draw(rng, -0.5, 5.0, -5.0, 5.0);
      if (distance_to_singular_set(i, z) < 0.15 || distance_to_singular_set(i, z + 1.0) < 0.15)
        continue;
      worst = std::max(worst, recurrence_residual(idx, z));
      ++samples;
    }
    return make_report("kurepa.recurrence_i" + std::to_string(i), samples, worst, 1e-8);
  };
}

CheckReport conjugate_symmetry(Lcg64& rng) {
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const Complex z{open_closed(rng, 5.0), rng.uniform(-5.0, 5.0)};
    for (Method m : {Method::quadrature, Method::closed_form}) {
      EvalConfig cfg;
      cfg.method = m;
      worst = std::max(worst, abs_rel(K(std::conj(z), cfg).value, std::conj(K(z, cfg).value)));
    }
  }
  return make_report("kurepa.conjugate_symmetry", 50, worst, 1e-9);
}

CheckReport residues(Lcg64&) {
  double worst = 0.0;
  int samples = 0;
  for (long i = 1; i <= 3; ++i) {
    const FamilyIndex idx(i);
    for (const PoleInfo& p : pole_catalog(idx, 8)) {
      worst = std::max(worst, std::abs(residue_numeric(idx, p.location, 1e-2) - p.residue_float));
      ++samples;
    }
  }
  return make_report("kurepa.residues", samples, worst, 1e-5);
}

CheckReport residue_transfer(Lcg64&) {
  int samples = 0;
  int mismatches = 0;
  const auto k_poles = pole_catalog(FamilyIndex(1), 5);
  auto residue_at = [](const std::vector<PoleInfo>& poles, std::int64_t location) {
    for (const auto& p : poles)
      if (p.location == location) return p.residue_exact;
    throw DomainError("no pole at " + std::to_string(location));
  };
  for (long i = 1; i <= 4; ++i) {
    const auto poles = pole_catalog(FamilyIndex(i), i + 4);
    const Rational scale(factorial(static_cast<unsigned long>(i - 1)));
    for (long m : {0L, 2L, 3L, 4L}) {
      ++samples;
      if (residue_at(poles, -(i + m)) * scale != residue_at(k_poles, -(m + 1))) ++mismatches;
    }
  }
  return make_report("kurepa.residue_transfer", samples, mismatches, 0.0);
}

CheckReport route_agreement(Lcg64& rng) {
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    const Complex z{open_closed(rng, 5.0), rng.uniform(-5.0, 5.0)};
    std::array<Complex, 3> values;
    const std::array<Method, 3> methods = {Method::quadrature, Method::closed_form,
                                           Method::recurrence_shift};
    for (std::size_t m = 0; m < methods.size(); ++m) {
      EvalConfig cfg;
      cfg.method = methods[m];
      values[m] = K(z, cfg).value;
    }
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        worst = std::max(worst, relative_difference(values[a], values[b]));
  }
  return make_report("kurepa.route_agreement", 100, worst, 10.0 * EvalConfig{}.rel_tol);
}

CheckReport removable_point(Lcg64&) {
  double worst = 0.0;
  EvalConfig direct;
  direct.method = Method::closed_form;
  for (long i = 1; i <= 10; ++i) {
    const FamilyIndex idx(i);
    const Complex center = -static_cast<double>(i + 1);
    const Complex wide = circle_mean(idx, center, 0.05, 16, direct);
    const Complex narrow = circle_mean(idx, center, 0.025, 16, direct);
    const Complex patched = Ki(idx, center).value;
    worst = std::max({worst, std::abs(wide - narrow), std::abs(wide - patched)});
  }
  return make_report("kurepa.removable_point", 10, worst, 1e-7);
}

CheckReport positive_axis_reality(Lcg64& rng) {
  double worst = 0.0;
  EvalConfig cfg;
  cfg.method = Method::closed_form;
  for (int s = 0; s < 50; ++s) {
    const Complex k = K(open_closed(rng, 20.0), cfg).value;
    worst = std::max(worst, std::abs(k.imag()) / (1.0 + std::abs(k)));
  }
  return make_report("kurepa.positive_axis_reality", 50, worst, 1e-9);
}

std::vector<double> asymptotic_grid() {
  std::vector<double> xs;
  for (int x = 10; x <= 60; x += 5) xs.push_back(x);
  return xs;
}

std::vector<Complex> equivalence_sample(long i, Lcg64& rng) {
  std::vector<Complex> sample;
  while (sample.size() < 20) {
    const Complex z = draw(rng, -static_cast<double>(i) - 3.5, 5.0, -3.0, 3.0);
    if (distance_to_singular_set(i, z) < 0.15) continue;
    sample.push_back(z);
  }
  return sample;
}

std::vector<NamedCheck> all_checks() {
  std::vector<NamedCheck> checks = {
      {"gamma_recurrence", gamma_recurrence},
      {"gamma_conjugate_symmetry", gamma_conjugate_symmetry},
      {"ln_gamma_consistency", ln_gamma_consistency},
      {"upper_gamma_recurrence", upper_gamma_recurrence},
      {"upper_gamma_entire", upper_gamma_entire},
      {"upper_gamma_values", upper_gamma_values},
      {"integer_agreement", integer_agreement},
      {"zero_at_origin", zero_at_origin},
      {"family_collapse", family_collapse},
  };
  for (long i : {1L, 2L, 3L, 5L}) checks.push_back({"recurrence", recurrence_check(i)});
  checks.push_back({"conjugate_symmetry", conjugate_symmetry});
  checks.push_back({"residues", residues});
  checks.push_back({"residue_transfer", residue_transfer});
  checks.push_back({"route_agreement", route_agreement});
  checks.push_back({"removable_point", removable_point});
  checks.push_back({"positive_axis_reality", positive_axis_reality});
  for (long i : {1L, 2L}) {
    checks.push_back({"asymptotic_ratio", [i](Lcg64&) {
                        const auto xs = asymptotic_grid();
                        return check_asymptotic_ratio(FamilyIndex(i), xs);
                      }});
  }
  for (long i : {1L, 2L}) {
    checks.push_back({"asymptotic_null", [i](Lcg64&) {
                        const auto xs = asymptotic_grid();
                        return check_asymptotic_null(FamilyIndex(i), xs);
                      }});
  }
  for (long i : {1L, 2L, 3L}) {
    checks.push_back({"shift_closed_form", [i](Lcg64& rng) {
                        return check_shift_closed_form_equivalence(FamilyIndex(i),
                                                          equivalence_sample(i, rng));
                      }});
  }
  return checks;
}

}  // namespace

double relative_difference(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

CheckReport check_asymptotic_ratio(FamilyIndex i, std::span<const double> x_values,
                                   const EvalConfig& cfg) {
  const long idx = i.value();
  const double fact = factorial_double(idx - 1);
  double worst = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (double x : x_values) {
    if (!(x > 1.0 - static_cast<double>(idx)) || x > 60.0)
      throw DomainError("asymptotic ratio: x must lie in (1 - i, 60]");
    const double shifted = x + static_cast<double>(idx) - 2.0;
    if (!(shifted > 0.0)) throw DomainError("asymptotic ratio: bound needs x + i > 2");
    const double bound = 2.0 / shifted;
    const double r =
        (fact * Ki(i, x, cfg).value / sf::gamma(x + static_cast<double>(idx) - 1.0)).real();
    const double gap = std::abs(r - 1.0);
    worst = std::max(worst, gap / bound);
    if (gap > previous) worst = std::max(worst, 1.0 + (gap - previous) / bound);
    previous = gap;
  }
  return make_report("verify.asymptotic_ratio_i" + std::to_string(idx),
                     static_cast<std::int64_t>(x_values.size()), worst, 1.0);
}

CheckReport check_asymptotic_null(FamilyIndex i, std::span<const double> x_values,
                                  const EvalConfig& cfg) {
  const long idx = i.value();
  double worst = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (double x : x_values) {
    if (!(x > 1.0 - static_cast<double>(idx)) || x > 60.0)
      throw DomainError("asymptotic null: x must lie in (1 - i, 60]");
    const double bound = 2.0 / (x + static_cast<double>(idx) - 1.0);
    const double q = (Ki(i, x, cfg).value / sf::gamma(x + static_cast<double>(idx))).real();
    if (!(q > 0.0)) worst = std::max(worst, 1.0 + std::abs(q) / bound);
    worst = std::max(worst, q / bound);
    if (q > previous) worst = std::max(worst, 1.0 + (q - previous) / bound);
    previous = q;
  }
  return make_report("verify.asymptotic_null_i" + std::to_string(idx),
                     static_cast<std::int64_t>(x_values.size()), worst, 1.0);
}

CheckReport check_shift_closed_form_equivalence(FamilyIndex i, std::span<const Complex> sample,
                                       const EvalConfig& cfg) {
  EvalConfig shifted = cfg;
  shifted.method = Method::automatic;
  EvalConfig direct = cfg;
  direct.method = Method::closed_form;
  double worst = 0.0;
  for (const Complex& z : sample) {
    worst = std::max(worst, relative_difference(Ki(i, z, shifted).value, Ki(i, z, direct).value));
  }
  return make_report("verify.shift_closed_form_i" + std::to_string(i.value()),
                     static_cast<std::int64_t>(sample.size()), worst, 1e-8);
}

std::vector<CheckReport> run_all(std::uint64_t seed) {
  const auto checks = all_checks();
  std::vector<std::future<CheckReport>> pending;
  pending.reserve(checks.size());
  for (std::size_t k = 0; k < checks.size(); ++k) {
    // Each check draws from its own stream so results do not depend on
    // scheduling.
    const std::uint64_t stream = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
    pending.push_back(std::async(std::launch::async, [&check = checks[k], stream] {
      Lcg64 rng(stream);
      try {
        return check.run(rng);
      } catch (const std::exception& e) {
        return make_report(check.name + " (error: " + e.what() + ")", 0, kFailedResidual, 0.0);
      }
    }));
  }
  std::vector<CheckReport> reports;
  reports.reserve(pending.size());
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

bool all_passed(std::span<const CheckReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace kurepa::verify
