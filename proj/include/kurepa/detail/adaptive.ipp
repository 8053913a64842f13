// Implementation of kurepa::quad::integrate_adaptive. Included from quadrature.hpp.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "kurepa/errors.hpp"

namespace kurepa::quad {

namespace detail {

// Kronrod 15 / Gauss 7 nodes and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  Complex value;
  double error;
};

template <typename F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(center);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  double abs_sum = std::abs(fc) * kWgk[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex f1 = f(center - dx);
    const Complex f2 = f(center + dx);
    kronrod += (f1 + f2) * kWgk[j];
    abs_sum += (std::abs(f1) + std::abs(f2)) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  const double width = std::abs(half);
  // Roundoff floor: the rule cannot resolve below a few ulps of sum |f|.
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * width;
  const double err = std::max(std::abs(kronrod - gauss) * width, roundoff);
  return Panel{a, b, kronrod * half, err};
}

}  // namespace detail

template <typename F>
IntegralEstimate integrate_adaptive(F&& f, std::span<const double> breakpoints, double rel_tol,
                                    double abs_tol, int max_panels) {
  if (breakpoints.size() < 2) throw DomainError("integrate_adaptive: need at least two breakpoints");
  std::vector<detail::Panel> panels;
  panels.reserve(static_cast<std::size_t>(max_panels) + 1);
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    if (!(breakpoints[k] < breakpoints[k + 1]))
      throw DomainError("integrate_adaptive: breakpoints must be strictly increasing");
    panels.push_back(detail::gauss_kronrod_15(f, breakpoints[k], breakpoints[k + 1]));
  }

  auto totals = [&panels] {
    Complex value = 0.0;
    double error = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };

  auto [value, error] = totals();
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (static_cast<int>(panels.size()) >= max_panels)
      throw ConvergenceError("adaptive quadrature: " + std::to_string(max_panels) +
                             " panels exhausted with error estimate " + std::to_string(error));
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const auto& x, const auto& y) { return x.error < y.error; });
    const double a = worst->a;
    const double b = worst->b;
    const double mid = 0.5 * (a + b);
    if (!(a < mid && mid < b))
      throw ConvergenceError("adaptive quadrature: panel width underflow near t = " +
                             std::to_string(a));
    *worst = detail::gauss_kronrod_15(f, a, mid);
    panels.insert(worst + 1, detail::gauss_kronrod_15(f, mid, b));
    std::tie(value, error) = totals();
  }
  return IntegralEstimate{value, error, static_cast<int>(panels.size())};
}

}  // namespace kurepa::quad
