#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

namespace kurepa {

using Complex = std::complex<double>;

/// Discretization policy for the defining integral.
struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  /// Upper integration limit; chosen from the argument when unset.
  std::optional<double> tail_cutoff;
  int max_subdivisions = 2000;

  /// Throws DomainError when a field violates its invariant.
  void validate() const;
};

enum class Method { automatic, quadrature, closed_form, recurrence_shift, taylor_patch };

enum class Warning { near_pole, large_shift, cancellation };

std::string_view to_string(Method m) noexcept;
std::string_view to_string(Warning w) noexcept;

struct EvalConfig {
  Method method = Method::automatic;
  double rel_tol = 1e-10;
  double near_pole_radius = 1e-3;
  QuadratureConfig quad;

  void validate() const;
};

struct KurepaResult {
  Complex value;
  Method method = Method::automatic;
  double est_abs_error = 0.0;
  std::vector<Warning> warnings;

  bool has_warning(Warning w) const noexcept;
  void add_warning(Warning w);
};

/// Index i >= 1 of the generalized family K_i.
class FamilyIndex {
 public:
  /// Throws DomainError for i < 1.
  explicit FamilyIndex(long i);
  long value() const noexcept { return i_; }

 private:
  long i_;
};

}  // namespace kurepa
