#include "kurepa/types.hpp"

#include <algorithm>
#include <cmath>

#include "kurepa/errors.hpp"

namespace kurepa {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("quadrature tolerances must be positive");
  if (tail_cutoff && !(*tail_cutoff > 2.0)) throw DomainError("tail cutoff must exceed 2");
  if (max_subdivisions < 10) throw DomainError("max_subdivisions must be at least 10");
}

void EvalConfig::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
  if (!(near_pole_radius > 0.0 && near_pole_radius <= 0.1))
    throw DomainError("near_pole_radius must lie in (0, 0.1]");
  quad.validate();
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::quadrature: return "quadrature";
    case Method::closed_form: return "closed_form";
    case Method::recurrence_shift: return "recurrence_shift";
    case Method::taylor_patch: return "taylor_patch";
  }
  return "unknown";
}

std::string_view to_string(Warning w) noexcept {
  switch (w) {
    case Warning::near_pole: return "near_pole";
    case Warning::large_shift: return "large_shift";
    case Warning::cancellation: return "cancellation";
  }
  return "unknown";
}

bool KurepaResult::has_warning(Warning w) const noexcept {
  return std::find(warnings.begin(), warnings.end(), w) != warnings.end();
}

void KurepaResult::add_warning(Warning w) {
  if (!has_warning(w)) warnings.push_back(w);
}

FamilyIndex::FamilyIndex(long i) : i_(i) {
  if (i < 1) throw DomainError("family index must be >= 1, got " + std::to_string(i));
}

}  // namespace kurepa
