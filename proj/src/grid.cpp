#include "kurepa/grid.hpp"

#include <cmath>
#include <string>

#include "kurepa/errors.hpp"

namespace kurepa::grid {

void GridSpec::validate() const {
  for (double v : {re_min, re_max, im_min, im_max})
    if (!std::isfinite(v)) throw DomainError("grid bounds must be finite");
  if (re_min > re_max) throw DomainError("grid: re_min exceeds re_max");
  if (im_min > im_max) throw DomainError("grid: im_min exceeds im_max");
  if (re_steps < 1 || im_steps < 1) throw DomainError("grid: step counts must be >= 1");
  if (re_steps > max_points || im_steps > max_points || re_steps * im_steps > max_points)
    throw DomainError("grid: more than " + std::to_string(max_points) + " points");
}

namespace {

double axis_value(double lo, double hi, std::int64_t steps, std::int64_t k) {
  if (steps == 1) return lo;
  if (k == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

}  // namespace

Complex GridSpec::point(std::int64_t k) const {
  const std::int64_t row = k / re_steps;
  const std::int64_t col = k % re_steps;
  return {axis_value(re_min, re_max, re_steps, col), axis_value(im_min, im_max, im_steps, row)};
}

}  // namespace kurepa::grid
