#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kurepa/types.hpp"

namespace kurepa::grid {

inline constexpr std::int64_t max_points = 10'000'000;

struct GridSpec {
  double re_min = 0.0;
  double re_max = 0.0;
  std::int64_t re_steps = 1;
  double im_min = 0.0;
  double im_max = 0.0;
  std::int64_t im_steps = 1;

  void validate() const;
  std::int64_t size() const { return re_steps * im_steps; }
  /// Point with flat index `k` in row-major (im, re) order.
  Complex point(std::int64_t k) const;
};

/// Applies `evaluate` to every grid point on up to `threads` workers
/// (0 = hardware concurrency). Output order is row-major regardless of
/// scheduling.
template <typename T>
std::vector<T> map_points(const GridSpec& spec, unsigned threads,
                          const std::function<T(Complex)>& evaluate);

}  // namespace kurepa::grid

#include "kurepa/detail/grid.ipp"
