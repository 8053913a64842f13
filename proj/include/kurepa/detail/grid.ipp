// Implementation of kurepa::grid::map_points. Included from grid.hpp.
#pragma once

#include <algorithm>
#include <atomic>
#include <thread>

namespace kurepa::grid {

template <typename T>
std::vector<T> map_points(const GridSpec& spec, unsigned threads,
                          const std::function<T(Complex)>& evaluate) {
  spec.validate();
  const auto n = static_cast<std::size_t>(spec.size());
  std::vector<T> out(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) out[k] = evaluate(spec.point(static_cast<std::int64_t>(k)));
  };
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  return out;
}

}  // namespace kurepa::grid
