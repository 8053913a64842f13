#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kurepa/types.hpp"

namespace kurepa::verify {

struct CheckReport {
  std::string name;
  std::int64_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// 64-bit linear congruential generator (Knuth MMIX constants). Every
/// platform draws the same sequence for the same seed.
class Lcg64 {
 public:
  static constexpr std::uint64_t multiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t increment = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * multiplier + increment;
    return state_;
  }
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// |a - b| / max(|a|, |b|); zero when both vanish.
double relative_difference(Complex a, Complex b);

/// r(x) = (i-1)! K_i(x) / Gamma(x+i-1) against the bound |r - 1| <= 2/(x+i-2)
/// plus monotone approach to 1. max_residual is the largest |r-1|/bound
/// (a monotonicity violation counts as 1 + relative increase); tolerance 1.
CheckReport check_asymptotic_ratio(FamilyIndex i, std::span<const double> x_values,
                                   const EvalConfig& cfg = {});

/// K_i(x) / Gamma(x+i): positive, decreasing and <= 2/(x+i-1). Same residual
/// convention as check_asymptotic_ratio.
CheckReport check_asymptotic_null(FamilyIndex i, std::span<const double> x_values,
                                  const EvalConfig& cfg = {});

/// Largest relative difference between the K-shift route and the direct
/// closed form of K_i; tolerance 1e-8.
CheckReport check_shift_closed_form_equivalence(FamilyIndex i, std::span<const Complex> sample,
                                       const EvalConfig& cfg = {});

/// Every property check, in a fixed order. Deterministic for a given seed.
std::vector<CheckReport> run_all(std::uint64_t seed);

bool all_passed(std::span<const CheckReport> reports);

}  // namespace kurepa::verify
