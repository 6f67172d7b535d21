// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace fidbound::testing {

/// Coherent amplitudes by the ratio recurrence c_{n+1} = c_n alpha/sqrt(n+1).
inline std::vector<double> coherent_by_recurrence(double alpha, std::size_t n_max) {
  std::vector<double> c(n_max + 1);
  c[0] = std::exp(-0.5 * alpha * alpha);
  for (std::size_t n = 0; n < n_max; ++n) c[n + 1] = c[n] * alpha / std::sqrt(static_cast<double>(n) + 1.0);
  return c;
}

/// Exact C(m, n) in integer arithmetic; valid while the result fits in 64 bits.
inline std::uint64_t exact_choose(std::uint64_t m, std::uint64_t n) {
  if (n > m - n) n = m - n;
  std::uint64_t r = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    // r * (m - n + k) is divisible by k at every step.
    const std::uint64_t g = std::gcd(r, k);
    r = (r / g) * ((m - n + k) / (k / g));
  }
  return r;
}

/// x in [lo, hi] with f(x) = target for a decreasing f.
inline double bisect_decreasing(const std::function<double(double)>& f, double target, double lo,
                                double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct GridMax {
  double x;
  double f;
};

/// Plain uniform-grid maximum; points where f returns NaN are skipped.
inline GridMax uniform_grid_max(const std::function<double(double)>& f, double lo, double hi,
                                std::size_t points) {
  GridMax best{lo, -INFINITY};
  for (std::size_t i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    const double v = f(x);
    if (!std::isnan(v) && v > best.f) best = {x, v};
  }
  return best;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedf1dULL);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace fidbound::testing
