// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "fidbound/special.hpp"

#include <cmath>

#include "fidbound/error.hpp"

namespace fidbound {

double log_gamma(double x) {
#if defined(__GLIBC__) || defined(__APPLE__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double log_factorial(std::int64_t n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  return log_gamma(static_cast<double>(n) + 1.0);
}

double log_choose(std::int64_t m, std::int64_t n) {
  if (n < 0 || n > m) throw DomainError("log_choose: need 0 <= n <= m");
  if (n == 0 || n == m) return 0.0;
  return log_factorial(m) - log_factorial(n) - log_factorial(m - n);
}

}  // namespace fidbound
