// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace fidbound {

// Reentrant log|Gamma(x)|; std::lgamma may write the global signgam.
double log_gamma(double x);

double log_factorial(std::int64_t n);

/// log C(m, n) for 0 <= n <= m.
double log_choose(std::int64_t m, std::int64_t n);

}  // namespace fidbound
