// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "fidbound/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "fidbound/error.hpp"
#include "summation.hpp"

namespace fidbound {

std::size_t max_cutoff() {
  const char* raw = std::getenv("FIDBOUND_MAX_CUTOFF");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxCutoff;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (*end != '\0' || value <= 0) return kDefaultMaxCutoff;
  return static_cast<std::size_t>(value);
}

FockVector::FockVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("FockVector: no coefficients");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("FockVector: non-finite coefficient");
  }
  const double n2 = norm_sq();
  if (!(n2 >= 1.0 - kTailMass && n2 <= 1.0 + kTailMass)) {
    throw DomainError("FockVector: squared norm " + std::to_string(n2) +
                      " outside the tail-mass window");
  }
}

FockVector FockVector::number_state(std::size_t n) {
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  return FockVector(std::move(c));
}

double FockVector::norm_sq() const {
  detail::CompensatedSum sum;
  for (double c : coeffs_) sum.add(c * c);
  return sum.value();
}

double fidelity_fock(const FockVector& a, const FockVector& b) {
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  const std::size_t common = std::min(ca.size(), cb.size());
  detail::CompensatedSum overlap;
  for (std::size_t n = 0; n < common; ++n) overlap.add(ca[n] * cb[n]);
  const double amp = overlap.value();
  return std::clamp(amp * amp, 0.0, 1.0);
}

double mean_energy(const FockVector& a) {
  detail::CompensatedSum sum;
  const auto c = a.coeffs();
  for (std::size_t n = 1; n < c.size(); ++n) sum.add(static_cast<double>(n) * c[n] * c[n]);
  return 0.5 + sum.value();
}

PhotonMoments photon_moments(const FockVector& a) {
  const auto c = a.coeffs();
  const double mean = mean_energy(a) - 0.5;
  // Two-pass variance avoids cancellation in <n^2> - <n>^2.
  detail::CompensatedSum var;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double d = static_cast<double>(n) - mean;
    var.add(d * d * c[n] * c[n]);
  }
  return {mean, var.value()};
}

double mandel_q(const FockVector& a) {
  const auto [mean, variance] = photon_moments(a);
  if (mean <= 0.0) throw DomainError("mandel_q: mean photon number is zero");
  return variance / mean - 1.0;
}

bool is_hyper_poissonian(const FockVector& a) {
  const double q = mandel_q(a);
  return q > 1.0 + 2.0 * photon_moments(a).mean;
}

}  // namespace fidbound
