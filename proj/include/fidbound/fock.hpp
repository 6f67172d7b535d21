// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Truncated Fock-space states with real amplitudes.
 *
 * A FockVector holds amplitudes c_0..c_N over number states |n>. The
 * construction check requires the retained norm to lie within kTailMass of
 * one, so every quantity computed here is exact up to that tail. Energies are
 * dimensionless: E = 1/2 + <n>.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fidbound {

/// Largest probability mass allowed outside the stored range.
inline constexpr double kTailMass = 1e-12;

/// Tail bound used when family states are expanded. The overlap of two
/// truncated states misses at most sqrt(tail_a tail_b), so both tails are
/// kept at kTailMass^2 to hold that error below kTailMass.
inline constexpr double kBuildTailMass = kTailMass * kTailMass;

/// Default hard cap on the Fock cutoff.
inline constexpr std::size_t kDefaultMaxCutoff = 4096;

/// Cutoff cap: FIDBOUND_MAX_CUTOFF when set to a positive integer, otherwise
/// kDefaultMaxCutoff.
std::size_t max_cutoff();

class FockVector {
 public:
  /// Throws DomainError on an empty or non-finite input, or when the squared
  /// norm falls outside [1 - kTailMass, 1 + kTailMass].
  explicit FockVector(std::vector<double> coeffs);

  /// |n>
  static FockVector number_state(std::size_t n);

  std::span<const double> coeffs() const { return coeffs_; }
  std::size_t cutoff() const { return coeffs_.size() - 1; }
  double operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : 0.0; }

  /// Sum of c_n^2 over the stored range.
  double norm_sq() const;

 private:
  std::vector<double> coeffs_;
};

/// |<a|b>|^2; the shorter vector is zero-padded. Clamped to [0, 1].
double fidelity_fock(const FockVector& a, const FockVector& b);

/// 1/2 + sum n c_n^2.
double mean_energy(const FockVector& a);

struct PhotonMoments {
  double mean;
  double variance;
};

PhotonMoments photon_moments(const FockVector& a);

/// Mandel Q = var/mean - 1. Throws DomainError when the mean photon number
/// is zero.
double mandel_q(const FockVector& a);

/// Q > 1 + 2<n>: photon subtraction raises the mean number above photon
/// addition.
bool is_hyper_poissonian(const FockVector& a);

}  // namespace fidbound
