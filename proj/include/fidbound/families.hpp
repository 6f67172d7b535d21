// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file families.hpp
 * @brief Parametric pure-state families with closed-form fidelity and energy.
 *
 * All amplitudes are taken at zero relative phase, so every parameter is a
 * real modulus. Squeezed and negative binomial parameters also carry their
 * complement (1 - zeta^2, resp. 1 - zeta) so that states close to the open
 * end of the domain keep full relative precision.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "fidbound/fock.hpp"

namespace fidbound {

enum class Family { coherent, squeezed, negbin, binomial, fock_pair };

std::string_view family_name(Family f);

/// Largest zeta accepted by closed-form operations.
inline constexpr double kClosedFormZetaMax = 1.0 - 1e-15;
/// build_state rejects zeta at or above this value.
inline constexpr double kFockZetaLimit = 1.0 - 1e-9;

class Coherent {
 public:
  explicit Coherent(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

class Squeezed {
 public:
  explicit Squeezed(double zeta);
  /// Construct from w = 1 - zeta^2 in (0, 1].
  static Squeezed from_complement(double one_minus_zeta_sq);
  /// Construct from zeta and 1 - zeta^2 computed independently; they must
  /// agree to a few ulps.
  static Squeezed from_parts(double zeta, double one_minus_zeta_sq);

  double zeta() const { return zeta_; }
  double one_minus_zeta_sq() const { return w_; }

 private:
  Squeezed(double zeta, double w) : zeta_(zeta), w_(w) {}
  double zeta_;
  double w_;
};

class NegBin {
 public:
  NegBin(double zeta, double mu);
  /// Construct from u = 1 - zeta in (0, 1].
  static NegBin from_complement(double one_minus_zeta, double mu);
  static NegBin from_parts(double zeta, double one_minus_zeta, double mu);

  double zeta() const { return zeta_; }
  double one_minus_zeta() const { return u_; }
  double mu() const { return mu_; }

 private:
  NegBin(double zeta, double u, double mu) : zeta_(zeta), u_(u), mu_(mu) {}
  double zeta_;
  double u_;
  double mu_;
};

class Binomial {
 public:
  Binomial(double p, std::int64_t big_m);
  double p() const { return p_; }
  std::int64_t big_m() const { return big_m_; }

 private:
  double p_;
  std::int64_t big_m_;
};

/// sqrt(1 - beta^2)|n> + beta|m>, compared against |n>.
class FockPair {
 public:
  FockPair(std::int64_t n, std::int64_t m, double beta);
  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }
  double beta() const { return beta_; }

 private:
  std::int64_t n_;
  std::int64_t m_;
  double beta_;
};

using FamilyParam = std::variant<Coherent, Squeezed, NegBin, Binomial, FockPair>;

Family family_of(const FamilyParam& p);

std::string describe(const FamilyParam& p);

/// Fock expansion grown until the certified tail mass and first-moment tail
/// both drop below kTailMass. Throws CutoffExceeded when that needs more than
/// `cap` number states, or when zeta >= kFockZetaLimit.
FockVector build_state(const FamilyParam& p, std::size_t cap = max_cutoff());

/// Closed-form fidelity. Throws FamilyMismatch unless both parameters share
/// the family and its hyper-parameter (mu, M, or the (n, m) pair).
double fidelity_closed(const FamilyParam& a, const FamilyParam& b);

/// Closed-form mean energy 1/2 + <n>.
double energy_closed(const FamilyParam& p);

struct PairTradeoff {
  double fidelity;
  double delta_e;
};

/// Fidelity and energy gap between |n> and sqrt(1 - beta^2)|n> + beta|m>,
/// both evaluated on explicit Fock vectors. Throws DomainError for |beta| > 1
/// or n == m, CutoffExceeded when max(n, m) exceeds the cap.
PairTradeoff fock_pair_tradeoff(std::int64_t n, std::int64_t m, double beta);

/// The expression beta*m - (1 - sqrt(1 - beta^2))*n. It is not the energy
/// gap of the pair (that is beta^2 (m - n)); kept so reports can show the
/// discrepancy.
double fock_pair_alternative_gap(std::int64_t n, std::int64_t m, double beta);

}  // namespace fidbound
