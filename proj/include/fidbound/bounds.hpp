// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bounds.hpp
 * @brief Closed-form maximal fidelity at a fixed relative energy difference.
 *
 * Two energy measures are used throughout:
 *   rel  E = (E2 - E1)/E1, always > -1;
 *   sym  Y = |E2 - E1|/sqrt(E1 E2) = |E|/sqrt(1 + E), symmetric under
 *        interchange of the two states.
 * Every bound is keyed on Y. A given Y corresponds to one positive and one
 * negative relative difference, the two roots of E^2 = Y^2 (1 + E).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fidbound/families.hpp"

namespace fidbound {

/// Family plus its hyper-parameter, validated at construction.
class FamilySpec {
 public:
  static FamilySpec coherent() { return FamilySpec(Family::coherent, 0.0, 0); }
  static FamilySpec squeezed() { return FamilySpec(Family::squeezed, 0.0, 0); }
  /// Throws HyperParamError for mu <= 0.
  static FamilySpec negbin(double mu);
  /// Coherent phase states: negbin with mu = 1.
  static FamilySpec phase() { return negbin(1.0); }
  /// Throws HyperParamError for M < 1.
  static FamilySpec binomial(std::int64_t big_m);

  Family family() const { return family_; }
  double mu() const { return mu_; }
  std::int64_t big_m() const { return big_m_; }
  /// mu for negbin, M for binomial, nothing otherwise.
  std::optional<double> hyper() const;

  /// Family member with first-state parameter `x` (alpha, zeta or p).
  FamilyParam member(double x) const;

 private:
  FamilySpec(Family f, double mu, std::int64_t big_m) : family_(f), mu_(mu), big_m_(big_m) {}
  Family family_;
  double mu_;
  std::int64_t big_m_;
};

enum class Branch { interior, boundary_supremum };

std::string_view branch_name(Branch b);

/// |rel|/sqrt(1 + rel). Throws DomainError for rel <= -1.
double y_from_e(double rel);

/// Root of E^2 = Y^2 (1 + E) with the requested sign (+1 or -1).
/// Throws DomainError for sym < 0 or a sign other than +/-1.
double e_from_y(double sym, int sign);

class EnergyGap {
 public:
  static EnergyGap from_rel(double rel);
  static EnergyGap from_sym(double sym, int sign);

  double rel() const { return rel_; }
  double sym() const { return sym_; }
  int sign() const { return sign_; }

  /// Absolute gap E2 - E1 for a first-state energy e1.
  double delta_e(double e1) const { return rel_ * e1; }

 private:
  EnergyGap(double rel, double sym, int sign) : rel_(rel), sym_(sym), sign_(sign) {}
  double rel_;
  double sym_;
  int sign_;
};

struct BoundResult {
  double f_max;
  double extremal_param;
  Branch branch;
};

struct Extremum {
  double value;
  Branch branch;
};

/// Largest Y reachable between two binomial states: 2M/sqrt(2M + 1).
double binomial_sym_limit(std::int64_t big_m);

/// Maximal fidelity within the family at symmetric gap `sym`. The extremal
/// parameter refers to the relative gap e_from_y(sym, sign).
BoundResult fmax(const FamilySpec& spec, double sym, int sign = +1);

/// Inverse of fmax in Y. Throws DomainError unless 0 < f <= 1.
double ymax_for_fidelity(const FamilySpec& spec, double f);

/// First-state parameter that maximizes the fidelity at relative gap `rel`.
/// Families whose supremum sits at the open end zeta -> 1 report the boundary
/// value 1 with Branch::boundary_supremum.
Extremum extremal_param(const FamilySpec& spec, double rel);

/// lim_{Y -> 0} (1 - fmax)/Y^2.
double small_gap_coefficient(const FamilySpec& spec);

/// (1 + (2 mu - 1) Y^2/(4 mu^2))^(-mu), defined for any mu != 0. The
/// negative binomial bound for mu >= 1; mu = -M gives the binomial bound.
double negbin_power_form(double mu, double sym);

/// Coefficients of A^2 z^2 + 2 B z + C^2 = 0, whose double root locates the
/// interior negative binomial extremum.
struct NegbinQuadratic {
  double a;
  double b;
  double c;
  double residual(double zeta) const { return a * a * zeta * zeta + 2.0 * b * zeta + c * c; }
};

/// e_mu = E/(2 mu), kappa = 2 mu - 1.
NegbinQuadratic negbin_quadratic(double beta, double e_mu, double kappa);

/// beta^2 at which B = -AC.
double negbin_beta_star_sq(double e_mu, double kappa);

/// (1 + e_mu)/(kappa (1 + e_mu kappa)).
double negbin_zeta_star(double e_mu, double kappa);

}  // namespace fidbound
