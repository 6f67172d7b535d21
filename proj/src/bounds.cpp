// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "fidbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fidbound/error.hpp"

namespace fidbound {

namespace {

void require_sym(double sym) {
  if (!std::isfinite(sym) || sym < 0.0) throw DomainError("sym energy gap must be finite and >= 0");
}

// exp(-power * log1p(coef * Y^2))
double power_bound(double coef, double power, double sym) {
  return std::exp(-power * std::log1p(coef * sym * sym));
}

// Relative slack for range checks at exactly representable endpoints.
constexpr double kEdgeSlack = 1e-12;

}  // namespace

FamilySpec FamilySpec::negbin(double mu) {
  if (!std::isfinite(mu) || mu <= 0.0) throw HyperParamError("negbin: mu must be > 0");
  return FamilySpec(Family::negbin, mu, 0);
}

FamilySpec FamilySpec::binomial(std::int64_t big_m) {
  if (big_m < 1) throw HyperParamError("binomial: M must be >= 1");
  return FamilySpec(Family::binomial, 0.0, big_m);
}

std::optional<double> FamilySpec::hyper() const {
  switch (family_) {
    case Family::negbin:
      return mu_;
    case Family::binomial:
      return static_cast<double>(big_m_);
    default:
      return std::nullopt;
  }
}

FamilyParam FamilySpec::member(double x) const {
  switch (family_) {
    case Family::coherent:
      return Coherent(x);
    case Family::squeezed:
      return Squeezed(x);
    case Family::negbin:
      return NegBin(x, mu_);
    case Family::binomial:
      return Binomial(x, big_m_);
    case Family::fock_pair:
      break;
  }
  throw DomainError("fock pairs have no one-parameter member");
}

std::string_view branch_name(Branch b) {
  return b == Branch::interior ? "interior" : "boundary_supremum";
}

double y_from_e(double rel) {
  if (!std::isfinite(rel) || rel <= -1.0) throw DomainError("relative energy gap must be > -1");
  return std::abs(rel) / std::sqrt(1.0 + rel);
}

double e_from_y(double sym, int sign) {
  require_sym(sym);
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (sym == 0.0) return 0.0;
  const double pos = sym * std::sqrt(1.0 + 0.25 * sym * sym) + 0.5 * sym * sym;
  if (sign > 0) return pos;
  // The roots multiply to -Y^2; dividing avoids cancellation in Y^2/2 - Y sqrt(1 + Y^2/4).
  const double neg = -(sym * sym) / pos;
  if (!(neg > -1.0)) throw DomainError("sym energy gap too large to resolve the negative branch");
  return neg;
}

EnergyGap EnergyGap::from_rel(double rel) {
  const double sym = y_from_e(rel);
  return EnergyGap(rel, sym, rel < 0.0 ? -1 : 1);
}

EnergyGap EnergyGap::from_sym(double sym, int sign) { return EnergyGap(e_from_y(sym, sign), sym, sign); }

double binomial_sym_limit(std::int64_t big_m) {
  const double m = static_cast<double>(big_m);
  return 2.0 * m / std::sqrt(2.0 * m + 1.0);
}

double negbin_power_form(double mu, double sym) {
  return power_bound((2.0 * mu - 1.0) / (4.0 * mu * mu), mu, sym);
}

BoundResult fmax(const FamilySpec& spec, double sym, int sign) {
  require_sym(sym);
  double f = 1.0;
  switch (spec.family()) {
    case Family::coherent:
      f = std::exp(-0.5 * sym * sym);
      break;
    case Family::squeezed:
      f = power_bound(0.25, 0.5, sym);
      break;
    case Family::negbin:
      // mu = 1 takes the shared (1 + Y^2/4)^-mu form.
      f = spec.mu() > 1.0 ? negbin_power_form(spec.mu(), sym) : power_bound(0.25, spec.mu(), sym);
      break;
    case Family::binomial: {
      const double limit = binomial_sym_limit(spec.big_m());
      if (sym > limit * (1.0 + kEdgeSlack)) {
        throw DomainError("binomial: sym energy gap exceeds 2M/sqrt(2M+1) = " +
                          std::to_string(limit));
      }
      const double m = static_cast<double>(spec.big_m());
      const double bracket = std::max(0.0, 1.0 - (2.0 * m + 1.0) * sym * sym / (4.0 * m * m));
      f = std::pow(bracket, m);
      break;
    }
    case Family::fock_pair:
      throw DomainError("fock pairs have no maximal-fidelity bound");
  }
  const Extremum ext = extremal_param(spec, e_from_y(sym, sign));
  return {f, ext.value, ext.branch};
}

double ymax_for_fidelity(const FamilySpec& spec, double f) {
  if (!std::isfinite(f) || f <= 0.0 || f > 1.0) throw DomainError("fidelity must lie in (0, 1]");
  if (f == 1.0) return 0.0;
  const double lf = std::log(f);
  switch (spec.family()) {
    case Family::coherent:
      return std::sqrt(-2.0 * lf);
    case Family::squeezed:
      return 2.0 * std::sqrt(std::expm1(-2.0 * lf));
    case Family::negbin: {
      const double mu = spec.mu();
      const double excess = std::expm1(-lf / mu);
      if (mu > 1.0) return 2.0 * mu * std::sqrt(excess / (2.0 * mu - 1.0));
      return 2.0 * std::sqrt(excess);
    }
    case Family::binomial: {
      const double m = static_cast<double>(spec.big_m());
      return 2.0 * m * std::sqrt(-std::expm1(lf / m) / (2.0 * m + 1.0));
    }
    case Family::fock_pair:
      break;
  }
  throw DomainError("fock pairs have no maximal-fidelity bound");
}

Extremum extremal_param(const FamilySpec& spec, double rel) {
  if (!std::isfinite(rel) || rel <= -1.0) throw DomainError("relative energy gap must be > -1");
  switch (spec.family()) {
    case Family::coherent:
      return {1.0 / std::sqrt(2.0 * (1.0 + rel)), Branch::interior};
    case Family::squeezed:
      return {1.0, Branch::boundary_supremum};
    case Family::negbin: {
      const double mu = spec.mu();
      if (mu <= 1.0) return {1.0, Branch::boundary_supremum};
      return {negbin_zeta_star(rel / (2.0 * mu), 2.0 * mu - 1.0), Branch::interior};
    }
    case Family::binomial: {
      const double m = static_cast<double>(spec.big_m());
      const double lo = -2.0 * m / (2.0 * m + 1.0);
      const double hi = 2.0 * m;
      if (rel < lo - kEdgeSlack || rel > hi * (1.0 + kEdgeSlack)) {
        throw DomainError("binomial: relative energy gap outside [-2M/(2M+1), 2M]");
      }
      const double p = (2.0 * m - rel) / (4.0 * m * (m + 1.0) * (1.0 + rel));
      return {std::clamp(p, 0.0, 1.0), Branch::interior};
    }
    case Family::fock_pair:
      break;
  }
  throw DomainError("fock pairs have no extremal parameter");
}

double small_gap_coefficient(const FamilySpec& spec) {
  switch (spec.family()) {
    case Family::coherent:
      return 0.5;
    case Family::squeezed:
      return 0.125;
    case Family::negbin: {
      const double mu = spec.mu();
      return mu >= 1.0 ? (2.0 * mu - 1.0) / (4.0 * mu) : 0.25 * mu;
    }
    case Family::binomial: {
      const double m = static_cast<double>(spec.big_m());
      return (2.0 * m + 1.0) / (4.0 * m);
    }
    case Family::fock_pair:
      break;
  }
  throw DomainError("fock pairs have no maximal-fidelity bound");
}

NegbinQuadratic negbin_quadratic(double beta, double e_mu, double kappa) {
  const double b2 = beta * beta;
  const double gk = 1.0 + e_mu * kappa;
  const double g1 = 1.0 + e_mu;
  return {
      b2 * gk - 1.0,
      b2 * b2 * gk * g1 - b2 * e_mu * (1.0 + kappa) - 1.0,
      b2 * g1 - 1.0,
  };
}

double negbin_beta_star_sq(double e_mu, double kappa) {
  return (1.0 + e_mu * (1.0 + kappa)) / ((1.0 + e_mu) * (1.0 + e_mu * kappa));
}

double negbin_zeta_star(double e_mu, double kappa) {
  return (1.0 + e_mu) / (kappa * (1.0 + e_mu * kappa));
}

}  // namespace fidbound
