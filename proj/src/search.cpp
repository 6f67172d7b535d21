// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "fidbound/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "fidbound/error.hpp"

namespace fidbound {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Sub-grid values at the supremum plateau may jitter by a few ulps.
constexpr double kMonotoneSlack = 8.0 * std::numeric_limits<double>::epsilon();
constexpr int kBoundaryDepth = 8;
constexpr int kMaxGoldenIterations = 300;

template <class T>
std::optional<FamilyParam> guarded(T&& make) {
  try {
    return FamilyParam(make());
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

double first_param(const FamilyParam& p) {
  if (const auto* s = std::get_if<Coherent>(&p)) return s->alpha();
  if (const auto* s = std::get_if<Squeezed>(&p)) return s->zeta();
  if (const auto* s = std::get_if<NegBin>(&p)) return s->zeta();
  if (const auto* s = std::get_if<Binomial>(&p)) return s->p();
  throw DomainError("fock pairs have no scalar parameter");
}

struct Best {
  double x = 0.0;
  double f = kNegInf;

  // Larger value wins; on a tie the smaller parameter is kept.
  void consider(double cand_x, double cand_f) {
    if (cand_f > f || (cand_f == f && cand_x < x)) {
      x = cand_x;
      f = cand_f;
    }
  }
};

class Objective {
 public:
  Objective(const FamilySpec& spec, double rel) : spec_(spec), rel_(rel) {}

  std::optional<double> at(const FamilyParam& first) const {
    const auto partner = try_partner(first, rel_);
    if (!partner) return std::nullopt;
    return fidelity_closed(first, *partner);
  }

  std::optional<double> at(double x) const {
    const auto first = guarded([&] { return spec_.member(x); });
    if (!first) return std::nullopt;
    return at(*first);
  }

  double value_or_floor(double x) const { return at(x).value_or(kNegInf); }

 private:
  FamilySpec spec_;
  double rel_;
};

// Golden-section maximization of a unimodal objective on [a, b].
void golden_section(const Objective& obj, double a, double b, double tol, Best& best) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = obj.value_or_floor(c);
  double fd = obj.value_or_floor(d);
  best.consider(c, fc);
  best.consider(d, fd);
  for (int it = 0; it < kMaxGoldenIterations && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = obj.value_or_floor(c);
      best.consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = obj.value_or_floor(d);
      best.consider(d, fd);
    }
  }
}

FamilyParam boundary_member(const FamilySpec& spec, double one_minus_zeta) {
  if (spec.family() == Family::squeezed) {
    return Squeezed::from_parts(1.0 - one_minus_zeta, one_minus_zeta * (2.0 - one_minus_zeta));
  }
  return NegBin::from_complement(one_minus_zeta, spec.mu());
}

}  // namespace

void GridSpec::validate() const {
  if (coarse_points < 3) throw DomainError("grid: coarse_points must be >= 3");
  if (!(refine_tol > 0.0 && refine_tol < 1.0)) throw DomainError("grid: refine_tol must lie in (0, 1)");
  if (!(boundary_margin > 0.0 && boundary_margin < 1e-3)) {
    throw DomainError("grid: boundary_margin must lie in (0, 1e-3)");
  }
  if (!(alpha_max > 0.0) || !std::isfinite(alpha_max)) throw DomainError("grid: alpha_max must be > 0");
}

bool VerifyReport::passed() const {
  if (branch == Branch::interior) return abs_gap <= kInteriorTolerance;
  if (boundary_sequence.empty()) return false;
  return abs_gap <= kBoundaryTolerance && boundary_monotone &&
         std::abs(f_closed - boundary_sequence.back().fidelity) <= kBoundaryTolerance;
}

std::optional<FamilyParam> try_partner(const FamilyParam& first, double rel) {
  if (!std::isfinite(rel) || rel <= -1.0) return std::nullopt;
  if (const auto* s = std::get_if<Coherent>(&first)) {
    const double a2 = s->alpha() * s->alpha();
    const double r = a2 * (1.0 + rel) + 0.5 * rel;
    if (r < 0.0) return std::nullopt;
    return guarded([&] { return Coherent(std::sqrt(r)); });
  }
  if (const auto* s = std::get_if<Squeezed>(&first)) {
    const double z = s->zeta() * s->zeta();
    const double half = 0.5 * rel;
    const double denom = 1.0 + half * (1.0 + z);
    const double num = z + half * (1.0 + z);
    if (denom <= 0.0 || num < 0.0) return std::nullopt;
    return guarded(
        [&] { return Squeezed::from_parts(std::sqrt(num / denom), s->one_minus_zeta_sq() / denom); });
  }
  if (const auto* s = std::get_if<NegBin>(&first)) {
    const double mu = s->mu();
    const double shift = rel / (2.0 * mu) * (1.0 + (2.0 * mu - 1.0) * s->zeta());
    const double denom = 1.0 + shift;
    const double num = s->zeta() + shift;
    if (denom <= 0.0 || num < 0.0) return std::nullopt;
    return guarded([&] { return NegBin::from_parts(num / denom, s->one_minus_zeta() / denom, mu); });
  }
  if (const auto* s = std::get_if<Binomial>(&first)) {
    const double m = static_cast<double>(s->big_m());
    const double p = s->p() * (1.0 + rel) + rel / (2.0 * m);
    if (p < 0.0 || p > 1.0) return std::nullopt;
    return guarded([&] { return Binomial(p, s->big_m()); });
  }
  return std::nullopt;
}

FamilyParam partner_state(const FamilyParam& first, double rel) {
  if (!std::isfinite(rel) || rel <= -1.0) throw DomainError("relative energy gap must be > -1");
  auto partner = try_partner(first, rel);
  if (!partner) {
    throw PartnerOutOfDomain("no " + std::string(family_name(family_of(first))) +
                             " partner of " + describe(first) + " at relative gap " +
                             std::to_string(rel));
  }
  return *partner;
}

double constrained_partner(const FamilySpec& spec, double param1, double rel) {
  return first_param(partner_state(spec.member(param1), rel));
}

VerifyReport oracle_max_fidelity(const FamilySpec& spec, double rel, const GridSpec& grid) {
  grid.validate();
  if (!std::isfinite(rel) || rel <= -1.0) throw DomainError("relative energy gap must be > -1");

  double lo = 0.0;
  double hi = 1.0;
  switch (spec.family()) {
    case Family::coherent:
      hi = grid.alpha_max;
      break;
    case Family::squeezed:
    case Family::negbin:
      hi = 1.0 - grid.boundary_margin;
      break;
    default:
      break;
  }

  const Objective objective(spec, rel);
  const std::size_t n = grid.coarse_points;
  const double step = (hi - lo) / static_cast<double>(n - 1);
  Best best;
  std::size_t best_index = 0;
  std::size_t infeasible = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i + 1 == n ? hi : lo + step * static_cast<double>(i);
    const auto f = objective.at(x);
    if (!f) {
      ++infeasible;
      continue;
    }
    best.consider(x, *f);
    if (best.x == x) best_index = i;
  }
  if (infeasible == n) {
    throw NoFeasiblePoint("no feasible first-state parameter at relative gap " + std::to_string(rel));
  }

  const double left = best_index == 0 ? lo : lo + step * static_cast<double>(best_index - 1);
  const double right = best_index + 1 >= n ? hi : std::min(hi, lo + step * static_cast<double>(best_index + 1));
  golden_section(objective, left, right, grid.refine_tol, best);

  const double sym = y_from_e(rel);
  const BoundResult bound = fmax(spec, sym, rel < 0.0 ? -1 : 1);
  const Extremum ext = extremal_param(spec, rel);

  VerifyReport report{spec,
                      rel,
                      sym,
                      bound.f_max,
                      best.f,
                      ext.value,
                      best.x,
                      std::abs(bound.f_max - best.f),
                      ext.branch,
                      grid,
                      n - infeasible,
                      infeasible,
                      {},
                      true};

  if (ext.branch == Branch::boundary_supremum) {
    double previous = kNegInf;
    for (int k = 1; k <= kBoundaryDepth; ++k) {
      const double u = std::pow(10.0, -k);
      const auto f = objective.at(boundary_member(spec, u));
      if (!f) continue;
      report.boundary_sequence.push_back({1.0 - u, *f});
      if (*f < previous - kMonotoneSlack) report.boundary_monotone = false;
      previous = *f;
    }
    if (report.boundary_sequence.empty()) report.boundary_monotone = false;
  }
  return report;
}

std::vector<ScanRecord> scan_tradeoff(const FamilySpec& spec, const std::vector<double>& sym_values) {
  std::vector<ScanRecord> out;
  out.reserve(sym_values.size());
  for (double sym : sym_values) {
    const BoundResult b = fmax(spec, sym, +1);
    out.push_back({sym, e_from_y(sym, +1), b.f_max, b.extremal_param, b.branch});
  }
  return out;
}

}  // namespace fidbound
