// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file search.hpp
 * @brief Brute-force maximization of pairwise fidelity at a fixed energy gap.
 *
 * The oracle never looks at the bound formulas while searching. For every
 * first-state parameter on a grid it solves the energy constraint for the
 * partner, evaluates the closed-form pairwise fidelity and keeps the best
 * point; golden-section search then refines around it. The closed-form bound
 * is only read afterwards to fill the report.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fidbound/bounds.hpp"
#include "fidbound/families.hpp"

namespace fidbound {

/// abs_gap tolerance for interior maxima.
inline constexpr double kInteriorTolerance = 1e-8;
/// Tolerance for suprema approached at zeta -> 1.
inline constexpr double kBoundaryTolerance = 1e-6;

struct GridSpec {
  std::size_t coarse_points = 10001;
  double refine_tol = 1e-12;
  double boundary_margin = 1e-9;
  /// Upper end of the coherent sweep; alpha is unbounded.
  double alpha_max = 10.0;

  /// Throws DomainError if any field is out of range.
  void validate() const;
};

struct BoundaryPoint {
  double param;
  double fidelity;
};

struct VerifyReport {
  FamilySpec spec;
  double rel;
  double sym;
  double f_closed;
  double f_oracle;
  double param_closed;
  double param_oracle;
  double abs_gap;
  Branch branch;
  GridSpec grid;
  std::size_t feasible_points;
  std::size_t infeasible_points;
  /// Fidelity at zeta = 1 - 10^-k, k = 1..8; empty for interior maxima.
  std::vector<BoundaryPoint> boundary_sequence;
  bool boundary_monotone;

  /// Within the branch tolerance and, at a boundary, monotone with the last
  /// sub-grid point within tolerance of the supremum.
  bool passed() const;
};

/// The partner state whose energy differs from `first` by the relative gap
/// `rel`, or nothing when it falls outside the family domain.
std::optional<FamilyParam> try_partner(const FamilyParam& first, double rel);

/// As try_partner, throwing PartnerOutOfDomain when infeasible.
FamilyParam partner_state(const FamilyParam& first, double rel);

/// Second-state parameter (alpha, zeta or p) reaching relative gap `rel`.
double constrained_partner(const FamilySpec& spec, double param1, double rel);

/// Throws NoFeasiblePoint when no grid point admits a partner.
VerifyReport oracle_max_fidelity(const FamilySpec& spec, double rel, const GridSpec& grid = {});

struct ScanRecord {
  double sym;
  double rel_pos;
  double f_max;
  double extremal_param;
  Branch branch;
};

/// Bound table from the closed forms only.
std::vector<ScanRecord> scan_tradeoff(const FamilySpec& spec, const std::vector<double>& sym_values);

}  // namespace fidbound
