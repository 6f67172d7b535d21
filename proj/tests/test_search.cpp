// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"
#include "fidbound/bounds.hpp"
#include "fidbound/error.hpp"
#include "fidbound/families.hpp"
#include "fidbound/search.hpp"
#include "oracles.hpp"

using namespace fidbound;

TEST_CASE("GridSpec validation") {
  CHECK_NOTHROW(GridSpec{}.validate());
  CHECK_THROWS_AS((GridSpec{2, 1e-12, 1e-9, 10.0}.validate()), DomainError);
  CHECK_THROWS_AS((GridSpec{101, 0.0, 1e-9, 10.0}.validate()), DomainError);
  CHECK_THROWS_AS((GridSpec{101, 1e-12, 0.0, 10.0}.validate()), DomainError);
  CHECK_THROWS_AS((GridSpec{101, 1e-12, 1e-9, -1.0}.validate()), DomainError);
}

TEST_CASE("partner states meet the energy constraint") {
  for (int i = 0; i < 100; ++i) {
    const double rel = testing::uniform(-0.6, 3.0);
    const std::vector<FamilyParam> firsts = {Coherent(testing::uniform(0.0, 3.0)),
                                             Squeezed(testing::uniform(0.0, 0.9)),
                                             NegBin(testing::uniform(0.0, 0.9), testing::uniform(0.1, 5.0))};
    for (const auto& first : firsts) {
      const auto partner = try_partner(first, rel);
      if (!partner) continue;
      CAPTURE(describe(first));
      CAPTURE(rel);
      const double e1 = energy_closed(first);
      CHECK(std::abs(energy_closed(*partner) - (1.0 + rel) * e1) <= 1e-12 * (1.0 + rel) * e1);
    }
  }
  // The coherent vacuum cannot lose energy.
  CHECK_FALSE(try_partner(Coherent(0.0), -0.5).has_value());
  CHECK_THROWS_AS(partner_state(Coherent(0.0), -0.5), PartnerOutOfDomain);
  const auto b = partner_state(Binomial(0.25, 4), 0.5);
  CHECK(std::abs(std::get<Binomial>(b).p() - 0.4375) <= 1e-15);
}

TEST_CASE("oracle reproduces interior maxima") {
  const struct {
    FamilySpec spec;
    double rel;
  } cases[] = {
      {FamilySpec::coherent(), 0.1},  {FamilySpec::coherent(), -0.3}, {FamilySpec::negbin(2.0), 1.0},
      {FamilySpec::negbin(10.0), -0.05}, {FamilySpec::binomial(2), 1.0}, {FamilySpec::binomial(20), 3.0},
  };
  for (const auto& c : cases) {
    const auto r = oracle_max_fidelity(c.spec, c.rel);
    CAPTURE(family_name(c.spec.family()));
    CAPTURE(c.rel);
    CHECK(r.branch == Branch::interior);
    CHECK(r.abs_gap <= kInteriorTolerance);
    CHECK(std::abs(r.param_oracle - r.param_closed) <= 1e-5);
    CHECK(r.passed());
  }
}

TEST_CASE("oracle approaches boundary suprema monotonically") {
  for (const auto& spec : {FamilySpec::squeezed(), FamilySpec::negbin(0.1), FamilySpec::phase()}) {
    const auto r = oracle_max_fidelity(spec, 0.3);
    CHECK(r.branch == Branch::boundary_supremum);
    CHECK(r.boundary_sequence.size() == 8);
    CHECK(r.boundary_monotone);
    CHECK(std::abs(r.boundary_sequence.back().fidelity - r.f_closed) <= kBoundaryTolerance);
    CHECK(r.passed());
  }
}

TEST_CASE("the oracle maximum never exceeds the bound") {
  for (int i = 0; i < 20; ++i) {
    const double rel = testing::uniform(-0.5, 2.0);
    const double mu = testing::uniform(0.2, 6.0);
    const GridSpec coarse{501, 1e-10, 1e-9, 10.0};
    for (const auto& spec : {FamilySpec::coherent(), FamilySpec::squeezed(), FamilySpec::negbin(mu)}) {
      const auto r = oracle_max_fidelity(spec, rel, coarse);
      CHECK(r.f_oracle <= r.f_closed + 1e-12);
    }
  }
}

TEST_CASE("oracle agrees with an independent uniform grid") {
  const double rel = 0.7;
  const auto spec = FamilySpec::coherent();
  const auto ref = testing::uniform_grid_max(
      [&](double a) {
        const auto partner = try_partner(Coherent(a), rel);
        return partner ? fidelity_closed(Coherent(a), *partner) : NAN;
      },
      0.0, 5.0, 200001);
  const auto r = oracle_max_fidelity(spec, rel);
  CHECK(r.f_oracle >= ref.f - 1e-12);
  CHECK(std::abs(r.param_oracle - ref.x) <= 1e-4);
}

TEST_CASE("a starved grid fails verification") {
  const auto r = oracle_max_fidelity(FamilySpec::coherent(), 1.0, GridSpec{3, 0.5, 1e-9, 10.0});
  CHECK_FALSE(r.passed());
}

TEST_CASE("scan_tradeoff") {
  const auto rows = scan_tradeoff(FamilySpec::squeezed(), {0.0, 0.5, 1.0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].f_max == 1.0);
  CHECK(rows[2].f_max == doctest::Approx(std::pow(1.25, -0.5)).epsilon(1e-15));
  CHECK(std::abs(rows[1].rel_pos - e_from_y(0.5, +1)) <= 1e-15);
}
