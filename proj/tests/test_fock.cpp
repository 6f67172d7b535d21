// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "fidbound/error.hpp"
#include "fidbound/families.hpp"
#include "fidbound/fock.hpp"
#include "oracles.hpp"

using namespace fidbound;

namespace {

struct ScopedEnv {
  std::string key;
  std::string old;
  bool had;
  ScopedEnv(const char* k, const char* v) : key(k) {
    const char* prev = std::getenv(k);
    had = prev != nullptr;
    if (had) old = prev;
    ::setenv(k, v, 1);
  }
  ~ScopedEnv() {
    if (had) {
      ::setenv(key.c_str(), old.c_str(), 1);
    } else {
      ::unsetenv(key.c_str());
    }
  }
};

}  // namespace

TEST_CASE("FockVector enforces the tail-mass window") {
  CHECK_NOTHROW(FockVector({1.0}));
  CHECK_NOTHROW(FockVector({std::sqrt(0.5), std::sqrt(0.5 - 0.5e-12)}));
  CHECK_THROWS_AS(FockVector({0.9}), DomainError);
  CHECK_THROWS_AS(FockVector({1.0, 0.1}), DomainError);
  CHECK_THROWS_AS(FockVector({}), DomainError);
  CHECK_THROWS_AS(FockVector({NAN}), DomainError);
  CHECK_THROWS_AS(FockVector({INFINITY, 0.0}), DomainError);
}

TEST_CASE("fidelity_fock identity, orthogonality and zero padding") {
  const auto vac = FockVector::number_state(0);
  const auto one = FockVector::number_state(1);
  CHECK(fidelity_fock(vac, vac) == 1.0);
  CHECK(fidelity_fock(vac, one) == 0.0);

  const auto coh = build_state(Coherent(1.3));
  CHECK(fidelity_fock(coh, coh) == doctest::Approx(1.0).epsilon(2 * kTailMass));
  // |<0|alpha>|^2 = exp(-alpha^2); the vacuum is a one-element vector.
  CHECK(fidelity_fock(vac, coh) == doctest::Approx(std::exp(-1.69)).epsilon(1e-12));
}

TEST_CASE("fidelity_fock of two coherent states matches exp(-|a2 - a1|^2)") {
  const auto a = build_state(Coherent(0.5));
  const auto b = build_state(Coherent(1.0));
  // Frozen from exp(-0.25).
  CHECK(std::abs(fidelity_fock(a, b) - 0.778800783071404868) <= 1e-12);
}

TEST_CASE("fidelity_fock is symmetric and bounded on random pairs") {
  for (int i = 0; i < 200; ++i) {
    const auto a = build_state(NegBin(testing::uniform(0.0, 0.8), testing::uniform(0.1, 5.0)));
    const auto b = build_state(Squeezed(testing::uniform(0.0, 0.8)));
    const double fab = fidelity_fock(a, b);
    CHECK(fab == fidelity_fock(b, a));
    CHECK(fab >= 0.0);
    CHECK(fab <= 1.0);
  }
}

TEST_CASE("mean_energy") {
  CHECK(mean_energy(FockVector::number_state(0)) == 0.5);
  CHECK(mean_energy(FockVector::number_state(7)) == 7.5);
  CHECK(std::abs(mean_energy(build_state(Coherent(1.0))) - 1.5) <= 1e-12);
  // 1/2 + mu zeta/(1 - zeta) = 1/2 + 2 * 0.5/0.5
  CHECK(std::abs(mean_energy(build_state(NegBin(0.5, 2.0))) - 2.5) <= 1e-12);
}

TEST_CASE("photon_moments") {
  const auto five = photon_moments(FockVector::number_state(5));
  CHECK(five.mean == 5.0);
  CHECK(five.variance == 0.0);

  const auto coh = photon_moments(build_state(Coherent(1.0)));
  CHECK(std::abs(coh.mean - 1.0) <= 1e-12);
  CHECK(std::abs(coh.variance - 1.0) <= 1e-12);

  const auto sq = photon_moments(build_state(Squeezed(0.6)));
  CHECK(std::abs(sq.mean - 0.5625) <= 1e-12);
}

TEST_CASE("mandel_q") {
  CHECK(std::abs(mandel_q(build_state(Coherent(1.0)))) <= 1e-10);
  // Q = zeta/(1 - zeta), independent of mu.
  CHECK(std::abs(mandel_q(build_state(NegBin(0.5, 0.3))) - 1.0) <= 1e-10);
  // Squeezed vacuum: Q = 1 + 2<n>.
  CHECK(std::abs(mandel_q(build_state(Squeezed(0.6))) - 2.125) <= 1e-10);
  CHECK_THROWS_AS(mandel_q(FockVector::number_state(0)), DomainError);
  CHECK_THROWS_AS(mandel_q(build_state(Coherent(0.0))), DomainError);
}

TEST_CASE("mandel_q vanishes for coherent states across alpha in [0.1, 3]") {
  for (double alpha = 0.1; alpha <= 3.0 + 1e-12; alpha += 0.1) {
    CAPTURE(alpha);
    CHECK(std::abs(mandel_q(build_state(Coherent(alpha)))) <= 1e-10);
  }
}

TEST_CASE("is_hyper_poissonian") {
  CHECK_FALSE(is_hyper_poissonian(build_state(Coherent(1.0))));
  CHECK(is_hyper_poissonian(build_state(NegBin(0.9, 0.1))));
  CHECK_FALSE(is_hyper_poissonian(build_state(NegBin(0.5, 0.6))));
  CHECK_THROWS_AS(is_hyper_poissonian(FockVector::number_state(0)), DomainError);

  // mu < 1/2 < zeta (1 - mu) characterises hyper-Poissonian negative binomial states.
  for (int i = 0; i < 100; ++i) {
    const double zeta = testing::uniform(0.05, 0.9);
    const double mu = testing::uniform(0.05, 2.0);
    const double margin = zeta * (1.0 - mu) - 0.5;
    if (std::abs(margin) < 1e-3) continue;
    CAPTURE(zeta);
    CAPTURE(mu);
    CHECK(is_hyper_poissonian(build_state(NegBin(zeta, mu))) == (margin > 0.0));
  }
}

TEST_CASE("max_cutoff honours FIDBOUND_MAX_CUTOFF") {
  {
    ScopedEnv env("FIDBOUND_MAX_CUTOFF", "64");
    CHECK(max_cutoff() == 64);
    CHECK_THROWS_AS(build_state(Coherent(9.0)), CutoffExceeded);
  }
  {
    ScopedEnv env("FIDBOUND_MAX_CUTOFF", "junk");
    CHECK(max_cutoff() == kDefaultMaxCutoff);
  }
  CHECK_NOTHROW(build_state(Coherent(9.0)));
}
