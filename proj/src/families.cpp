// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "fidbound/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "fidbound/error.hpp"
#include "fidbound/special.hpp"

namespace fidbound {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

void require_zeta(double zeta, const char* family) {
  require_finite(zeta, "zeta");
  if (zeta < 0.0 || zeta > kClosedFormZetaMax) {
    throw DomainError(std::string(family) + ": zeta must lie in [0, 1)");
  }
}

void require_mu(double mu) {
  if (!std::isfinite(mu) || mu <= 0.0) throw HyperParamError("negbin: mu must be > 0");
}

constexpr double kPartsTolerance = 8.0 * std::numeric_limits<double>::epsilon();

// n * log(x), with the convention 0 * log(0) = 0.
double xlogy(double n, double x) { return n == 0.0 ? 0.0 : n * std::log(x); }

// Grows the expansion one term at a time. `log_amp(k)` is the log amplitude of
// photon number k*stride; `ratio_bound(k)` bounds every later probability
// ratio p_{j+1}/p_j for j >= k, which gives a geometric bound on the tail.
template <class LogAmp, class RatioBound>
FockVector grow(LogAmp log_amp, RatioBound ratio_bound, std::size_t stride, std::size_t cap,
                const char* what) {
  std::vector<double> c;
  for (std::size_t k = 0;; ++k) {
    const std::size_t n = k * stride;
    if (n > cap) {
      throw CutoffExceeded(std::string(what) + ": tail mass not below 1e-24 within cutoff " +
                           std::to_string(cap));
    }
    c.resize(n + 1, 0.0);
    const double amp = std::exp(log_amp(k));
    c[n] = amp;
    const double q = ratio_bound(k);
    if (q < 1.0) {
      const double pk = amp * amp;
      const double kd = static_cast<double>(k);
      const double geo = q / (1.0 - q);
      const double mass_tail = pk * geo;
      const double moment_tail = static_cast<double>(stride) * pk * (kd * geo + geo / (1.0 - q));
      if (mass_tail <= kBuildTailMass && moment_tail <= kBuildTailMass) break;
    }
  }
  return FockVector(std::move(c));
}

void require_fock_zeta(double zeta, const char* what) {
  if (zeta >= kFockZetaLimit) {
    throw CutoffExceeded(std::string(what) + ": zeta too close to 1 for a Fock expansion");
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::coherent:
      return "coherent";
    case Family::squeezed:
      return "squeezed";
    case Family::negbin:
      return "negbin";
    case Family::binomial:
      return "binomial";
    case Family::fock_pair:
      return "fock_pair";
  }
  return "unknown";
}

Coherent::Coherent(double alpha) : alpha_(alpha) {
  require_finite(alpha, "alpha");
  if (alpha < 0.0) throw DomainError("coherent: alpha must be >= 0");
}

Squeezed::Squeezed(double zeta) : zeta_(zeta), w_(0.0) {
  require_zeta(zeta, "squeezed");
  w_ = (1.0 - zeta) * (1.0 + zeta);
}

Squeezed Squeezed::from_complement(double one_minus_zeta_sq) {
  require_finite(one_minus_zeta_sq, "1 - zeta^2");
  if (one_minus_zeta_sq <= 0.0 || one_minus_zeta_sq > 1.0) {
    throw DomainError("squeezed: 1 - zeta^2 must lie in (0, 1]");
  }
  const double zeta = std::sqrt(1.0 - one_minus_zeta_sq);
  require_zeta(zeta, "squeezed");
  return Squeezed(zeta, one_minus_zeta_sq);
}

Squeezed Squeezed::from_parts(double zeta, double one_minus_zeta_sq) {
  require_zeta(zeta, "squeezed");
  require_finite(one_minus_zeta_sq, "1 - zeta^2");
  if (one_minus_zeta_sq <= 0.0 || one_minus_zeta_sq > 1.0 ||
      std::abs(zeta * zeta + one_minus_zeta_sq - 1.0) > kPartsTolerance) {
    throw DomainError("squeezed: inconsistent zeta and 1 - zeta^2");
  }
  return Squeezed(zeta, one_minus_zeta_sq);
}

NegBin::NegBin(double zeta, double mu) : zeta_(zeta), u_(1.0 - zeta), mu_(mu) {
  require_mu(mu);
  require_zeta(zeta, "negbin");
}

NegBin NegBin::from_complement(double one_minus_zeta, double mu) {
  require_mu(mu);
  require_finite(one_minus_zeta, "1 - zeta");
  if (one_minus_zeta <= 0.0 || one_minus_zeta > 1.0) {
    throw DomainError("negbin: 1 - zeta must lie in (0, 1]");
  }
  const double zeta = 1.0 - one_minus_zeta;
  require_zeta(zeta, "negbin");
  return NegBin(zeta, one_minus_zeta, mu);
}

NegBin NegBin::from_parts(double zeta, double one_minus_zeta, double mu) {
  require_mu(mu);
  require_zeta(zeta, "negbin");
  require_finite(one_minus_zeta, "1 - zeta");
  if (one_minus_zeta <= 0.0 || one_minus_zeta > 1.0 ||
      std::abs(zeta + one_minus_zeta - 1.0) > kPartsTolerance) {
    throw DomainError("negbin: inconsistent zeta and 1 - zeta");
  }
  return NegBin(zeta, one_minus_zeta, mu);
}

Binomial::Binomial(double p, std::int64_t big_m) : p_(p), big_m_(big_m) {
  if (big_m < 1) throw HyperParamError("binomial: M must be >= 1");
  require_finite(p, "p");
  if (p < 0.0 || p > 1.0) throw DomainError("binomial: p must lie in [0, 1]");
}

FockPair::FockPair(std::int64_t n, std::int64_t m, double beta) : n_(n), m_(m), beta_(beta) {
  if (n < 0 || m < 0) throw DomainError("fock pair: n and m must be >= 0");
  if (n == m) throw DomainError("fock pair: n and m must differ");
  require_finite(beta, "beta");
  if (std::abs(beta) > 1.0) throw DomainError("fock pair: |beta| must be <= 1");
}

Family family_of(const FamilyParam& p) {
  return std::visit(Overloaded{
                        [](const Coherent&) { return Family::coherent; },
                        [](const Squeezed&) { return Family::squeezed; },
                        [](const NegBin&) { return Family::negbin; },
                        [](const Binomial&) { return Family::binomial; },
                        [](const FockPair&) { return Family::fock_pair; },
                    },
                    p);
}

std::string describe(const FamilyParam& p) {
  std::ostringstream os;
  os.precision(12);
  std::visit(Overloaded{
                 [&](const Coherent& s) { os << "coherent(alpha=" << s.alpha() << ")"; },
                 [&](const Squeezed& s) { os << "squeezed(zeta=" << s.zeta() << ")"; },
                 [&](const NegBin& s) {
                   os << "negbin(zeta=" << s.zeta() << ", mu=" << s.mu() << ")";
                 },
                 [&](const Binomial& s) {
                   os << "binomial(p=" << s.p() << ", M=" << s.big_m() << ")";
                 },
                 [&](const FockPair& s) {
                   os << "fock_pair(n=" << s.n() << ", m=" << s.m() << ", beta=" << s.beta()
                      << ")";
                 },
             },
             p);
  return os.str();
}

FockVector build_state(const FamilyParam& param, std::size_t cap) {
  return std::visit(
      Overloaded{
          [&](const Coherent& s) {
            const double a = s.alpha();
            const double a2 = a * a;
            return grow(
                [&](std::size_t k) {
                  const double kd = static_cast<double>(k);
                  return -0.5 * a2 + xlogy(kd, a) - 0.5 * log_factorial(static_cast<std::int64_t>(k));
                },
                [&](std::size_t k) { return a2 / (static_cast<double>(k) + 1.0); }, 1, cap,
                "coherent");
          },
          [&](const Squeezed& s) {
            require_fock_zeta(s.zeta(), "squeezed");
            const double z = s.zeta();
            const double lw = std::log(s.one_minus_zeta_sq());
            return grow(
                [&](std::size_t k) {
                  const auto m = static_cast<std::int64_t>(k);
                  const double md = static_cast<double>(k);
                  return 0.25 * lw + 0.5 * log_factorial(2 * m) - md * std::log(2.0) -
                         log_factorial(m) + xlogy(md, z);
                },
                [&](std::size_t) { return z * z; }, 2, cap, "squeezed");
          },
          [&](const NegBin& s) {
            require_fock_zeta(s.zeta(), "negbin");
            const double z = s.zeta();
            const double mu = s.mu();
            const double head = mu * std::log(s.one_minus_zeta()) - log_gamma(mu);
            return grow(
                [&](std::size_t k) {
                  const double kd = static_cast<double>(k);
                  return 0.5 * (head + log_gamma(mu + kd) -
                                log_factorial(static_cast<std::int64_t>(k)) + xlogy(kd, z));
                },
                [&](std::size_t k) {
                  const double kd = static_cast<double>(k);
                  // Ratio z (mu + k)/(k + 1) decreases in k for mu >= 1 and
                  // increases toward z otherwise.
                  return mu >= 1.0 ? z * (mu + kd) / (kd + 1.0) : z;
                },
                1, cap, "negbin");
          },
          [&](const Binomial& s) {
            const std::int64_t big_m = s.big_m();
            if (static_cast<std::size_t>(big_m) > cap) {
              throw CutoffExceeded("binomial: M exceeds the cutoff cap");
            }
            const double p = s.p();
            std::vector<double> c(static_cast<std::size_t>(big_m) + 1, 0.0);
            for (std::int64_t n = 0; n <= big_m; ++n) {
              const double log_prob = log_choose(big_m, n) + xlogy(static_cast<double>(n), p) +
                                      xlogy(static_cast<double>(big_m - n), 1.0 - p);
              c[static_cast<std::size_t>(n)] = std::exp(0.5 * log_prob);
            }
            return FockVector(std::move(c));
          },
          [&](const FockPair& s) {
            const auto top = static_cast<std::size_t>(std::max(s.n(), s.m()));
            if (top > cap) throw CutoffExceeded("fock pair: max(n, m) exceeds the cutoff cap");
            std::vector<double> c(top + 1, 0.0);
            c[static_cast<std::size_t>(s.n())] = std::sqrt(1.0 - s.beta() * s.beta());
            c[static_cast<std::size_t>(s.m())] = s.beta();
            return FockVector(std::move(c));
          },
      },
      param);
}

double fidelity_closed(const FamilyParam& a, const FamilyParam& b) {
  if (a.index() != b.index()) {
    throw FamilyMismatch("fidelity_closed: " + describe(a) + " and " + describe(b) +
                         " belong to different families");
  }
  const double f = std::visit(
      Overloaded{
          [&](const Coherent& s) {
            const double d = std::get<Coherent>(b).alpha() - s.alpha();
            return std::exp(-d * d);
          },
          [&](const Squeezed& s) {
            const auto& t = std::get<Squeezed>(b);
            if (s.zeta() == t.zeta()) return 1.0;
            // sqrt(w1 w2)/(1 - z1 z2), with 1 - z1 z2 = (w1 + w2 - w1 w2)/(1 + z1 z2).
            const double w1 = s.one_minus_zeta_sq();
            const double w2 = t.one_minus_zeta_sq();
            return std::sqrt(w1 * w2) * (1.0 + s.zeta() * t.zeta()) / (w1 + w2 - w1 * w2);
          },
          [&](const NegBin& s) {
            const auto& t = std::get<NegBin>(b);
            if (s.mu() != t.mu()) throw FamilyMismatch("fidelity_closed: negbin mu differs");
            if (s.zeta() == t.zeta()) return 1.0;
            const double u1 = s.one_minus_zeta();
            const double u2 = t.one_minus_zeta();
            const double root = std::sqrt(s.zeta() * t.zeta());
            // 1 - sqrt(z1 z2) = (u1 + u2 - u1 u2)/(1 + sqrt(z1 z2)).
            const double denom = u1 + u2 - u1 * u2;
            const double ratio = u1 * u2 * (1.0 + root) * (1.0 + root) / (denom * denom);
            return std::pow(ratio, s.mu());
          },
          [&](const Binomial& s) {
            const auto& t = std::get<Binomial>(b);
            if (s.big_m() != t.big_m()) throw FamilyMismatch("fidelity_closed: binomial M differs");
            if (s.p() == t.p()) return 1.0;
            const double overlap =
                std::sqrt(s.p() * t.p()) + std::sqrt((1.0 - s.p()) * (1.0 - t.p()));
            // The bracket is the amplitude overlap; fidelity is its square.
            return std::pow(std::min(overlap, 1.0), 2.0 * static_cast<double>(s.big_m()));
          },
          [&](const FockPair& s) {
            const auto& t = std::get<FockPair>(b);
            if (s.n() != t.n() || s.m() != t.m()) {
              throw FamilyMismatch("fidelity_closed: fock pairs span different number states");
            }
            if (s.beta() == t.beta()) return 1.0;
            const double amp = std::sqrt(1.0 - s.beta() * s.beta()) *
                                   std::sqrt(1.0 - t.beta() * t.beta()) +
                               s.beta() * t.beta();
            return amp * amp;
          },
      },
      a);
  return std::clamp(f, 0.0, 1.0);
}

double energy_closed(const FamilyParam& param) {
  return std::visit(Overloaded{
                        [](const Coherent& s) { return 0.5 + s.alpha() * s.alpha(); },
                        [](const Squeezed& s) {
                          // (1 + z^2)/(2(1 - z^2)) = 1/w - 1/2
                          return 1.0 / s.one_minus_zeta_sq() - 0.5;
                        },
                        [](const NegBin& s) { return 0.5 + s.mu() * s.zeta() / s.one_minus_zeta(); },
                        [](const Binomial& s) {
                          return 0.5 + static_cast<double>(s.big_m()) * s.p();
                        },
                        [](const FockPair& s) {
                          const double b2 = s.beta() * s.beta();
                          return 0.5 + (1.0 - b2) * static_cast<double>(s.n()) +
                                 b2 * static_cast<double>(s.m());
                        },
                    },
                    param);
}

PairTradeoff fock_pair_tradeoff(std::int64_t n, std::int64_t m, double beta) {
  const FockPair pair(n, m, beta);
  const std::size_t cap = max_cutoff();
  if (static_cast<std::size_t>(n) > cap) throw CutoffExceeded("fock pair: n exceeds the cutoff cap");
  const FockVector reference = FockVector::number_state(static_cast<std::size_t>(n));
  const FockVector mixed = build_state(pair, cap);
  return {fidelity_fock(reference, mixed), mean_energy(mixed) - mean_energy(reference)};
}

double fock_pair_alternative_gap(std::int64_t n, std::int64_t m, double beta) {
  return beta * static_cast<double>(m) -
         (1.0 - std::sqrt(1.0 - beta * beta)) * static_cast<double>(n);
}

}  // namespace fidbound
