// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fidbound/bounds.hpp"
#include "fidbound/cli.hpp"
#include "fidbound/error.hpp"
#include "fidbound/families.hpp"
#include "fidbound/search.hpp"

namespace py = pybind11;
using namespace fidbound;

namespace {

FamilySpec make_spec(const std::string& family, std::optional<double> mu, std::optional<std::int64_t> big_m) {
  if (family == "coherent") return FamilySpec::coherent();
  if (family == "squeezed") return FamilySpec::squeezed();
  if (family == "phase") return FamilySpec::phase();
  if (family == "negbin") {
    if (!mu) throw HyperParamError("negbin requires mu");
    return FamilySpec::negbin(*mu);
  }
  if (family == "binomial") {
    if (!big_m) throw HyperParamError("binomial requires big_m");
    return FamilySpec::binomial(*big_m);
  }
  throw DomainError("unknown family: " + family);
}

py::dict report_dict(const VerifyReport& r) {
  py::dict d;
  d["family"] = std::string(family_name(r.spec.family()));
  d["hyper"] = r.spec.hyper();
  d["rel"] = r.rel;
  d["sym"] = r.sym;
  d["f_closed"] = r.f_closed;
  d["f_oracle"] = r.f_oracle;
  d["param_closed"] = r.param_closed;
  d["param_oracle"] = r.param_oracle;
  d["abs_gap"] = r.abs_gap;
  d["branch"] = std::string(branch_name(r.branch));
  d["boundary_monotone"] = r.boundary_monotone;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_fidbound, m) {
  m.doc() = "Maximal pure-state fidelity at a fixed relative energy gap.";

  auto base = py::register_exception<Error>(m, "FidboundError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<CutoffExceeded>(m, "CutoffExceeded", base.ptr());

  m.def("y_from_e", &y_from_e, py::arg("rel"));
  m.def("e_from_y", &e_from_y, py::arg("sym"), py::arg("sign") = 1);

  m.def(
      "fmax",
      [](const std::string& family, double sym, int sign, std::optional<double> mu,
         std::optional<std::int64_t> big_m) {
        const auto r = fmax(make_spec(family, mu, big_m), sym, sign);
        return std::make_tuple(r.f_max, r.extremal_param, std::string(branch_name(r.branch)));
      },
      py::arg("family"), py::arg("sym"), py::arg("sign") = 1, py::arg("mu") = py::none(),
      py::arg("big_m") = py::none(),
      "Returns (f_max, extremal parameter, branch name) at symmetric gap `sym`.");

  m.def(
      "ymax_for_fidelity",
      [](const std::string& family, double f, std::optional<double> mu, std::optional<std::int64_t> big_m) {
        return ymax_for_fidelity(make_spec(family, mu, big_m), f);
      },
      py::arg("family"), py::arg("f"), py::arg("mu") = py::none(), py::arg("big_m") = py::none());

  m.def(
      "verify",
      [](const std::string& family, double rel, std::optional<double> mu, std::optional<std::int64_t> big_m,
         std::size_t grid) {
        GridSpec g;
        g.coarse_points = grid;
        return report_dict(oracle_max_fidelity(make_spec(family, mu, big_m), rel, g));
      },
      py::arg("family"), py::arg("rel"), py::arg("mu") = py::none(), py::arg("big_m") = py::none(),
      py::arg("grid") = GridSpec{}.coarse_points,
      "Brute-force maximum compared with the closed form; returns a dict.");

  m.def(
      "pair_tradeoff",
      [](std::int64_t n, std::int64_t mm, double beta) {
        const auto t = fock_pair_tradeoff(n, mm, beta);
        return std::make_tuple(t.fidelity, t.delta_e);
      },
      py::arg("n"), py::arg("m"), py::arg("beta"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
