// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "fidbound/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fidbound/bounds.hpp"
#include "fidbound/error.hpp"
#include "fidbound/families.hpp"
#include "fidbound/records.hpp"
#include "fidbound/search.hpp"

namespace fidbound {

namespace {

struct FamilyFlags {
  std::string family;
  std::optional<double> mu;
  std::optional<std::int64_t> big_m;

  FamilySpec resolve() const {
    const bool negbin = family == "negbin";
    const bool binomial = family == "binomial";
    if (mu && !negbin) throw DomainError("--mu applies only to --family negbin");
    if (big_m && !binomial) throw DomainError("--big-m applies only to --family binomial");
    if (family == "coherent") return FamilySpec::coherent();
    if (family == "squeezed") return FamilySpec::squeezed();
    if (family == "phase") return FamilySpec::phase();
    if (negbin) {
      if (!mu) throw DomainError("--family negbin requires --mu");
      return FamilySpec::negbin(*mu);
    }
    if (binomial) {
      if (!big_m) throw DomainError("--family binomial requires --big-m");
      return FamilySpec::binomial(*big_m);
    }
    throw DomainError("unknown family '" + family + "'");
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "coherent, squeezed, negbin, binomial or phase")
        ->required();
    cmd->add_option("--mu", mu, "negative binomial mu (> 0)");
    cmd->add_option("--big-m", big_m, "binomial M (>= 1)");
  }
};

struct EnergyFlags {
  std::optional<double> rel;
  std::optional<double> sym;
  int sign = 1;

  void attach(CLI::App* cmd) {
    auto* r = cmd->add_option("--rel-energy", rel, "relative energy difference (E2 - E1)/E1");
    auto* s = cmd->add_option("--sym-energy", sym, "symmetric difference |E2 - E1|/sqrt(E1 E2)");
    r->excludes(s);
    cmd->add_option("--sign", sign, "branch used with --sym-energy (+1 or -1)")
        ->check(CLI::IsMember({1, -1}));
  }

  EnergyGap resolve() const {
    if (rel) return EnergyGap::from_rel(*rel);
    if (sym) return EnergyGap::from_sym(*sym, sign);
    throw DomainError("one of --rel-energy or --sym-energy is required");
  }
};

void write_lines(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [key, value] : rows) {
    out << key << ':';
    if (!value.empty()) out << ' ' << value;
    out << '\n';
  }
}

void emit_records(std::ostream& out, const std::vector<OutputRecord>& records, const std::string& format) {
  if (format == "csv") {
    out << to_csv(records);
  } else if (format == "json") {
    out << to_json(records);
  } else {
    for (const auto& r : records) {
      write_lines(out, {{"family", r.family},
                        {"hyper", r.hyper ? format_real(*r.hyper) : ""},
                        {"y", format_real(r.y)},
                        {"e_rel", format_real(r.e_rel)},
                        {"f_max", format_real(r.f_max)},
                        {"param_star", format_real(r.param_star)},
                        {"branch", r.branch}});
    }
  }
}

int cmd_bound(const FamilyFlags& fam, const EnergyFlags& energy, const std::string& format,
              std::ostream& out) {
  const FamilySpec spec = fam.resolve();
  const EnergyGap gap = energy.resolve();
  const BoundResult b = fmax(spec, gap.sym(), gap.sign());
  emit_records(out, {{fam.family, spec.hyper(), gap.sym(), gap.rel(), b.f_max, b.extremal_param,
                      std::string(branch_name(b.branch))}},
               format);
  return kExitOk;
}

int cmd_verify(const FamilyFlags& fam, const EnergyFlags& energy, const GridSpec& grid,
               const std::string& format, std::ostream& out) {
  const FamilySpec spec = fam.resolve();
  const EnergyGap gap = energy.resolve();
  const VerifyReport r = oracle_max_fidelity(spec, gap.rel(), grid);
  const bool ok = r.passed();
  const double tol = r.branch == Branch::interior ? kInteriorTolerance : kBoundaryTolerance;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["family"] = fam.family;
    doc["hyper"] = spec.hyper() ? nlohmann::ordered_json(*spec.hyper()) : nlohmann::ordered_json();
    doc["e_rel"] = round_to_12(r.rel);
    doc["y"] = round_to_12(r.sym);
    doc["f_closed"] = round_to_12(r.f_closed);
    doc["f_oracle"] = round_to_12(r.f_oracle);
    doc["abs_gap"] = round_to_12(r.abs_gap);
    doc["tolerance"] = tol;
    doc["param_closed"] = round_to_12(r.param_closed);
    doc["param_oracle"] = round_to_12(r.param_oracle);
    doc["branch"] = branch_name(r.branch);
    doc["grid_points"] = r.grid.coarse_points;
    doc["refine_tol"] = r.grid.refine_tol;
    doc["boundary_margin"] = r.grid.boundary_margin;
    doc["feasible_points"] = r.feasible_points;
    doc["infeasible_points"] = r.infeasible_points;
    auto seq = nlohmann::ordered_json::array();
    for (const auto& p : r.boundary_sequence) {
      seq.push_back({round_to_12(p.param), round_to_12(p.fidelity)});
    }
    doc["boundary_sequence"] = std::move(seq);
    doc["boundary_monotone"] = r.boundary_monotone;
    doc["status"] = ok ? "pass" : "fail";
    out << doc.dump(2) << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows{
        {"family", fam.family},
        {"hyper", spec.hyper() ? format_real(*spec.hyper()) : ""},
        {"e_rel", format_real(r.rel)},
        {"y", format_real(r.sym)},
        {"f_closed", format_real(r.f_closed)},
        {"f_oracle", format_real(r.f_oracle)},
        {"abs_gap", format_real(r.abs_gap)},
        {"tolerance", format_real(tol)},
        {"param_closed", format_real(r.param_closed)},
        {"param_oracle", format_real(r.param_oracle)},
        {"branch", std::string(branch_name(r.branch))},
        {"grid_points", std::to_string(r.grid.coarse_points)},
        {"refine_tol", format_real(r.grid.refine_tol)},
        {"boundary_margin", format_real(r.grid.boundary_margin)},
        {"feasible_points", std::to_string(r.feasible_points)},
        {"infeasible_points", std::to_string(r.infeasible_points)},
    };
    for (const auto& p : r.boundary_sequence) {
      rows.emplace_back("boundary", format_real(p.param) + " " + format_real(p.fidelity));
    }
    if (r.branch == Branch::boundary_supremum) {
      rows.emplace_back("boundary_monotone", r.boundary_monotone ? "yes" : "no");
    }
    rows.emplace_back("status", ok ? "pass" : "fail");
    write_lines(out, rows);
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_scan(const FamilyFlags& fam, double y_min, double y_max, int steps, const std::string& format,
             std::ostream& out) {
  const FamilySpec spec = fam.resolve();
  if (!(y_min >= 0.0)) throw DomainError("--y-min must be >= 0");
  if (!(y_max >= y_min)) throw DomainError("--y-max must be >= --y-min");
  if (steps < 1) throw DomainError("--steps must be >= 1");
  std::vector<double> ys;
  ys.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    ys.push_back(i == steps ? y_max : y_min + (y_max - y_min) * i / steps);
  }
  std::vector<OutputRecord> records;
  for (const auto& s : scan_tradeoff(spec, ys)) {
    records.push_back({fam.family, spec.hyper(), s.sym, s.rel_pos, s.f_max, s.extremal_param,
                       std::string(branch_name(s.branch))});
  }
  emit_records(out, records, format);
  return kExitOk;
}

int cmd_pair(std::int64_t n, std::int64_t m, double beta, const std::string& format, std::ostream& out) {
  const PairTradeoff t = fock_pair_tradeoff(n, m, beta);
  const double alt = fock_pair_alternative_gap(n, m, beta);
  const std::string note =
      "delta_e is the expectation-value gap beta^2 (m - n); the expression "
      "beta*m - (1 - sqrt(1 - beta^2))*n gives " +
      format_real(alt) + " here and does not describe this pair";
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["m"] = m;
    doc["beta"] = round_to_12(beta);
    doc["fidelity"] = round_to_12(t.fidelity);
    doc["delta_e"] = round_to_12(t.delta_e);
    doc["alternative_gap"] = round_to_12(alt);
    doc["note"] = note;
    out << doc.dump(2) << '\n';
  } else {
    write_lines(out, {{"n", std::to_string(n)},
                      {"m", std::to_string(m)},
                      {"beta", format_real(beta)},
                      {"fidelity", format_real(t.fidelity)},
                      {"delta_e", format_real(t.delta_e)},
                      {"note", note}});
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal fidelity between oscillator states at a fixed relative energy difference",
               "fidbound"};
  app.require_subcommand(1);

  FamilyFlags bound_family;
  EnergyFlags bound_energy;
  std::string bound_format = "text";
  auto* bound = app.add_subcommand("bound", "closed-form maximal fidelity");
  bound_family.attach(bound);
  bound_energy.attach(bound);
  bound->add_option("--format", bound_format)->check(CLI::IsMember({"text", "csv", "json"}));

  FamilyFlags verify_family;
  EnergyFlags verify_energy;
  GridSpec grid;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "check the bound against the brute-force oracle");
  verify_family.attach(verify);
  verify_energy.attach(verify);
  verify->add_option("--grid", grid.coarse_points, "coarse grid points");
  verify->add_option("--refine-tol", grid.refine_tol, "golden-section interval width");
  verify->add_option("--boundary-margin", grid.boundary_margin, "exclusion near zeta = 1");
  verify->add_option("--alpha-max", grid.alpha_max, "upper end of the coherent sweep");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  FamilyFlags scan_family;
  double y_min = 0.0;
  double y_max = 0.0;
  int steps = 1;
  std::string scan_format = "csv";
  auto* scan = app.add_subcommand("scan", "bound table over a range of Y");
  scan_family.attach(scan);
  scan->add_option("--y-min", y_min)->required();
  scan->add_option("--y-max", y_max)->required();
  scan->add_option("--steps", steps)->required();
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"csv", "json"}));

  std::int64_t pair_n = 0;
  std::int64_t pair_m = 0;
  double pair_beta = 0.0;
  std::string pair_format = "text";
  auto* pair = app.add_subcommand("pair", "number state vs. two-state superposition");
  pair->add_option("--n", pair_n)->required();
  pair->add_option("--m", pair_m)->required();
  pair->add_option("--beta", pair_beta)->required();
  pair->add_option("--format", pair_format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fidbound: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (bound->parsed()) return cmd_bound(bound_family, bound_energy, bound_format, out);
    if (verify->parsed()) return cmd_verify(verify_family, verify_energy, grid, verify_format, out);
    if (scan->parsed()) return cmd_scan(scan_family, y_min, y_max, steps, scan_format, out);
    if (pair->parsed()) return cmd_pair(pair_n, pair_m, pair_beta, pair_format, out);
  } catch (const Error& e) {
    err << "fidbound: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace fidbound
