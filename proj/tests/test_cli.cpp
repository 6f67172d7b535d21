// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fidbound/cli.hpp"
#include "fidbound/error.hpp"
#include "fidbound/records.hpp"
#include "oracles.hpp"

using namespace fidbound;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bound: pinned csv output") {
  const auto r = run({"bound", "--family", "negbin", "--mu", "2", "--rel-energy", "1", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "family,hyper,y,e_rel,f_max,param_star,branch\n"
        "negbin,2,0.707106781187,1,0.835918367347,0.238095238095,interior\n");
}

TEST_CASE("bound: pinned text output") {
  const auto r = run({"bound", "--family", "coherent", "--rel-energy", "0.1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "family: coherent\nhyper:\ny: 0.0953462589246\ne_rel: 0.1\nf_max: 0.995464860398\n"
        "param_star: 0.674199862463\nbranch: interior\n");
}

TEST_CASE("scan: pinned csv output") {
  const auto r = run({"scan", "--family", "binomial", "--big-m", "2", "--y-min", "0", "--y-max", "1",
                      "--steps", "3", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "family,hyper,y,e_rel,f_max,param_star,branch\n"
        "binomial,2,0,0,1,0.166666666667,interior\n"
        "binomial,2,0.333333333333,0.393486807239,0.931761188272,0.10783839664,interior\n"
        "binomial,2,0.666666666667,0.924950591149,0.741512345679,0.0665612194366,interior\n"
        "binomial,2,1,1.61803398875,0.47265625,0.0379095856771,interior\n");
}

TEST_CASE("pair: reports the expectation-value gap and the note") {
  const auto r = run({"pair", "--n", "0", "--m", "100", "--beta", "0.1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("fidelity: 0.99\n") != std::string::npos);
  CHECK(r.out.find("delta_e: 1\n") != std::string::npos);
  CHECK(r.out.find("note: ") != std::string::npos);
}

TEST_CASE("phase is an alias for negbin with mu = 1") {
  const auto r = run({"bound", "--family", "phase", "--sym-energy", "1", "--sign", "-1", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto recs = parse_json(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].family == "phase");
  CHECK(recs[0].hyper == 1.0);
  CHECK(recs[0].f_max == 0.8);
  CHECK(recs[0].branch == "boundary_supremum");
}

TEST_CASE("output is deterministic across runs") {
  const std::vector<std::string> args = {"scan", "--family", "negbin", "--mu", "0.3", "--y-max", "2",
                                         "--steps", "50", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run({"bound", "--family", "binomial", "--big-m", "3", "--sym-energy", "2.27"}).code == kExitInputError);
  CHECK(run({"bound", "--family", "negbin", "--mu", "0", "--rel-energy", "1"}).code == kExitInputError);
  CHECK(run({"bound", "--family", "squeezed", "--rel-energy", "-1"}).code == kExitInputError);
  CHECK(run({"bound", "--family", "coherent"}).code == kExitInputError);
  CHECK(run({"bound", "--family", "nope", "--rel-energy", "1"}).code == kExitInputError);
  CHECK(run({"pair", "--n", "2", "--m", "2", "--beta", "0.5"}).code == kExitInputError);
  CHECK(run({"verify", "--family", "coherent", "--rel-energy", "1", "--grid", "1"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);

  const auto ok = run({"verify", "--family", "squeezed", "--rel-energy", "0.3"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("status: pass\n") != std::string::npos);

  const auto bad = run({"verify", "--family", "coherent", "--rel-energy", "1", "--grid", "3", "--refine-tol", "0.5"});
  CHECK(bad.code == kExitVerifyFailed);
  CHECK(bad.out.find("status: fail\n") != std::string::npos);

  const auto err = run({"bound", "--family", "binomial", "--big-m", "3", "--sym-energy", "2.27"});
  CHECK(err.out.empty());
  CHECK_FALSE(err.err.empty());
}

TEST_CASE("records round-trip through csv and json") {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<OutputRecord> recs;
    const auto n = testing::uniform_int(0, 5);
    for (std::int64_t i = 0; i < n; ++i) {
      OutputRecord r;
      r.family = testing::uniform_int(0, 1) ? "negbin" : "coherent";
      if (r.family == "negbin") r.hyper = round_to_12(testing::uniform(0.01, 100.0));
      r.y = round_to_12(testing::uniform(0.0, 10.0));
      r.e_rel = round_to_12(testing::uniform(-0.99, 50.0));
      r.f_max = round_to_12(testing::uniform(0.0, 1.0));
      r.param_star = round_to_12(std::pow(10.0, testing::uniform(-14.0, 1.0)));
      r.branch = testing::uniform_int(0, 1) ? "interior" : "boundary_supremum";
      recs.push_back(r);
    }
    CHECK(parse_csv(to_csv(recs)) == recs);
    CHECK(parse_json(to_json(recs)) == recs);
    CHECK(to_csv(parse_csv(to_csv(recs))) == to_csv(recs));
  }
}

TEST_CASE("format_real") {
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(0.1 + 0.2) == "0.3");
  CHECK(format_real(1e-20) == "1e-20");
}
