// Copyright 2026 The jetsolve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "app.hpp"

namespace jetsolve {
namespace {

using json = nlohmann::ordered_json;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(cli::Options o) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(o, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

cli::Options text(const std::string& command, const std::string& description) {
  cli::Options o;
  o.command = command;
  o.text = description;
  return o;
}

cli::Options fixture(const std::string& command, const std::string& name) {
  cli::Options o;
  o.command = command;
  o.fixture = name;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kLinear = "field Fp 5; vars x1 x2; unknown Y1 in [x1]; eq Y1 - x1; order 3;";

TEST(Cli, SolveLinear) {
  const auto r = run(text("solve", kLinear));
  ASSERT_EQ(r.code, cli::kSat) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["command"], "solve");
  EXPECT_EQ(j["result"]["outcome"], "sat");
  EXPECT_EQ(j["result"]["jets"][0], "x1 + O(x)^3 [J = {x1}]");
  EXPECT_NE(r.err.find("sat"), std::string::npos);
}

TEST(Cli, DecideTrap) {
  const auto r = run(fixture("decide", "enum-trap:p=5"));
  ASSERT_EQ(r.code, cli::kUnsat) << r.err;
  EXPECT_EQ(r.report()["result"]["unsat_prefix"], 5);

  auto o = fixture("decide", "enum-trap:p=5");
  o.prefix = 4;
  const auto s = run(o);
  ASSERT_EQ(s.code, cli::kSat) << s.err;
  EXPECT_EQ(s.report()["result"]["assignments"][0]["x1"], "4");
}

TEST(Cli, FlattenMatchesGolden) {
  auto o = text("flatten", read_file(std::string(JETSOLVE_GOLDEN_DIR) + "/linear.jet"));
  o.emit_system = true;
  const auto r = run(o);
  ASSERT_EQ(r.code, cli::kSat) << r.err;
  const json golden = json::parse(read_file(std::string(JETSOLVE_GOLDEN_DIR) + "/linear.system.json"));
  EXPECT_EQ(r.report()["result"], golden);
}

TEST(Cli, WitnessBranches) {
  auto o = text("solve", read_file(std::string(JETSOLVE_GOLDEN_DIR) + "/square.jet"));
  o.witness_all = true;
  const auto r = run(o);
  ASSERT_EQ(r.code, cli::kSat) << r.err;
  const json j = r.report()["result"];
  ASSERT_TRUE(j.contains("branches"));
  ASSERT_EQ(j["branches"].size(), 3u);
  std::vector<std::string> outcomes;
  for (const auto& b : j["branches"]) outcomes.push_back(b["report"]["outcome"]);
  EXPECT_EQ(outcomes, (std::vector<std::string>{"unsat", "sat", "unsat"}));
}

TEST(Cli, PdeExponential) {
  const auto r = run(text("pde",
                          "field Q; vars x1; unknown z1 in [x1]; eq D[z1, x1] - z1; coeff z1 [] = 1; order 6;"));
  ASSERT_EQ(r.code, cli::kSat) << r.err;
  const json j = r.report()["result"];
  EXPECT_EQ(j["jets"][0],
            "1 + x1 + 1/2*x1^2 + 1/6*x1^3 + 1/24*x1^4 + 1/120*x1^5 + O(x)^6 [J = {x1}]");
  EXPECT_EQ(j["derivatives"][0]["name"], "D[z1, x1]");
}

TEST(Cli, NuAndTau) {
  auto o = text("nu", "field Fp 2; vars x1; unknown Y1 in [x1]; eq Y1 - x1; ord Y1 = 1;");
  o.c_max = 4;
  o.nu_max = 4;
  const auto r = run(o);
  ASSERT_EQ(r.code, cli::kSat) << r.err;
  EXPECT_EQ(r.report()["result"]["nu"], 2);

  auto t = text("tau", "field Fp 2; vars x1; unknown z1 in [x1]; eq D[z1, x1] - 1; ord z1 = 1; ord D[z1, x1] = 0;");
  t.c_max = 3;
  t.nu_max = 4;
  const auto s = run(t);
  ASSERT_EQ(s.code, cli::kSat) << s.err;
  EXPECT_EQ(s.report()["result"]["nu"], 2);

  auto nf = text("nu", "field Fp 2; vars x1; unknown Y1 in [x1]; eq Y1^2; ord Y1 = 2;");
  nf.c_max = 6;
  nf.nu_max = 4;
  EXPECT_EQ(run(nf).code, cli::kInconclusive);
}

TEST(Cli, ChainAndFixture) {
  const auto r = run(fixture("chain", "enum-trap:p=3"));
  ASSERT_EQ(r.code, cli::kSat) << r.err;
  EXPECT_EQ(r.report()["result"]["stabilized_at"], 3);
  const auto f = run(fixture("fixture", "nested-linear:n=2"));
  ASSERT_EQ(f.code, cli::kSat) << f.err;
  EXPECT_EQ(run(fixture("solve", "nested-linear:n=2")).code, cli::kSat);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run(text("solve", "field Fp 5; vars x1 x2; unknown Y1 in [x1]; eq Y1 -")).code, cli::kUsage);
  EXPECT_EQ(run(text("solve", "field Fp 5; vars x1 x2; unknown Y1 in [x9]; eq Y1;")).code, cli::kUsage);
  EXPECT_EQ(run(text("solve", "field Fp 5; vars x1; unknown Y1 in [x1]; eq Y1;")).code, cli::kUsage);
  EXPECT_EQ(run(fixture("decide", "no-such-fixture")).code, cli::kUsage);
  auto bad = text("solve", kLinear);
  bad.method = "magic";
  EXPECT_EQ(run(bad).code, cli::kUsage);
  const auto r = run(text("frobnicate", kLinear));
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UnsatAndInconclusive) {
  EXPECT_EQ(run(text("solve", "field Q; vars x1 x2; unknown Y1 in [x1]; eq Y1 - x2; order 2;")).code, cli::kUnsat);
  auto real = fixture("decide", "real-trap:l=5");
  real.prefix = 3;
  EXPECT_EQ(run(real).code, cli::kInconclusive);
  auto tight = fixture("decide", "enum-trap:p=7");
  tight.budget = 5;
  EXPECT_EQ(run(tight).code, cli::kInconclusive);
}

TEST(Cli, ReportsAreByteIdentical) {
  const std::vector<cli::Options> commands{text("solve", kLinear), fixture("decide", "enum-trap:p=3"),
                                           fixture("chain", "inverse-chain:p=3"), fixture("fixture", "enum-trap:p=5")};
  for (const auto& o : commands) {
    const auto a = run(o), b = run(o);
    EXPECT_EQ(a.out, b.out) << o.command;
    EXPECT_EQ(a.code, b.code);
  }
  auto par = text("solve", kLinear);
  par.jobs = 4;
  EXPECT_EQ(run(par).out, run(text("solve", kLinear)).out);
}

#ifdef JETSOLVE_CLI_PATH
int shell(const std::string& args) {
  const std::string cmd = std::string(JETSOLVE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ProcessExitCodes) {
  EXPECT_EQ(shell("decide --fixture enum-trap:p=5"), 1);
  EXPECT_EQ(shell("decide --fixture enum-trap:p=5 --prefix 4"), 0);
  EXPECT_EQ(shell("solve " + std::string(JETSOLVE_GOLDEN_DIR) + "/linear.jet"), 0);
  EXPECT_EQ(shell("decide --fixture real-trap:l=5 --prefix 3"), 2);
  EXPECT_EQ(shell("solve"), 3);
  EXPECT_EQ(shell("solve --no-such-flag x"), 3);
}

TEST(Cli, ProcessReadsStdin) {
  const std::string cmd = "printf '%s' '" + std::string(kLinear) + "' | " + JETSOLVE_CLI_PATH + " solve - 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_EQ(json::parse(out)["result"]["outcome"], "sat");
}
#endif

}  // namespace
}  // namespace jetsolve
