// Copyright 2026 The Qubus Cluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qubus/cli/commands.hpp"

namespace qubus::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"qubus"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (fs::path(QUBUS_TEST_TMPDIR) / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

TEST(Plan, ZigzagTwoByThree) {
  const std::string file = temp_path("zz23.json");
  const Result r = invoke({"plan", "--rows", "2", "--cols", "3", "--strategy", "zigzag2", "-o", file});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "N=12 buses=1 turns=0\n");
  EXPECT_EQ(json::parse(slurp(file))["meta"]["N"], 12);
}

TEST(Plan, StdoutCarriesTheSchedule) {
  const Result r = invoke({"plan", "-m", "2", "-n", "2", "-s", "no-reuse"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["meta"]["N"], 16);
  EXPECT_EQ(r.err, "N=16 buses=4 turns=0\n");
}

TEST(Plan, UsageErrors) {
  EXPECT_EQ(invoke({"plan", "--rows", "1", "--cols", "1", "--strategy", "zigzag2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"plan", "--rows", "2", "--cols", "2", "--strategy", "spiral"}).code, kExitUsage);
  EXPECT_EQ(invoke({"plan", "--rows", "2", "--cols", "2", "--strategy", "bricks"}).code, kExitUsage);
  EXPECT_EQ(invoke({"plan", "--rows", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"plan", "--rows", "x", "--cols", "2", "--strategy", "line"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Plan, SearchWitness) {
  const Result r = invoke({"plan", "-m", "2", "-n", "3", "-s", "search", "--width", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["strategy"], "search");
  EXPECT_EQ(invoke({"plan", "-m", "4", "-n", "4", "-s", "search"}).code, kExitUsage);
}

TEST(Simulate, RoundTripPasses) {
  for (const std::string strategy : {"zigzag2", "line", "no-reuse"}) {
    const std::string file = temp_path("rt_" + strategy + ".json");
    ASSERT_EQ(invoke({"plan", "-m", "3", "-n", "3", "-s", strategy, "-o", file}).code, kExitOk);
    const Result r = invoke({"simulate", file, "--check-stabilizers"});
    EXPECT_EQ(r.code, kExitOk) << strategy << r.err;
    const json report = json::parse(r.out);
    EXPECT_EQ(report["disentangled"], true);
    EXPECT_EQ(report["stabilizers_pass"], true);
    EXPECT_NEAR(report["min_stabilizer"].get<double>(), 1.0, 1e-9);
    EXPECT_EQ(report["schedule_valid"], true);
  }
  const std::string bricks = temp_path("rt_bricks.json");
  ASSERT_EQ(invoke({"plan", "-m", "3", "-n", "4", "-s", "bricks", "-b", "2", "-o", bricks}).code, kExitOk);
  EXPECT_EQ(invoke({"simulate", bricks, "--check-stabilizers"}).code, kExitOk);
}

TEST(Simulate, TruncatedScheduleLeavesBusEntangled) {
  const std::string file = temp_path("trunc.json");
  ASSERT_EQ(invoke({"plan", "-m", "2", "-n", "3", "-s", "zigzag2", "-o", file}).code, kExitOk);
  json j = json::parse(slurp(file));
  j["ops"].erase(j["ops"].size() - 1);
  spit(file, j.dump());
  const Result r = invoke({"simulate", file, "--check-stabilizers"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_EQ(json::parse(r.out)["disentangled"], false);
}

TEST(Simulate, Errors) {
  const std::string bad = temp_path("bad.json");
  spit(bad, "{\"lattice\": ");
  EXPECT_EQ(invoke({"simulate", bad}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", temp_path("missing.json")}).code, kExitUsage);
  const std::string big = temp_path("big.json");
  ASSERT_EQ(invoke({"plan", "-m", "3", "-n", "7", "-s", "zigzag2", "-o", big}).code, kExitOk);
  EXPECT_EQ(invoke({"simulate", big}).code, kExitResource);
}

TEST(Budget, WorkedExample) {
  const Result r = invoke({"budget", "--gamma-tau", "5e-4", "--eta", "1e-4", "--epsilon", "0.01"});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["b_lego"], 5);
  EXPECT_EQ(j["b_no_reuse"], 2);
  EXPECT_EQ(j["qubits_connected"], 17);
  EXPECT_EQ(j["gates"], 20);
  EXPECT_EQ(j["epsilon_at_b"].get<double>(), 0.00997005289958);
  EXPECT_EQ(j["reuse_advantage"]["lego_better"], true);
}

TEST(Budget, Csv) {
  const Result r = invoke({"budget", "--gamma-tau", "5e-4", "--eta", "1e-4", "--epsilon", "0.01", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "b_lego,b_no_reuse,epsilon_at_b,qubits_connected,gates,lego_better\n"
            "5,2,9.97005289958e-03,17,20,true\n");
}

TEST(Budget, EdgeCases) {
  EXPECT_EQ(invoke({"budget", "--gamma-tau", "5e-4", "--eta", "1e-4", "--epsilon", "0.6"}).code, kExitUsage);
  EXPECT_EQ(invoke({"budget", "--gamma-tau", "-1", "--eta", "1e-4", "--epsilon", "0.01"}).code, kExitUsage);
  const Result r = invoke({"budget", "--gamma-tau", "0", "--eta", "0", "--epsilon", "0.01"});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["b_lego"], "no-limit");
  EXPECT_EQ(j["b_no_reuse"], "no-limit");
}

TEST(Parallel, WidthFour) {
  const Result r = invoke({"parallel", "--width", "4", "--buses", "2"});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["conflicts"], 0);
  EXPECT_EQ(j["gates_per_brick"][0][1], 20);
  EXPECT_EQ(j["makespan_slots"], 46);
}

TEST(Parallel, SingleBusMatchesPlan) {
  const Result par = invoke({"parallel", "--width", "2", "--buses", "1", "--horizon", "5", "-o", temp_path("p.json")});
  const Result pl = invoke({"plan", "-m", "2", "-n", "5", "-s", "zigzag2", "-o", temp_path("z.json")});
  EXPECT_EQ(par.code, kExitOk);
  EXPECT_EQ(par.out.substr(0, par.out.find(' ')), pl.out.substr(0, pl.out.find(' ')));
}

TEST(Parallel, Errors) {
  EXPECT_EQ(invoke({"parallel", "--width", "3", "--pitch", "one-per-two-rows"}).code, kExitUsage);
  EXPECT_EQ(invoke({"parallel", "--width", "4", "--pitch", "zigzag"}).code, kExitUsage);
  EXPECT_EQ(invoke({"parallel", "--width", "4", "--buses", "3"}).code, kExitUsage);
  const Result tight = invoke({"parallel", "--width", "4", "--stagger", "5"});
  EXPECT_EQ(tight.code, kExitVerificationFailed);
  EXPECT_NE(tight.err.find("qubit-collision"), std::string::npos);
  EXPECT_EQ(invoke({"parallel", "--width", "4", "--horizon", "6", "--verify"}).code, kExitResource);
}

TEST(Parallel, VerifyAndCsv) {
  const Result v = invoke({"parallel", "--width", "4", "--horizon", "4", "--brick-length", "2", "--verify"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(json::parse(v.out)["stabilizers_pass"], true);
  const Result csv = invoke({"parallel", "--width", "4", "--format", "csv", "--tau", "1e-6"});
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "slot,time_s,bus_0,bus_1");
  EXPECT_NE(csv.out.find("\n0,0.00000000000e+00,attach "), std::string::npos);
}

TEST(Determinism, ByteIdenticalOutput) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"plan", "-m", "4", "-n", "5", "-s", "bricks", "-b", "3"},
           {"budget", "--gamma-tau", "3e-4", "--eta", "2e-5", "--epsilon", "0.02"},
           {"parallel", "--width", "6", "--pitch", "one-per-row", "--horizon", "9"}}) {
    std::vector<const char*> argv{"qubus"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o1, o2, e1, e2;
    ASSERT_EQ(run(static_cast<int>(argv.size()), argv.data(), o1, e1), kExitOk);
    ASSERT_EQ(run(static_cast<int>(argv.size()), argv.data(), o2, e2), kExitOk);
    EXPECT_EQ(o1.str(), o2.str());
  }
}

TEST(Format, RoundFloats) {
  nlohmann::ordered_json j = {{"a", 0.1 + 0.2}, {"b", {1.0 / 3.0, 7}}};
  EXPECT_EQ(dump(j), "{\n  \"a\": 0.3,\n  \"b\": [\n    0.333333333333,\n    7\n  ]\n}\n");
}

}  // namespace
}  // namespace qubus::cli
