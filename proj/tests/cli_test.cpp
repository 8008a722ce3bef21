// Copyright 2026 The Cantor Representation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_harness.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <fstream>

namespace cantor::testing {
namespace {

std::string write_temp(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << contents;
  return path;
}

TEST(Cli, RepresentCenterNode) {
  const auto points = write_temp("center.json", R"({"path":[],"node":"c"})");
  const RunResult r = run_cli("represent --pattern " + corpus("three_od.json") + " --points " + points);
  ASSERT_EQ(r.status, 0) << r.output;
  const auto rows = nlohmann::json::parse(r.output);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0]["fiber"].size(), 3U);
}

TEST(Cli, RepresentDyadicArcPoint) {
  const auto points = write_temp("half.json", R"([{"arc":1,"t":"1/2"}])");
  const RunResult r = run_cli("represent --pattern " + corpus("arc.json") + " --points " + points);
  ASSERT_EQ(r.status, 0);
  const auto rows = nlohmann::json::parse(r.output);
  EXPECT_EQ(rows[0]["fiber"], (nlohmann::json{"0(1)", "1(0)"}));
}

TEST(Cli, RepresentTableWithoutPoints) {
  const RunResult r = run_cli("represent --pattern " + corpus("three_od.json") + " --samples 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.output).size(), 7U);
}

TEST(Cli, UnresolvablePointExitsOne) {
  const auto points = write_temp("bad_points.json", R"([{"arc":1,"t":"1/2"},{"path":[5],"node":"x"}])");
  const RunResult r = run_cli("represent --pattern " + corpus("arc.json") + " --points " + points);
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(nlohmann::json::parse(r.output).size(), 1U);
}

TEST(Cli, MalformedPatternExitsTwo) {
  const auto bad = write_temp("malformed.json", "{\"type\": \"graph\", \"nodes\": [\n");
  EXPECT_EQ(run_cli("represent --pattern " + bad + " --samples 2").status, 2);
  EXPECT_EQ(run_cli("embed --pattern " + bad).status, 2);
  EXPECT_EQ(run_cli("represent --pattern " + corpus("arc.json")).status, 2);
  EXPECT_EQ(run_cli("verify --depth 0").status, 2);
  EXPECT_EQ(run_cli("frobnicate").status, 2);
}

TEST(Cli, EmbedSingleArc) {
  const RunResult r = run_cli("embed --pattern " + corpus("arc.json") + " --samples 2 --precision 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.output,
            "cluster_path,location,t,sequence,cmts,cmts_decimal\n"
            ",node:e1,,(0),0/1,0.000\n"
            ",node:e2,,(1),1/1,1.000\n"
            ",arc:1,1/2,0(1),1/3,0.333\n"
            ",arc:1,1/2,1(0),2/3,0.667\n");
}

TEST(Cli, VerifyDefaultAndInjectedFault) {
  const RunResult ok = run_cli("verify --count 100");
  EXPECT_EQ(ok.status, 0);
  EXPECT_TRUE(nlohmann::json::parse(ok.output)["passed"].get<bool>());
  const RunResult fault = run_cli("verify --count 100 --inject-fault");
  EXPECT_EQ(fault.status, 1);
  EXPECT_NE(fault.output.find("fault.literal-second-level-partition"), std::string::npos);
}

}  // namespace
}  // namespace cantor::testing
