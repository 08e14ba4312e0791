// Copyright 2026 The addcomb Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "addcomb/json_io.h"

namespace addcomb::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("addcomb_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Build(const std::string& name, std::vector<std::string> args) {
    args.insert(args.begin(), "build");
    args.push_back("--out");
    args.push_back(Path(name));
    const auto r = Cli(args);
    EXPECT_EQ(r.code, kExitPass) << r.err;
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, BuildW) {
  const auto r = Cli({"build", "--kind", "W", "--k", "3", "--n", "10"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto set = ParseSetFile(Json::parse(r.out));
  EXPECT_EQ(set.family->size(), 36u);
}

TEST_F(CliTest, BuildSummaries) {
  const auto meyer = Cli({"build", "--kind", "meyer", "--nmax", "9", "--out", Path("m.json")});
  EXPECT_EQ(Json::parse(meyer.out)["results"]["union_size"], 45);
  const auto wc = Cli({"build", "--kind", "Wcirc", "--k", "3", "--n", "30", "--out", Path("w.json")});
  EXPECT_FALSE(Json::parse(wc.out)["results"]["warnings"].empty());
}

TEST_F(CliTest, BuildConfigErrors) {
  EXPECT_EQ(Cli({"build", "--kind", "nope"}).code, kExitConfigError);
  EXPECT_EQ(Cli({"build", "--kind", "W", "--k", "0", "--n", "3"}).code, kExitConfigError);
  EXPECT_EQ(Cli({"build", "--kind", "Wcirc", "--k", "5", "--n", "2"}).code, kExitConfigError);
  EXPECT_EQ(Cli({"build"}).code, kExitConfigError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitConfigError);
  EXPECT_EQ(Cli({"--help"}).code, kExitPass);
}

TEST_F(CliTest, BuildResourceCap) {
  ::setenv("ADDCOMB_ELEMENT_CAP", "100", 1);
  const auto r = Cli({"build", "--kind", "product", "--k", "3", "--n", "10"});
  ::unsetenv("ADDCOMB_ELEMENT_CAP");
  EXPECT_EQ(r.code, kExitResourceCap);
  ::setenv("ADDCOMB_ELEMENT_CAP", "abc", 1);
  EXPECT_EQ(Cli({"build", "--kind", "W", "--k", "3", "--n", "10"}).code, kExitConfigError);
  ::unsetenv("ADDCOMB_ELEMENT_CAP");
}

TEST_F(CliTest, AnalyzeExitCodes) {
  const auto w = Build("w.json", {"--kind", "W", "--k", "3", "--n", "10"});
  const auto pass = Cli({"analyze", w, "--check", "b2circ", "--g", "2"});
  EXPECT_EQ(pass.code, kExitPass) << pass.err;

  const auto census = Cli({"analyze", w, "--check", "census"});
  EXPECT_EQ(census.code, kExitPass);
  EXPECT_EQ(Json::parse(census.out)["results"]["census"]["anomalies"], 0);

  const auto ints = Build("a.json", {"--kind", "integers", "--values", "0,1,2,3"});
  const auto fail = Cli({"analyze", ints, "--check", "b2", "--g", "1"});
  EXPECT_EQ(fail.code, kExitVerdictFail);
  EXPECT_EQ(Json::parse(fail.out)["results"]["b2"]["union"]["witness"]["value"], "3");

  EXPECT_EQ(Cli({"analyze", ints, "--check", "bogus"}).code, kExitConfigError);
  EXPECT_EQ(Cli({"analyze", Path("missing.json"), "--check", "b2"}).code, kExitConfigError);

  ::setenv("ADDCOMB_PAIR_BUDGET", "3", 1);
  EXPECT_EQ(Cli({"analyze", ints, "--check", "b2"}).code, kExitResourceCap);
  ::unsetenv("ADDCOMB_PAIR_BUDGET");
}

TEST_F(CliTest, AnalyzeAllChecks) {
  const auto w = Build("w.json", {"--kind", "W", "--k", "3", "--n", "12"});
  const auto r = Cli({"analyze", w, "--check", "profile,b2,energy,disjoint,census,audit", "--scope",
                      "parts", "--slice", "12", "--bound", "1/3"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"]["summary"].size(), 6u);
  EXPECT_TRUE(j["results"]["energy"]["identity_holds"].get<bool>());
}

TEST_F(CliTest, TextFormatUsesSamePayload) {
  const auto w = Build("w.json", {"--kind", "W", "--k", "3", "--n", "10"});
  const auto r = Cli({"analyze", w, "--check", "energy", "--format", "text"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("e_plus: 2700"), std::string::npos);
}

TEST_F(CliTest, Certify) {
  const auto w = Build("w40.json", {"--kind", "W", "--k", "3", "--n", "40"});
  const auto r = Cli({"certify", w, "--g", "1", "--parts", "2"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  const auto c = Json::parse(r.out)["results"]["certificate"];
  EXPECT_EQ(c["lhs"], 247);
  EXPECT_TRUE(c.contains("collision_values"));
  EXPECT_TRUE(c["verdict"].get<bool>());

  const auto small = Cli({"certify", "--family", "W", "--k", "3", "--n", "10", "--parts", "2"});
  EXPECT_EQ(small.code, kExitVerdictFail);
  EXPECT_EQ(Cli({"certify", "--type", "nolarge", "--k", "5", "--n", "10", "--delta", "1/5"}).code,
            kExitConfigError);
  EXPECT_EQ(Cli({"certify", "--type", "wat"}).code, kExitConfigError);
}

TEST_F(CliTest, Decompose) {
  const auto pm = Build("pm.json", {"--kind", "integers", "--values",
                                    "5,-5,25,-25,125,-125,625,-625,3125,-3125,15625,-15625,"
                                    "78125,-78125,390625,-390625"});
  const auto r = Cli({"decompose", pm, "--g", "7", "--kind", "sum", "--greedy"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(Json::parse(r.out)["results"]["minimum"], 2);

  std::string values;
  for (int i = 0; i < 40; ++i) values += std::to_string(i) + (i < 39 ? "," : "");
  const auto ap = Build("ap.json", {"--kind", "integers", "--values", values});
  EXPECT_EQ(Cli({"decompose", ap, "--g", "1", "--max-parts", "6", "--budget", "100"}).code,
            kExitTimeout);
  EXPECT_EQ(Cli({"decompose", ap, "--g", "1", "--max-parts", "1"}).code, kExitVerdictFail);
  const auto w = Build("w.json", {"--kind", "W", "--k", "3", "--n", "20"});
  EXPECT_EQ(Cli({"decompose", w, "--g", "1"}).code, kExitResourceCap);
}

TEST_F(CliTest, EmbedAndPack) {
  const auto pts = Build("p.json", {"--kind", "points", "--points", "1,0;0,1;2,3"});
  const auto r = Cli({"embed", pts});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  const auto j = Json::parse(r.out)["results"];
  EXPECT_EQ(j["base"], "15");
  EXPECT_EQ(j["image"], Json::array({"15", "225", "705"}));

  const auto pack = Cli({"pack", "--sets", "0,1;0,1,2,3"});
  EXPECT_EQ(pack.code, kExitPass);
  EXPECT_EQ(Json::parse(pack.out)["results"]["elements"],
            Json::array({"2", "3", "4", "5", "6", "7"}));
  EXPECT_EQ(Cli({"pack", "--sets", "0,x"}).code, kExitConfigError);
}

TEST_F(CliTest, Meyer) {
  const auto r = Cli({"meyer", "--trials", "1000", "--seed", "7"});
  EXPECT_EQ(r.code, kExitPass);
  const double mean = Json::parse(r.out)["results"]["mean"];
  EXPECT_GE(mean, 0.20);
  EXPECT_LE(mean, 0.30);
  EXPECT_EQ(Json::parse(r.out)["config"]["seed"], 7);
}

// Byte stability and golden reports.
TEST_F(CliTest, ReportsAreByteStable) {
  const auto w = Build("w.json", {"--kind", "W", "--k", "3", "--n", "14"});
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", w, "--check", "profile,census,audit", "--audit-mode", "sample", "--trials",
            "300", "--seed", "9"},
           {"meyer", "--trials", "200", "--seed", "3"},
           {"certify", w, "--parts", "2"}}) {
    const auto a = Cli(args);
    const auto b = Cli(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(Json::parse(a.out).contains("timing"));
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_F(CliTest, GoldenReports) {
  const std::string golden = ADDCOMB_GOLDEN_DIR;
  const auto meyer = Cli({"meyer", "--nmax", "5", "--trials", "20", "--seed", "11"});
  EXPECT_EQ(meyer.out, ReadFile(golden + "/meyer_n5_t20_s11.json"));
  const auto pack = Cli({"pack", "--sets", "0,1;0,1,2,3;-4,9"});
  EXPECT_EQ(pack.out, ReadFile(golden + "/pack.json"));
  const auto cert = Cli({"certify", "--family", "W", "--k", "3", "--n", "37", "--parts", "2"});
  EXPECT_EQ(cert.out, ReadFile(golden + "/certify_w_k3_n37.json"));
}

}  // namespace
}  // namespace addcomb::cli
