// Copyright 2026 The wks Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wks/cli.hpp"
#include "wks/json_io.hpp"

namespace wks::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wks_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, GenGapWritesTwentyFourRequests) {
  ASSERT_EQ(call({"gen", "gap", "--l", "2", "--c", "2", "--n", "4", "--m", "2", "-o", path("g.json")}),
            kOk)
      << err_.str();
  const auto inst = instance_from_json(read_json_file(path("g.json")));
  EXPECT_EQ(inst.horizon(), 24);
  EXPECT_EQ(inst.metadata()["generator"], "gap");
}

TEST_F(CliTest, OracleOnSingleVertexCostsZero) {
  write_json_file(path("one.json"), instance_to_json(Instance(1, {{Rational(3), 1}}, {0}, {0, 0})));
  ASSERT_EQ(call({"oracle", path("one.json"), "-o", path("o.json")}), kOk) << err_.str();
  EXPECT_EQ(read_json_file(path("o.json"))["oracle_cost"], "0");
}

TEST_F(CliTest, FullPipelineAndReportAreDeterministic) {
  ASSERT_EQ(call({"gen", "random", "--n", "4", "--weights", "4,1", "--counts", "1,1", "--T", "10",
                  "--seed", "7", "-o", path("r.json")}),
            kOk);
  ASSERT_EQ(call({"solve-lp", path("r.json"), "-o", path("lp.json"), "--lp-text", path("lp.txt")}), kOk)
      << err_.str();
  ASSERT_EQ(call({"round-offline", path("r.json"), "--eps", "1/4", "-o", path("off.json")}), kOk)
      << err_.str();
  ASSERT_EQ(call({"oracle", path("r.json"), "-o", path("orc.json")}), kOk);
  ASSERT_EQ(call({"online", path("r.json"), "--seed", "3", "--runs", "20", "--audit", path("orc.json"),
                  "--trajectory", path("traj.jsonl"), "-o", path("on.json")}),
            kOk)
      << err_.str();
  const std::vector<std::string> files = {path("lp.json"), path("off.json"), path("orc.json"),
                                          path("on.json")};
  std::vector<std::string> args = {"report"};
  args.insert(args.end(), files.begin(), files.end());
  args.insert(args.end(), {"-o", path("a.csv")});
  ASSERT_EQ(call(args), kOk) << err_.str();
  args[args.size() - 1] = path("b.csv");
  ASSERT_EQ(call(args), kOk);
  const auto a = slurp(path("a.csv"));
  EXPECT_EQ(a, slurp(path("b.csv")));
  EXPECT_NE(a.find("random_n4_l2_T10_s7,4,2,10,"), std::string::npos) << a;
  EXPECT_EQ(slurp(path("lp.txt")).rfind("lp ", 0), 0u);
  const auto on = read_json_file(path("on.json"));
  EXPECT_TRUE(on["audit"]["ok"].get<bool>());
  EXPECT_EQ(on["seed"], 3);
}

TEST_F(CliTest, MalformedInstanceIsStructural) {
  std::ofstream(path("bad.json")) << "{\"n\": 2}";
  EXPECT_EQ(call({"oracle", path("bad.json"), "-o", path("o.json")}), kStructural);
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(CliTest, UnknownFlagIsStructural) {
  EXPECT_EQ(call({"oracle", "--frobnicate"}), kStructural);
}

TEST_F(CliTest, GapDivisibilityViolationIsStructural) {
  EXPECT_EQ(call({"gen", "gap", "--l", "2", "--c", "2", "--n", "2", "--m", "2", "-o", path("g.json")}),
            kStructural);
}

TEST_F(CliTest, ReportRejectsUnknownPipeline) {
  write_json_file(path("x.json"), nlohmann::json{{"instance_id", "a"}, {"pipeline", "magic"}});
  EXPECT_EQ(call({"report", path("x.json"), "-o", path("r.csv")}), kStructural);
}

}  // namespace
}  // namespace wks::cli
