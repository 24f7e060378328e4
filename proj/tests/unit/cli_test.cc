// Copyright 2026 The qsopt Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace qsopt {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Qsopt(std::vector<std::string> args) {
  args.insert(args.begin(), "qsopt");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunQsopt(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qsopt_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::create_directories(dir_);
    Write("p1.json",
          R"({"family":"tabular","n":2,"seed":0,"params":{"values":[1,0,1.5,1]}})");
    Write("peaks.json",
          R"({"family":"tabular","n":2,"seed":0,"params":{"values":[1,1.5,1.5,1]}})");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  void Write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckPrintsWitness) {
  const Outcome r = Qsopt({"check", "--spec", Path("p1.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("submodular: false"), std::string::npos);
  EXPECT_NE(r.out.find("X={1} Y={2}"), std::string::npos);
  EXPECT_NE(r.out.find("quasi_submodular: true"), std::string::npos);
}

TEST_F(CliTest, MaxTraceAndSummary) {
  const Outcome r = Qsopt({"max", "--spec", Path("peaks.json"), "--trace", Path("t.csv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "X+={} Y+={1,2} free=2 reduction_rate=0\n");
  EXPECT_EQ(Slurp(dir_ / "t.csv"),
            "t,added,removed,fx,fy,eval_calls\n0,\"{}\",\"{}\",1,1,10\n");
}

TEST_F(CliTest, MinFromStartLiteral) {
  const Outcome r = Qsopt({"min", "--spec", Path("p1.json"), "--start", "{1,2}",
                         "--trace", Path("m.csv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "result={1} value=0 is_local_min=true\n");
  const std::string trace = Slurp(dir_ / "m.csv");
  EXPECT_EQ(trace.substr(0, trace.find('\n')), "t,added,removed,value,eval_calls");
  EXPECT_NE(trace.find("0,\"{}\",\"{2}\",1,"), std::string::npos);
}

TEST_F(CliTest, ExactAndBaseline) {
  Outcome r = Qsopt({"exact", "--spec", Path("peaks.json"), "--direction", "max"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value=1.5 optimizers={1};{2}"), std::string::npos);
  r = Qsopt({"--format", "json", "baseline", "--alg", "dg", "--spec", Path("p1.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("set":"{2}")"), std::string::npos);
  r = Qsopt({"baseline", "--alg", "rls", "--spec", Path("p1.json"), "--seed", "3",
           "--trials", "2", "--prefilter"});
  EXPECT_NE(r.out.find("algorithm=urls set={2} value=1.5"), std::string::npos);
}

TEST_F(CliTest, ErrorsMapToExitCodes) {
  EXPECT_EQ(Qsopt({}).code, 2);
  EXPECT_EQ(Qsopt({"max", "--spec", Path("missing.json")}).code, 2);
  EXPECT_EQ(Qsopt({"baseline", "--alg", "zz", "--spec", Path("p1.json")}).code, 2);
  Write("bad.json", R"({"families":["iwata"],"sizes":[4],"trials":0})");
  EXPECT_EQ(Qsopt({"bench", "--config", Path("bad.json"), "--out", Path("o")}).code, 2);
}

TEST_F(CliTest, BenchWritesReports) {
  Write("cfg.json", R"({"experiments":["reduction"],"families":["com"],
                        "sizes":[12],"trials":2,"master_seed":1})");
  const Outcome r =
      Qsopt({"--quiet", "bench", "--config", Path("cfg.json"), "--out", Path("out")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "out" / "reduction.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out" / "reduction_summary.csv"));
  const Outcome j = Qsopt({"--format", "json", "--quiet", "bench", "--config",
                         Path("cfg.json"), "--out", Path("json")});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "json" / "reduction.json"));
}

TEST_F(CliTest, GenWritesLoadableSpec) {
  EXPECT_EQ(Qsopt({"gen", "--family", "determinant", "--n", "5", "--seed", "2",
                 "--out", Path("d.json")})
                .code,
            0);
  const Outcome r = Qsopt({"max", "--spec", Path("d.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("X+=", 0), 0u);
}

}  // namespace
}  // namespace qsopt
