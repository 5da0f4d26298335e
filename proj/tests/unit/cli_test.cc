// Copyright 2026 The Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("matext_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(const std::string& args) {
    const std::string cmd = "cd '" + dir_.string() + "' && '" MATEXT_CLI "' " +
                            args + " > stdout.txt 2> stderr.txt";
    const int raw = std::system(cmd.c_str());
    return WEXITSTATUS(raw);
  }

  json Load(const std::string& name) {
    std::ifstream in(dir_ / name);
    return json::parse(in);
  }

  std::string Text(const std::string& name) {
    std::ifstream in(dir_ / name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(Cli, CatalogVerifyBuiltin) {
  EXPECT_EQ(Run("catalog verify T3 -o r.json"), 0);
  EXPECT_TRUE(Load("r.json")["axioms_ok"].get<bool>());
}

TEST_F(Cli, CatalogExportImportRoundTrip) {
  EXPECT_EQ(Run("catalog export -o all.txt"), 0);
  EXPECT_EQ(Run("catalog import all.txt -o r.json"), 0);
  EXPECT_EQ(Load("r.json")["matroids"].size(), 4u);
  EXPECT_EQ(Run("--catalog all.txt catalog list -o l.json"), 0);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(Run("check-dl"), 1);
  EXPECT_EQ(Run("check-dl NoSuchMatroid"), 1);
  EXPECT_EQ(Run("frobnicate"), 1);
  EXPECT_EQ(Run("--help"), 0);
}

TEST_F(Cli, VamosIsNotDl) {
  EXPECT_EQ(Run("check-dl vamos --depth 1 -o dl.json"), 2);
  const json r = Load("dl.json");
  EXPECT_EQ(r["schema"], "matext-report/1");
  EXPECT_EQ(r["verdict"], "false");
  EXPECT_TRUE(r.contains("refuting_pair"));
  EXPECT_EQ(Run("witness dl.json -o w.json"), 0);
  EXPECT_TRUE(Load("w.json")["confirmed"].get<bool>());
}

TEST_F(Cli, PsmRefutationIsConfirmed) {
  EXPECT_EQ(Run("check-psm Vamos --depth 1 -o p.json"), 2);
  EXPECT_EQ(Run("witness p.json -o w.json"), 0);
  EXPECT_EQ(Run("check-psm U3_5 --depth 2 -o u.json"), 0);
}

TEST_F(Cli, ReportsAreDeterministic) {
  ASSERT_EQ(Run("check-dl T3_dual --depth 1 -o a.json"), 0);
  ASSERT_EQ(Run("check-dl T3_dual --depth 1 -o b.json"), 0);
  json a = Load("a.json"), b = Load("b.json");
  a.erase("timestamp");
  b.erase("timestamp");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST_F(Cli, SequenceRefutationShipsVerifiableCertificate) {
  std::ofstream(dir_ / "seq.json") << R"({"steps": [
    {"z": "a", "kind": "AK", "X": [0, 1, 3, 4], "Y": [6, 7]},
    {"z": "b", "kind": "AK", "X": [1, 2, 4, 5], "Y": [7, 8]},
    {"z": "c", "kind": "AK", "X": [0, 1, 2, "a", "b"], "Y": [3, 5]}]})";
  ASSERT_EQ(Run("check-ak T3_dual --sequence seq.json -o r.json"), 2);
  const json r = Load("r.json");
  EXPECT_EQ(r["status"], "infeasible");
  EXPECT_EQ(r["lp"]["rows_per_step"].size(), 3u);
  const std::string lp = r["certificate"]["lp"];
  const std::string cert = r["certificate"]["certificate"];
  EXPECT_EQ(Run("lp verify " + lp + " " + cert + " -o v.json"), 0);
  EXPECT_TRUE(Load("v.json")["valid"].get<bool>());
  EXPECT_EQ(Run("lp solve " + lp + " -o s.json"), 0);
  EXPECT_EQ(Load("s.json")["status"], "infeasible");
}

TEST_F(Cli, OneAkPassAndBudgetExit) {
  EXPECT_EQ(Run("check-ak T3_dual --depth 1 -o r.json"), 0);
  EXPECT_EQ(Run("--budget 2 check-ak T3_dual --depth 2 -o b.json"), 3);
  EXPECT_EQ(Load("b.json")["verdict"], "inconclusive");
}

TEST_F(Cli, CheckCiSequence) {
  std::ofstream(dir_ / "ci.json") << R"([{"X": [0, 1], "Y": [2, 3]}])";
  const int rc = Run("check-ci T3_dual --sequence ci.json -o r.json");
  EXPECT_TRUE(rc == 0 || rc == 2);
  EXPECT_EQ(Load("r.json")["sequence"]["steps"][0]["kind"], "CI");
}

TEST_F(Cli, SsBoundPortAndAccessFile) {
  EXPECT_EQ(Run("ss-bound --matroid U2_3 --dealer 0 -o r.json"), 0);
  EXPECT_EQ(Load("r.json")["optimum"], "1");
  std::ofstream(dir_ / "acc.json")
      << R"({"points": 4, "dealer": 0, "min_authorized": [[1, 2], [2, 3]]})";
  EXPECT_EQ(Run("ss-bound --access acc.json -o a.json"), 0);
  const json a = Load("a.json");
  EXPECT_EQ(a["structure"]["maximal_forbidden"].size(), 2u);
  EXPECT_EQ(Run("ss-bound --matroid U2_3"), 1);
}

TEST_F(Cli, EnvironmentBudgetAndFlagPrecedence) {
  const std::string env = "MATEXT_BUDGET=2 ";
  const std::string base = "cd '" + dir_.string() + "' && " + env + "'" MATEXT_CLI "' ";
  int rc = WEXITSTATUS(std::system((base + "check-ak T3_dual --depth 2 -o e.json > /dev/null").c_str()));
  EXPECT_EQ(rc, 3);
  rc = WEXITSTATUS(std::system(
      (base + "--budget 100000 check-ak T3_dual --depth 1 -o f.json > /dev/null").c_str()));
  EXPECT_EQ(rc, 0);
  EXPECT_EQ(Load("f.json")["config"]["budget"], 100000);
}

}  // namespace
