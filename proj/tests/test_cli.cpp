// Copyright 2026 The qcrot Authors
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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "support/dense.hpp"
#include "support/qasm_parser.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(QCROT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(QCROT_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qcrot_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, ResourcesCsv) {
  const CliRun r = run("resources --max-m 20 --out " + path("r.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("crossover m = 11"), std::string::npos);
  const std::string csv = slurp(path("r.csv"));
  EXPECT_NE(csv.find("\n11,45100,43362\n"), std::string::npos);
}

TEST_F(CliTest, ResourcesDeterministic) {
  ASSERT_EQ(run("resources --max-m 16 --out " + path("a.csv") + " --svg " + path("a.svg")).code, 0);
  ASSERT_EQ(run("resources --max-m 16 --out " + path("b.csv") + " --svg " + path("b.svg")).code, 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a.svg")), slurp(path("b.svg")));
}

TEST_F(CliTest, SweepDeterministic) {
  const std::string args = "fidelity-sweep --n 4 --m-range 4:6 --trials 10 --seed 3 --out ";
  ASSERT_EQ(run(args + path("a.csv")).code, 0);
  ASSERT_EQ(run(args + path("b.csv") + " --threads 3").code, 0);
  const std::string a = slurp(path("a.csv"));
  EXPECT_EQ(a, slurp(path("b.csv")));
  EXPECT_EQ(a.rfind("n,m,kappa,s,trial,fidelity\n", 0), 0u);
}

TEST_F(CliTest, SweepGridFile) {
  EXPECT_EQ(run("fidelity-sweep --trials 5 --grid " + data("sweep_m_trend.json") + " --out " +
                path("g.csv"))
                .code,
            0);
}

TEST_F(CliTest, HhlDemo) {
  const CliRun r = run("hhl-demo --system " + data("system_2x2.json") + " --m 8 --s 0.9 --emit-state " +
                    path("r.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(slurp(path("r.json")).find("fidelity"), std::string::npos);
}

TEST_F(CliTest, HhlSingularIsInvalid) {
  EXPECT_EQ(run("hhl-demo --system " + data("system_singular.json")).code, 1);
}

TEST_F(CliTest, HhlMissingFileIsInvalid) {
  EXPECT_EQ(run("hhl-demo --system " + path("nope.json")).code, 1);
}

TEST_F(CliTest, CrotVerifyExact) {
  const CliRun r = run("crot-verify --m 4 --exhaustive");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(CliTest, CrotVerifyZeroOracle) {
  // Amplitude 0 everywhere is exactly what the circuit produces.
  EXPECT_EQ(run("crot-verify --m 3 --oracle zero --exhaustive").code, 0);
}

TEST_F(CliTest, CrotVerifyBadOracle) {
  EXPECT_EQ(run("crot-verify --m 3 --oracle bogus").code, 1);
}

TEST_F(CliTest, CompileDiagonalQasm) {
  const CliRun r = run("compile-diagonal --random 3 --seed 4 --out-qasm " + path("d.qasm"));
  EXPECT_EQ(r.code, 0);
  const auto prog = qcrot::testing::parse_qasm(slurp(path("d.qasm")));
  EXPECT_EQ(prog.num_qubits, 3u);
  const CliRun again = run("compile-diagonal --random 3 --seed 4 --out-qasm " + path("e.qasm"));
  EXPECT_EQ(slurp(path("d.qasm")), slurp(path("e.qasm")));
}

TEST_F(CliTest, CompileDiagonalRejectsBadLength) {
  EXPECT_EQ(run("compile-diagonal --phases '[0.1,0.2,0.3]'").code, 1);
}

TEST_F(CliTest, ExportQasm) {
  const CliRun r = run("export-qasm --m 2 --out " + path("c.qasm"));
  EXPECT_EQ(r.code, 0);
  const auto prog = qcrot::testing::parse_qasm(slurp(path("c.qasm")));
  EXPECT_EQ(prog.num_qubits, 5u);
}

TEST_F(CliTest, UnknownSubcommand) {
  EXPECT_EQ(run("frobnicate").code, 1);
}

}  // namespace
