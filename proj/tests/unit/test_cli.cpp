// Copyright 2026 The zxverify Authors
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

// Runs the zxv binary and checks exit codes and output.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "zxverify/matrix.hpp"
#include "zxverify/matrix_io.hpp"

namespace {

const std::filesystem::path kSource = ZXV_SOURCE_DIR;

struct Result {
  int code = -1;
  std::string out;
};

Result zxv(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      "cd " + kSource.string() + " && " + env + " " + ZXV_BINARY + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& what) {
  return s.find(what) != std::string::npos;
}

TEST(Cli, EvalHadamard) {
  const Result r = zxv("eval data/diagrams/hadamard.zx");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "1/2*z^1-1/2*z^3 -1/2*z^1+1/2*z^3")) << r.out;
}

TEST(Cli, EvalBackendsAgree) {
  for (const char* f : {"data/diagrams/bell.zx", "data/diagrams/euler_h.zx",
                        "data/diagrams/cnot.zx"}) {
    const Result e = zxv(std::string("eval ") + f + " --backend exact");
    const Result x = zxv(std::string("eval ") + f + " --backend float");
    ASSERT_EQ(e.code, 0) << e.out;
    ASSERT_EQ(x.code, 0) << x.out;
    const auto body = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
    const zxverify::Matrix me = zxverify::parse_matrix(body(e.out));
    const zxverify::Matrix mx = zxverify::parse_matrix(body(x.out));
    EXPECT_LE(zxverify::max_deviation(me.to_float(), mx), 1e-9) << f;
  }
}

TEST(Cli, EvalErrors) {
  Result r = zxv("eval tests/fixtures/arity_mismatch.zx");
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.out, "at term")) << r.out;
  EXPECT_EQ(zxv("eval tests/fixtures/syntax_error.zx").code, 2);
  EXPECT_EQ(zxv("eval tests/fixtures/real_angle.zx").code, 4);
  EXPECT_EQ(zxv("eval tests/fixtures/real_angle.zx --backend float").code, 0);
  EXPECT_EQ(zxv("eval no_such_file.zx").code, 2);
  EXPECT_EQ(zxv("frobnicate").code, 2);
}

TEST(Cli, CapAndToleranceFromEnvironment) {
  EXPECT_EQ(zxv("eval data/diagrams/cnot.zx", "ZXV_CAP=1").code, 4);
  EXPECT_EQ(zxv("eval data/diagrams/cnot.zx", "ZXV_CAP=25").code, 3);
  EXPECT_EQ(zxv("eval data/diagrams/cnot.zx --cap 4", "ZXV_CAP=1").code, 0);
  EXPECT_EQ(zxv("eval data/diagrams/cnot.zx", "ZXV_TOL=-1").code, 3);
}

TEST(Cli, VerifyAxioms) {
  Result r = zxv("verify-axioms rules/figure1 rules/families");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "all sound"));
  r = zxv("verify-axioms tests/fixtures/corrupted");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "counterexample")) << r.out;
  r = zxv("verify-axioms tests/fixtures/empty_catalog");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "warning")) << r.out;
  EXPECT_TRUE(contains(r.out, "0 rule(s)"));
  EXPECT_EQ(zxv("verify-axioms no/such/dir").code, 2);
}

TEST(Cli, JsonIsDeterministic) {
  const std::string args = "--json --seed 7 verify-axioms rules/figure1 --exact-samples 30";
  const Result a = zxv(args);
  const Result b = zxv(args + " --threads 1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["rules"].size(), 13u);
  for (const auto& rule : j["rules"]) EXPECT_TRUE(rule.contains("max_float_deviation"));
}

TEST(Cli, SupToCyc) {
  const Result r = zxv("sup-to-cyc --p 11");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "2^5 = 32"));
  const auto j = nlohmann::json::parse(zxv("sup-to-cyc --p 11 --json").out);
  EXPECT_EQ(j["extraction_width"], 32);
  EXPECT_EQ(j["steps"].size(), 5u);
  EXPECT_EQ(zxv("sup-to-cyc --p 4").code, 3);
}

TEST(Cli, Euler) {
  Result r = zxv("euler enumerate --max-den 3 --summary");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "0 unclassified")) << r.out;
  r = zxv("euler classify --lhs 0,1.0,0.7 --rhs 1.0,0.7,0");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "family 1")) << r.out;
  const auto j =
      nlohmann::json::parse(zxv("--json euler classify --lhs pi/3,pi/3,pi/3 --rhs pi/3,pi/3,pi/3").out);
  EXPECT_TRUE(j["family"].is_null());
  EXPECT_FALSE(j["matrices_equal"]);
  EXPECT_EQ(zxv("euler classify --lhs 1,2 --rhs 1,2,3").code, 2);
  EXPECT_EQ(zxv("euler solve --matrix tests/fixtures/h_matrix.txt").code, 0);
}

TEST(Cli, RadinSadunAndScaleTest) {
  Result r = zxv("radin-sadun --len 3 --max-den 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "0 counterexamples")) << r.out;
  r = zxv("radin-sadun --check pi,pi,pi,pi");
  EXPECT_TRUE(contains(r.out, "conclusion-holds"));
  r = zxv("scale-test --file tests/fixtures/eq.zx --n 2 --kmax 50");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "k=49  pass"));
  r = zxv("scale-test --file tests/fixtures/coincidence.zx --n 2 --kmax 20");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "fails at k=3")) << r.out;
}

}  // namespace
