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

#include <complex>
#include <filesystem>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "zxverify/diagram_parser.hpp"
#include "zxverify/errors.hpp"
#include "zxverify/rule.hpp"
#include "zxverify/rule_library.hpp"
#include "zxverify/soundness.hpp"

namespace zxverify {
namespace {

const std::filesystem::path kSource = ZXV_SOURCE_DIR;

Angle pi(std::int64_t k, std::int64_t d = 1) { return Angle::pi_times(k, d); }

TEST(RuleACondition, Examples) {
  const Angle x = pi(2, 7);
  const Angle t = pi(5, 3);
  EXPECT_TRUE(rule_A_condition(x, x, x, t, t, t));
  for (int k = 0; k < 8; ++k) {
    EXPECT_TRUE(rule_A_condition(pi(0), pi(1), pi(1, 2), pi(0), pi(0), pi(k, 4)));
  }
  EXPECT_TRUE(rule_A_condition(pi(0), pi(0), pi(0), pi(0), pi(0), pi(0)));
  EXPECT_FALSE(rule_A_condition(pi(0), pi(0), pi(0), pi(1), pi(0), pi(0)));
}

TEST(RuleACondition, RealAngles) {
  const Angle x = Angle::real(0.4);
  const Angle t = Angle::real(2.1);
  EXPECT_TRUE(rule_A_condition(x, x, x, t, t, t));
  EXPECT_FALSE(rule_A_condition(x, x, Angle::real(0.5), t, t, t));
}

TEST(RuleACondition, InvariantUnderThetaShift) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Angle> a;
    for (int i = 0; i < 6; ++i) a.push_back(pi(static_cast<std::int64_t>(rng() % 12), 6));
    const Angle s = pi(static_cast<std::int64_t>(rng() % 24), 12);
    EXPECT_EQ(rule_A_condition(a[0], a[1], a[2], a[3], a[4], a[5]),
              rule_A_condition(a[0], a[1], a[2], a[3] + s, a[4] + s, a[5] + s));
  }
}

TEST(Soundness, ShippedCatalogIsSound) {
  for (const char* dir : {"rules/figure1", "rules/families"}) {
    const auto rules = load_catalog(kSource / dir);
    EXPECT_FALSE(rules.empty());
    for (const auto& rule : rules) {
      SoundnessOptions o;
      o.exact_samples = 40;
      o.float_samples = 40;
      const SoundnessReport r = check_soundness(rule, o);
      EXPECT_TRUE(r.ok()) << rule.name << " " << r.error;
      EXPECT_EQ(r.exact_passed + r.float_passed, r.samples_tested) << rule.name;
    }
  }
}

TEST(Soundness, BuiltinFamiliesAreSound) {
  for (int p : {3, 5, 7, 11}) {
    SoundnessOptions o;
    o.exact_samples = 20;
    o.float_samples = 20;
    EXPECT_TRUE(check_soundness(sup_rule(p), o).ok()) << p;
    EXPECT_TRUE(check_soundness(cyc_rule(p), o).ok()) << p;
  }
  SoundnessOptions o;
  o.exact_samples = 100;
  o.float_samples = 100;
  const SoundnessReport r = check_soundness(rule_a(), o);
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.exact_passed, 90u);
  EXPECT_THROW(sup_rule(4), DomainError);
  EXPECT_THROW(cyc_rule(2), DomainError);
}

TEST(Soundness, CorruptedRuleFails) {
  const RuleSchema bad = load_rule(kSource / "tests/fixtures/corrupted/S1_z_negated.zxr");
  const SoundnessReport r = check_soundness(bad);
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(r.counterexample);
  // Oracle: the two sides differ exactly where e^{i(a+b)} is not real.
  const double s = r.counterexample->at("a").radians() + r.counterexample->at("b").radians();
  EXPECT_GT(std::abs(std::sin(s)), 1e-9);
}

TEST(Soundness, DeterministicUnderSeed) {
  const RuleSchema bad = load_rule(kSource / "tests/fixtures/corrupted/S1_z_negated.zxr");
  SoundnessOptions o;
  o.seed = 99;
  o.threads = 4;
  const SoundnessReport a = check_soundness(bad, o);
  o.threads = 1;
  const SoundnessReport b = check_soundness(bad, o);
  EXPECT_EQ(a.exact_failed, b.exact_failed);
  EXPECT_EQ(a.max_float_deviation, b.max_float_deviation);
  EXPECT_EQ(*a.counterexample, *b.counterexample);
}

TEST(Rule, ValidationRejectsArityMismatch) {
  RuleSchema r;
  r.name = "bad";
  r.lhs = Diagram::z(1, 2);
  r.rhs = Diagram::z(1, 1);
  EXPECT_THROW(validate_rule(r), ValidationError);
  r.rhs = Diagram::z(1, 2, AngleExpr::variable("a"));
  EXPECT_THROW(validate_rule(r), ValidationError);  // undeclared variable
  r.variables = {"a"};
  EXPECT_NO_THROW(validate_rule(r));
}

TEST(Rule, FormatRoundTrips) {
  const RuleSchema a = rule_a();
  const RuleSchema back = rule_from_document(parse_document(format_rule(a)), "x", "mem");
  EXPECT_EQ(back.name, a.name);
  EXPECT_EQ(back.lhs, a.lhs);
  EXPECT_EQ(back.rhs, a.rhs);
  EXPECT_EQ(back.variables, a.variables);
  ASSERT_TRUE(back.side_condition);
  EXPECT_EQ(back.side_condition->name, "ruleA");
}

TEST(Rule, CatalogErrors) {
  EXPECT_TRUE(load_catalog(kSource / "tests/fixtures/empty_catalog").empty());
  EXPECT_THROW(load_catalog(kSource / "no/such/dir"), Error);
}

TEST(ScaledEquality, FusionIsAngleUniversal) {
  const Diagram lhs = Diagram::seq(Diagram::z(1, 1, AngleExpr::variable("a")),
                                   Diagram::z(1, 1, AngleExpr::variable("b")));
  const Diagram rhs =
      Diagram::z(1, 1, AngleExpr::variable("a") + AngleExpr::variable("b"));
  const Assignment s = {{"a", Angle::real(1.0)}, {"b", Angle::real(std::numbers::sqrt2)}};
  const ScaledReport r = scaled_equality_test(lhs, rhs, s, 1, 20, CompareMode::kExact);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.steps.size(), 20u);
}

TEST(ScaledEquality, EulerFamilyOneSurvivesOddScaling) {
  const auto v = [](const char* n) { return AngleExpr::variable(n); };
  const Diagram lhs = Diagram::seq({Diagram::z(1, 1), Diagram::x(1, 1, v("a2")),
                                    Diagram::z(1, 1, v("a3"))});
  const Diagram rhs = Diagram::seq({Diagram::x(1, 1, v("a2")), Diagram::z(1, 1, v("a3")),
                                    Diagram::x(1, 1)});
  const Assignment s = {{"a2", Angle::real(1.0)}, {"a3", Angle::real(0.7)}};
  const ScaledReport r = scaled_equality_test(lhs, rhs, s, 2, 50, CompareMode::kUpToScalar);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.steps.back().k, 49);
}

TEST(ScaledEquality, CoincidenceIsCaught) {
  const Diagram lhs = Diagram::z(1, 1, AngleExpr::variable("x"));
  const Diagram rhs = Diagram::z(1, 1, Angle::real(1.3));
  const ScaledReport r =
      scaled_equality_test(lhs, rhs, {{"x", Angle::real(1.3)}}, 2, 20, CompareMode::kExact);
  EXPECT_TRUE(r.steps.front().passed);
  ASSERT_TRUE(r.first_failure);
  EXPECT_EQ(*r.first_failure, 3);
}

TEST(ScaledEquality, FirstStepIsPlainEquality) {
  const Diagram lhs = Diagram::z(1, 1, AngleExpr::variable("x"));
  const Diagram rhs = Diagram::z(1, 1, RationalAngle::pi_times(1, 2));
  const ScaledReport ok =
      scaled_equality_test(lhs, rhs, {{"x", pi(1, 2)}}, 4, 1, CompareMode::kExact);
  EXPECT_TRUE(ok.passed());
  const ScaledReport bad =
      scaled_equality_test(lhs, rhs, {{"x", pi(1, 3)}}, 4, 1, CompareMode::kExact);
  EXPECT_EQ(bad.first_failure, 1);
}

}  // namespace
}  // namespace zxverify
