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

#include "zxverify/rule_library.hpp"

#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

Diagram not_gate() { return Diagram::x(1, 1, RationalAngle::pi_times(1)); }

Diagram repeated(const Diagram& d, int count) {
  std::vector<Diagram> parts(static_cast<std::size_t>(count), d);
  return Diagram::par(parts);
}

}  // namespace

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Diagram sqrt2_diagram() {
  return Diagram::seq(Diagram::z(0, 1), Diagram::x(1, 0));
}

Diagram inv_sqrt2_diagram() {
  return Diagram::seq({Diagram::z(0, 1, RationalAngle::pi_times(1, 3)),
                       Diagram::hadamard(),
                       Diagram::z(1, 0, RationalAngle::pi_times(5, 3))});
}

Diagram phase_adder(const AngleExpr& phi) {
  return Diagram::seq({Diagram::z(1, 1, -phi), not_gate(), Diagram::triangle(),
                       not_gate(), Diagram::z(1, 1, phi)});
}

RuleSchema sup_rule(int p) {
  if (!is_odd_prime(p)) {
    throw DomainError("SUP_p needs an odd prime, got " + std::to_string(p));
  }
  const AngleExpr a = AngleExpr::variable("a");
  std::vector<Diagram> states;
  for (int k = 0; k < p; ++k) {
    states.push_back(Diagram::z(0, 1, a + AngleExpr(RationalAngle::pi_times(2 * k, p))));
  }
  RuleSchema rule;
  rule.name = "SUP_" + std::to_string(p);
  rule.variables = {"a"};
  rule.lhs = Diagram::seq(Diagram::par(states), Diagram::x(p, 1));
  rule.rhs = Diagram::par(Diagram::z(0, 1, a.scaled(p)),
                          repeated(inv_sqrt2_diagram(), p - 1));
  rule.mode = CompareMode::kExact;
  rule.source = "builtin";
  validate_rule(rule);
  return rule;
}

RuleSchema cyc_rule(int p) {
  if (!is_odd_prime(p)) {
    throw DomainError("CYC_p needs an odd prime, got " + std::to_string(p));
  }
  std::vector<Diagram> chain = {Diagram::x(0, 1)};
  for (int k = 0; k < p; ++k) {
    chain.push_back(phase_adder(RationalAngle::pi_times(2 * k, p)));
  }
  RuleSchema rule;
  rule.name = "CYC_" + std::to_string(p);
  rule.lhs = Diagram::seq(chain);
  rule.rhs = Diagram::x(0, 1);
  rule.mode = CompareMode::kExact;
  rule.source = "builtin";
  validate_rule(rule);
  return rule;
}

RuleSchema rule_a() {
  const auto v = [](const char* name) { return AngleExpr::variable(name); };
  RuleSchema rule;
  rule.name = "A";
  rule.variables = {"alpha", "beta", "gamma", "theta1", "theta2", "theta3"};
  rule.lhs = Diagram::seq({Diagram::x(0, 1),
                           phase_adder(v("theta1") + v("alpha")),
                           phase_adder(v("theta1") - v("alpha")),
                           phase_adder(v("theta2") + v("beta")),
                           phase_adder(v("theta2") - v("beta"))});
  rule.rhs = Diagram::seq({Diagram::x(0, 1),
                           phase_adder(v("theta3") + v("gamma")),
                           phase_adder(v("theta3") - v("gamma")),
                           phase_adder(v("theta3") + v("gamma")),
                           phase_adder(v("theta3") - v("gamma"))});
  rule.side_condition = SideConditionSpec{"ruleA", rule.variables};
  rule.mode = CompareMode::kExact;
  rule.source = "builtin";
  validate_rule(rule);
  return rule;
}

}  // namespace zxverify
