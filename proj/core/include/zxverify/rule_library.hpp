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

#pragma once

#include <string>

#include "zxverify/rule.hpp"

namespace zxverify {

bool is_odd_prime(long p);

/// Scalar diagrams (0 -> 0) used to balance rule sides exactly.
Diagram sqrt2_diagram();      // seq(Z(0,1,0), X(1,0,0))
Diagram inv_sqrt2_diagram();  // seq(Z(0,1,pi/3), H, Z(1,0,5*pi/3))

/// Z(-phi); NOT; TRI; NOT; Z(phi): maps (a, b) to (a, b + e^{i phi} a).
Diagram phase_adder(const AngleExpr& phi);

/// p Z-states at a + 2k*pi/p merged by an X-spider equal a single
/// Z-state at p*a, times (1/sqrt 2)^(p-1). Throws DomainError unless p is an
/// odd prime.
RuleSchema sup_rule(int p);

/// Adding e^{2ik*pi/p}|0> for k < p to the second coordinate of |0> is the
/// identity on X(0,1,0): the semantic content 1 + zeta_p + ... = 0.
RuleSchema cyc_rule(int p);

/// Two adders with cos(alpha), cos(beta) against one with 2cos(gamma),
/// equal exactly when the rule (A) side condition holds.
RuleSchema rule_a();

}  // namespace zxverify
