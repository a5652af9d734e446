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

#include <cstdint>

#include "zxverify/angle.hpp"
#include "zxverify/diagram.hpp"
#include "zxverify/matrix.hpp"

namespace zxverify {

inline constexpr int kDefaultWireCap = 14;

/// The standard interpretation, computed as a fold over the term tree.
///
/// Exact backend: every entry lives in Q(zeta_N) with
/// N = lcm(8, orders of all e^{i alpha}); the 8 is needed because
/// 1/sqrt(2) = (zeta_8 + zeta_8^7) / 2.
///
/// Throws ValidationError (ill-typed), UnboundVariableError (free
/// variables), BackendError (real angle in the exact backend) and
/// CapacityError (a subterm with more than `wire_cap` inputs or outputs).
Matrix interpret(const Diagram& d, Backend backend,
                 int wire_cap = kDefaultWireCap);

/// The working order used by the exact backend for a rational diagram.
std::uint32_t working_order(const Diagram& d);

/// Base case of the fold for one concrete generator. `order` is the
/// exact working order and must be a multiple of 8 and of the angle's
/// root-of-unity order; it is ignored by the float backend.
Matrix generator_matrix(const Generator& g, Backend backend,
                        std::uint32_t order = 8);

/// (1/sqrt 2)^k as an exact cyclotomic number.
Cyclotomic inv_sqrt2_power(int k);

}  // namespace zxverify
