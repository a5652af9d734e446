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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zxverify/angle.hpp"

namespace zxverify {

/// Alternating spiders Z(a1) X(a2) Z(a3) ..., composed as matrices in that
/// order (same convention as euler_compose).
enum class RadinSadunVerdict { kNotIdentity, kConclusionHolds, kCounterexample };

const char* verdict_name(RadinSadunVerdict v);

/// Some angle in {0, pi}, or two adjacent angles both in {pi/2, 3pi/2}.
bool radin_sadun_conclusion(const std::vector<RationalAngle>& angles);

/// Exact check. Throws DomainError on an empty sequence or a real angle.
RadinSadunVerdict radin_sadun_check(const std::vector<Angle>& angles);

struct RadinSadunReport {
  int max_length = 0;
  int max_denominator = 0;
  std::size_t angle_count = 0;
  std::uint64_t sequences = 0;
  std::uint64_t candidates = 0;  // passed the float prefilter
  std::uint64_t identities = 0;  // confirmed exactly
  std::vector<std::uint64_t> identities_by_length;  // index = length
  std::vector<std::vector<RationalAngle>> counterexamples;
  double seconds = 0.0;
};

inline constexpr int kMaxRadinSadunLength = 5;
inline constexpr int kMaxRadinSadunDenominator = 8;

/// All alternating sequences of length 1..L over the angles k*pi/d,
/// d <= Q. Throws DomainError outside 1 <= L <= 5, 1 <= Q <= 8.
RadinSadunReport radin_sadun_sweep(int max_length, int max_denominator);

}  // namespace zxverify
