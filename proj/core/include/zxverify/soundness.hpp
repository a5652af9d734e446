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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zxverify/interpret.hpp"
#include "zxverify/matrix.hpp"
#include "zxverify/rule.hpp"

namespace zxverify {

struct Comparison {
  bool passed = false;
  double deviation = 0.0;  // max |a - lambda b| over float embeddings
};

/// Compares two interpretations under `mode`. Throws BackendError on mixed
/// backends.
Comparison compare(const Matrix& a, const Matrix& b, CompareMode mode,
                   double tol = kDefaultTolerance);

/// 2 e^{i theta3} cos(gamma) == e^{i theta1} cos(alpha) + e^{i theta2} cos(beta),
/// exactly when every angle is rational, else within `tol`.
bool rule_A_condition(const Angle& alpha, const Angle& beta, const Angle& gamma,
                      const Angle& theta1, const Angle& theta2,
                      const Angle& theta3, double tol = kDefaultTolerance);

struct SoundnessOptions {
  std::size_t exact_samples = 200;
  std::size_t float_samples = 200;
  std::uint64_t seed = 1;
  double tolerance = kDefaultTolerance;
  int max_denominator = 16;
  int wire_cap = kDefaultWireCap;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SoundnessReport {
  std::string rule;
  std::size_t samples_tested = 0;
  std::size_t exact_passed = 0;
  std::size_t exact_failed = 0;
  std::size_t float_passed = 0;
  std::size_t float_failed = 0;
  std::size_t skipped = 0;  // side condition could not be met
  double max_float_deviation = 0.0;
  std::optional<Assignment> counterexample;
  std::string counterexample_backend;
  std::string error;  // evaluation error (capacity, backend), if any

  bool ok() const {
    return exact_failed == 0 && float_failed == 0 && error.empty();
  }
};

/// Samples assignments (rational with denominators <= max_denominator for
/// the exact backend, uniform reals for the float backend), honours the
/// side condition and compares both sides. Deterministic for a seed
/// regardless of thread count.
SoundnessReport check_soundness(const RuleSchema& rule,
                                const SoundnessOptions& options = {});

/// A random rational assignment: one denominator d in [1, max_den], then
/// every numerator uniform in [0, 2d).
Assignment sample_rational(const std::vector<std::string>& vars,
                           int max_denominator, std::mt19937_64& rng);
Assignment sample_real(const std::vector<std::string>& vars,
                       std::mt19937_64& rng);

/// Assignments satisfying rule (A)'s condition, keyed by the six names in
/// order alpha, beta, gamma, theta1, theta2, theta3. The rational sampler
/// draws from closed families of solutions and may return nullopt.
std::optional<Assignment> sample_rule_a_rational(
    const std::vector<std::string>& names, int max_denominator,
    std::mt19937_64& rng);
Assignment sample_rule_a_real(const std::vector<std::string>& names,
                              std::mt19937_64& rng);

struct ScaledStep {
  std::int64_t k = 1;
  bool passed = false;
  double deviation = 0.0;
};

struct ScaledReport {
  std::vector<ScaledStep> steps;
  std::optional<std::int64_t> first_failure;
  bool passed() const { return !first_failure; }
};

/// For k = 1, n+1, 2n+1, ... <= k_max: substitute k times each assigned
/// value into both diagrams and compare. Constant angles are not scaled.
/// Exact backend when both instances are rational, float otherwise.
ScaledReport scaled_equality_test(const Diagram& d1, const Diagram& d2,
                                  const Assignment& assignment, std::int64_t n,
                                  std::int64_t k_max, CompareMode mode,
                                  double tol = kDefaultTolerance,
                                  int wire_cap = kDefaultWireCap);

}  // namespace zxverify
