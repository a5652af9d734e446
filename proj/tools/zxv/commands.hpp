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
#include <iosfwd>
#include <string>
#include <vector>

namespace zxv {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitBackend = 4,
};

struct RunConfig {
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  int wire_cap = 14;
  unsigned threads = 0;
  bool json = false;
};

inline constexpr int kMaxWireCap = 20;

int cmd_eval(const RunConfig& cfg, const std::string& file,
             const std::string& backend, std::ostream& out);

struct AxiomOptions {
  std::vector<std::string> catalogs;
  std::size_t exact_samples = 200;
  std::size_t float_samples = 200;
  int max_denominator = 16;
};
int cmd_verify_axioms(const RunConfig& cfg, const AxiomOptions& opts,
                      std::ostream& out, std::ostream& err);

int cmd_sup_to_cyc(const RunConfig& cfg, int p, std::ostream& out);

int cmd_euler_solve(const RunConfig& cfg, const std::string& matrix_file,
                    const std::string& order, std::ostream& out);
int cmd_euler_classify(const RunConfig& cfg, const std::string& lhs,
                       const std::string& rhs, bool color_swapped,
                       std::ostream& out);
int cmd_euler_enumerate(const RunConfig& cfg, int max_denominator,
                        bool summary, std::ostream& out);

int cmd_radin_sadun(const RunConfig& cfg, int length, int max_denominator,
                    const std::string& angles, std::ostream& out);

int cmd_scale_test(const RunConfig& cfg, const std::string& file,
                   std::int64_t n, std::int64_t k_max, const std::string& mode,
                   std::ostream& out);

}  // namespace zxv
