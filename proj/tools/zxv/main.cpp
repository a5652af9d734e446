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

// zxv: command-line front end for zxverify.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "zxverify/errors.hpp"

namespace {

int run(int argc, char** argv) {
  using namespace zxv;
  CLI::App app{"Exact and numeric verification for ZX-calculus rules"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "zxv 0.1.0");

  RunConfig cfg;
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "Float tolerance")
      ->envname("ZXV_TOL")
      ->capture_default_str();
  app.add_option("--cap", cfg.wire_cap, "Dimension cap in wires")
      ->envname("ZXV_CAP")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  std::function<int()> action;

  auto* eval = app.add_subcommand("eval", "Interpret a diagram file");
  std::string eval_file;
  std::string backend = "exact";
  eval->add_option("file", eval_file)->required();
  eval->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
  eval->callback([&] { action = [&] { return cmd_eval(cfg, eval_file, backend, std::cout); }; });

  auto* axioms = app.add_subcommand("verify-axioms", "Soundness check of rule catalogs");
  AxiomOptions ax;
  axioms->add_option("catalog", ax.catalogs, "Catalog directories")->required();
  axioms->add_option("--exact-samples", ax.exact_samples)->capture_default_str();
  axioms->add_option("--float-samples", ax.float_samples)->capture_default_str();
  axioms->add_option("--max-den", ax.max_denominator)->capture_default_str();
  axioms->callback(
      [&] { action = [&] { return cmd_verify_axioms(cfg, ax, std::cout, std::cerr); }; });

  auto* sup = app.add_subcommand("sup-to-cyc", "Semantic SUP_p to CYC_p derivation chain");
  int p = 3;
  sup->add_option("--p", p, "Odd prime")->required();
  sup->callback([&] { action = [&] { return cmd_sup_to_cyc(cfg, p, std::cout); }; });

  auto* euler = app.add_subcommand("euler", "Euler equalities");
  euler->require_subcommand(1);
  auto* solve = euler->add_subcommand("solve", "Decompose a 2x2 matrix");
  std::string matrix_file;
  std::string order = "zxz";
  solve->add_option("--matrix", matrix_file)->required();
  solve->add_option("--order", order)->check(CLI::IsMember({"zxz", "xzx"}));
  solve->callback(
      [&] { action = [&] { return cmd_euler_solve(cfg, matrix_file, order, std::cout); }; });

  auto* classify = euler->add_subcommand("classify", "Match an equality against the families");
  std::string lhs;
  std::string rhs;
  bool swapped = false;
  classify->add_option("--lhs", lhs, "ZXZ angles a1,a2,a3")->required();
  classify->add_option("--rhs", rhs, "XZX angles b1,b2,b3")->required();
  classify->add_flag("--color-swapped", swapped, "Read as XZX(lhs) = ZXZ(rhs)");
  classify->callback([&] {
    action = [&] { return cmd_euler_classify(cfg, lhs, rhs, swapped, std::cout); };
  });

  auto* enumerate = euler->add_subcommand("enumerate", "Exhaustive rational enumeration");
  int max_den = 3;
  bool summary = false;
  enumerate->add_option("--max-den", max_den)->required();
  enumerate->add_flag("--summary", summary, "Counts only");
  enumerate->callback([&] {
    action = [&] { return cmd_euler_enumerate(cfg, max_den, summary, std::cout); };
  });

  auto* rs = app.add_subcommand("radin-sadun", "Alternating products equal to a scalar");
  int len = 4;
  int rs_den = 6;
  std::string angles;
  rs->add_option("--len", len)->capture_default_str();
  rs->add_option("--max-den", rs_den)->capture_default_str();
  rs->add_option("--check", angles, "Check one sequence a1,a2,...");
  rs->callback(
      [&] { action = [&] { return cmd_radin_sadun(cfg, len, rs_den, angles, std::cout); }; });

  auto* scale = app.add_subcommand("scale-test", "Equality under angle scaling k = 1 mod n");
  std::string scale_file;
  std::int64_t n = 1;
  std::int64_t k_max = 20;
  std::string mode;
  scale->add_option("--file", scale_file)->required();
  scale->add_option("--n", n)->capture_default_str();
  scale->add_option("--kmax", k_max)->capture_default_str();
  scale->add_option("--mode", mode)->check(CLI::IsMember({"exact", "scalar"}));
  scale->callback([&] {
    action = [&] { return cmd_scale_test(cfg, scale_file, n, k_max, mode, std::cout); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }
  if (!(cfg.tolerance > 0.0)) {
    std::cerr << "error: tolerance must be positive\n";
    return kExitValidation;
  }
  if (cfg.wire_cap < 1 || cfg.wire_cap > kMaxWireCap) {
    std::cerr << "error: cap must be in 1.." << kMaxWireCap << '\n';
    return kExitValidation;
  }

  try {
    return action();
  } catch (const zxverify::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const zxverify::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const zxverify::UnboundVariableError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const zxverify::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const zxverify::BackendError& e) {
    std::cerr << "backend error: " << e.what() << '\n';
    return kExitBackend;
  } catch (const zxverify::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitBackend;
  } catch (const zxverify::Error& e) {
    // I/O failures: unreadable file or catalog.
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
