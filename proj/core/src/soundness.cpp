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

#include "zxverify/soundness.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "zxverify/errors.hpp"
#include "zxverify/parallel.hpp"

namespace zxverify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Cyclotomic phase(const Angle& a) { return Cyclotomic::root_of_unity(a.rational()); }

// 2 cos(a) as e^{ia} + e^{-ia}.
Cyclotomic two_cos(const Angle& a) { return phase(a) + phase(-a); }

std::vector<std::string> rule_a_names(const RuleSchema& rule) {
  const auto& sc = *rule.side_condition;
  return sc.args.empty() ? rule.variables : sc.args;
}

struct SampleResult {
  bool skipped = false;
  bool passed = false;
  double deviation = 0.0;
  Assignment assignment;
  std::string error;
};

SampleResult run_sample(const RuleSchema& rule, Backend backend,
                        const Assignment& assignment, double tol, int wire_cap) {
  SampleResult out;
  out.assignment = assignment;
  try {
    const Matrix a = interpret(substitute(rule.lhs, assignment), backend, wire_cap);
    const Matrix b = interpret(substitute(rule.rhs, assignment), backend, wire_cap);
    const Comparison c = compare(a, b, rule.mode, tol);
    out.passed = c.passed;
    out.deviation = c.deviation;
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

Comparison compare(const Matrix& a, const Matrix& b, CompareMode mode,
                   double tol) {
  Comparison out;
  if (a.rows() != b.rows() || a.cols() != b.cols()) return out;
  if (mode == CompareMode::kExact) {
    out.passed = equal_exact(a, b, tol);
    out.deviation = max_deviation(a, b);
    return out;
  }
  out.passed = equal_up_to_scalar(a, b, tol).has_value();
  // Deviation against the best-conditioned scalar candidate.
  const Matrix fa = a.to_float();
  const Matrix fb = b.to_float();
  std::size_t pr = 0;
  std::size_t pc = 0;
  double best = -1.0;
  for (std::size_t r = 0; r < fb.rows(); ++r) {
    for (std::size_t c = 0; c < fb.cols(); ++c) {
      if (std::abs(fb.number(r, c)) > best) {
        best = std::abs(fb.number(r, c));
        pr = r;
        pc = c;
      }
    }
  }
  if (best <= 0.0) {
    out.deviation = max_deviation(fa, fb);
    return out;
  }
  Scalar lambda;
  lambda.value = fa.number(pr, pc) / fb.number(pr, pc);
  out.deviation = max_deviation(fa, fb.scaled(lambda));
  return out;
}

bool rule_A_condition(const Angle& alpha, const Angle& beta, const Angle& gamma,
                      const Angle& theta1, const Angle& theta2,
                      const Angle& theta3, double tol) {
  const Angle all[] = {alpha, beta, gamma, theta1, theta2, theta3};
  const bool rational = std::all_of(std::begin(all), std::end(all),
                                    [](const Angle& a) { return a.is_rational(); });
  if (rational) {
    // Doubled: 2 * 2cos(gamma) e^{i theta3} = 2cos(alpha) e^{i theta1} + ...
    const Cyclotomic lhs = Cyclotomic(2) * phase(theta3) * two_cos(gamma);
    const Cyclotomic rhs = phase(theta1) * two_cos(alpha) + phase(theta2) * two_cos(beta);
    return lhs == rhs;
  }
  const std::complex<double> lhs =
      2.0 * std::polar(1.0, theta3.radians()) * std::cos(gamma.radians());
  const std::complex<double> rhs =
      std::polar(1.0, theta1.radians()) * std::cos(alpha.radians()) +
      std::polar(1.0, theta2.radians()) * std::cos(beta.radians());
  return std::abs(lhs - rhs) <= tol;
}

Assignment sample_rational(const std::vector<std::string>& vars,
                           int max_denominator, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den_dist(1, std::max(1, max_denominator));
  const int d = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(0, 2 * d - 1);
  Assignment out;
  for (const auto& v : vars) out[v] = Angle::pi_times(num_dist(rng), d);
  return out;
}

Assignment sample_real(const std::vector<std::string>& vars,
                       std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, kTwoPi);
  Assignment out;
  for (const auto& v : vars) out[v] = Angle::real(dist(rng));
  return out;
}

std::optional<Assignment> sample_rule_a_rational(
    const std::vector<std::string>& names, int max_denominator,
    std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den_dist(1, std::max(1, max_denominator));
  const int d = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(0, 2 * d - 1);
  const auto draw = [&] { return Angle::pi_times(num_dist(rng), d); };
  const Angle pi = Angle::pi_times(1);
  const Angle half_pi = Angle::pi_times(1, 2);

  // Slots: (alpha, theta1), (beta, theta2), (gamma, theta3).
  Angle a[3];
  Angle t[3];
  std::uniform_int_distribution<int> family(0, 2);
  switch (family(rng)) {
    case 0: {  // all three terms equal
      const Angle x = draw();
      const Angle s = draw();
      a[0] = a[1] = a[2] = x;
      t[0] = t[1] = t[2] = s;
      break;
    }
    case 1: {  // cos(x) + cos(pi - x) = 0 = 2cos(pi/2)
      const Angle x = draw();
      const Angle s = draw();
      a[0] = x;
      a[1] = pi - x;
      t[0] = t[1] = s;
      a[2] = half_pi;
      t[2] = draw();
      break;
    }
    default: {  // opposite phases cancel
      const Angle x = draw();
      const Angle s = draw();
      a[0] = a[1] = x;
      t[0] = s;
      t[1] = s + pi;
      a[2] = half_pi;
      t[2] = draw();
      break;
    }
  }
  // e^{it} cos(a) is unchanged by a -> -a and by (a, t) -> (pi - a, t + pi).
  std::uniform_int_distribution<int> coin(0, 3);
  for (int i = 0; i < 3; ++i) {
    const int c = coin(rng);
    if (c & 1) a[i] = -a[i];
    if (c & 2) {
      a[i] = pi - a[i];
      t[i] = t[i] + pi;
    }
  }
  if (coin(rng) & 1) {
    std::swap(a[0], a[1]);
    std::swap(t[0], t[1]);
  }
  if (!rule_A_condition(a[0], a[1], a[2], t[0], t[1], t[2])) return std::nullopt;
  Assignment out;
  out[names[0]] = a[0];
  out[names[1]] = a[1];
  out[names[2]] = a[2];
  out[names[3]] = t[0];
  out[names[4]] = t[1];
  out[names[5]] = t[2];
  return out;
}

Assignment sample_rule_a_real(const std::vector<std::string>& names,
                              std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, kTwoPi);
  const double alpha = dist(rng);
  const double beta = dist(rng);
  const double theta1 = dist(rng);
  const double theta2 = dist(rng);
  // |e^{i t1} cos a + e^{i t2} cos b| <= 2 always, so gamma exists.
  const std::complex<double> s = std::polar(1.0, theta1) * std::cos(alpha) +
                                 std::polar(1.0, theta2) * std::cos(beta);
  const double gamma = std::acos(std::min(1.0, std::abs(s) / 2.0));
  const double theta3 = std::abs(s) > 0.0 ? std::arg(s) : dist(rng);
  Assignment out;
  out[names[0]] = Angle::real(alpha);
  out[names[1]] = Angle::real(beta);
  out[names[2]] = Angle::real(gamma);
  out[names[3]] = Angle::real(theta1);
  out[names[4]] = Angle::real(theta2);
  out[names[5]] = Angle::real(theta3);
  return out;
}

SoundnessReport check_soundness(const RuleSchema& rule,
                                const SoundnessOptions& options) {
  SoundnessReport report;
  report.rule = rule.name;
  const bool rule_a = rule.side_condition && rule.side_condition->name == "ruleA";
  const std::vector<std::string> names =
      rule_a ? rule_a_names(rule) : std::vector<std::string>{};
  const std::size_t total = options.exact_samples + options.float_samples;
  std::vector<SampleResult> results(total);

  parallel_for(total, options.threads, [&](std::size_t i) {
    const bool exact = i < options.exact_samples;
    std::mt19937_64 rng(derive_seed(options.seed, rule.name, i));
    Assignment assignment;
    if (exact) {
      if (rule_a) {
        std::optional<Assignment> a;
        for (int attempt = 0; attempt < 16 && !a; ++attempt) {
          a = sample_rule_a_rational(names, options.max_denominator, rng);
        }
        if (!a) {
          results[i].skipped = true;
          return;
        }
        assignment = *a;
      } else {
        assignment = sample_rational(rule.variables, options.max_denominator, rng);
      }
    } else {
      assignment = rule_a ? sample_rule_a_real(names, rng)
                          : sample_real(rule.variables, rng);
    }
    if (rule_a) {
      // Variables outside the side condition are sampled freely.
      Assignment extra = exact
          ? sample_rational(rule.variables, options.max_denominator, rng)
          : sample_real(rule.variables, rng);
      for (auto& [k, v] : extra) assignment.emplace(k, v);
    }
    results[i] = run_sample(rule, exact ? Backend::kExact : Backend::kFloat,
                            assignment, options.tolerance, options.wire_cap);
  });

  for (std::size_t i = 0; i < total; ++i) {
    const bool exact = i < options.exact_samples;
    const SampleResult& r = results[i];
    if (r.skipped) {
      ++report.skipped;
      continue;
    }
    ++report.samples_tested;
    if (!r.error.empty()) {
      if (report.error.empty()) report.error = r.error;
      if (exact) {
        ++report.exact_failed;
      } else {
        ++report.float_failed;
      }
      continue;
    }
    if (!exact) report.max_float_deviation = std::max(report.max_float_deviation, r.deviation);
    if (r.passed) {
      if (exact) {
        ++report.exact_passed;
      } else {
        ++report.float_passed;
      }
      continue;
    }
    if (exact) {
      ++report.exact_failed;
    } else {
      ++report.float_failed;
    }
    if (!report.counterexample) {
      report.counterexample = r.assignment;
      report.counterexample_backend = exact ? "exact" : "float";
    }
  }
  return report;
}

ScaledReport scaled_equality_test(const Diagram& d1, const Diagram& d2,
                                  const Assignment& assignment, std::int64_t n,
                                  std::int64_t k_max, CompareMode mode,
                                  double tol, int wire_cap) {
  if (n < 1) throw DomainError("n must be positive");
  ScaledReport report;
  for (std::int64_t k = 1; k <= k_max; k += n) {
    // Only the variable values scale; constant angles stay put.
    Assignment scaled;
    for (const auto& [name, value] : assignment) scaled.emplace(name, value.scaled(k));
    const Diagram a = substitute(d1, scaled);
    const Diagram b = substitute(d2, scaled);
    const Backend backend =
        is_rational(a) && is_rational(b) ? Backend::kExact : Backend::kFloat;
    const Comparison c = compare(interpret(a, backend, wire_cap),
                                 interpret(b, backend, wire_cap), mode, tol);
    report.steps.push_back({k, c.passed, c.deviation});
    if (!c.passed && !report.first_failure) report.first_failure = k;
  }
  return report;
}

}  // namespace zxverify
