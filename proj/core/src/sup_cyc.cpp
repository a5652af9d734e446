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

#include "zxverify/sup_cyc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "zxverify/errors.hpp"
#include "zxverify/parallel.hpp"
#include "zxverify/rule_library.hpp"

namespace zxverify {

namespace {

constexpr double kTolerance = 1e-9;

Cyclotomic e(const RationalAngle& a) { return Cyclotomic::root_of_unity(a); }

std::complex<double> e(double a) { return std::polar(1.0, a); }

Rational half() { return Rational(1, 2); }

std::string angle_text(const RationalAngle& a) { return a.to_string(); }

}  // namespace

void require_sup_prime(int p) {
  if (!is_odd_prime(p) || p > 23) {
    throw DomainError("p must be an odd prime <= 23, got " + std::to_string(p));
  }
}

Vector2<Cyclotomic> d_semantics(int p, const RationalAngle& alpha,
                                const RationalAngle& beta) {
  require_sup_prime(p);
  const Cyclotomic xp = e(alpha.scaled(p));
  Cyclotomic plus(1);
  Cyclotomic minus(1);
  for (int k = 0; k < p; ++k) {
    const Cyclotomic term = e(alpha + beta.scaled(k));
    plus = (plus * (term + Cyclotomic(1))).reduced();
    minus = (minus * (term - Cyclotomic(1))).reduced();
  }
  const Cyclotomic one(1);
  const Cyclotomic h(half());
  Cyclotomic first = (h * ((one + xp) * plus + (one - xp) * minus)).reduced();
  Cyclotomic second = (h * (-((one - xp) * plus) - (one + xp) * minus)).reduced();
  return {first, second};
}

Vector2<std::complex<double>> d_semantics(int p, double alpha, double beta) {
  require_sup_prime(p);
  const std::complex<double> xp = e(p * alpha);
  std::complex<double> plus = 1.0;
  std::complex<double> minus = 1.0;
  for (int k = 0; k < p; ++k) {
    const std::complex<double> term = e(alpha + k * beta);
    plus *= term + 1.0;
    minus *= term - 1.0;
  }
  return {0.5 * ((1.0 + xp) * plus + (1.0 - xp) * minus),
          -0.5 * ((1.0 - xp) * plus + (1.0 + xp) * minus)};
}

Vector2<Cyclotomic> d1_semantics(int p, const RationalAngle& alpha,
                                 const RationalAngle& beta) {
  return {Cyclotomic(1), d_semantics(p, alpha, beta)[0]};
}

Vector2<std::complex<double>> d1_semantics(int p, double alpha, double beta) {
  return {1.0, d_semantics(p, alpha, beta)[0]};
}

Vector2<Cyclotomic> d2_semantics(int p, const RationalAngle& alpha,
                                 const RationalAngle& beta) {
  return {Cyclotomic(1), d_semantics(p, alpha, beta)[1]};
}

Vector2<std::complex<double>> d2_semantics(int p, double alpha, double beta) {
  return {1.0, d_semantics(p, alpha, beta)[1]};
}

namespace {

template <typename T, typename Phase>
std::pair<ExpPolynomial<T>, ExpPolynomial<T>> expand(int p, const Phase& w_pow) {
  using Poly = ExpPolynomial<T>;
  const Poly one = Poly::monomial(T(1), 0);
  const Poly xp = Poly::monomial(T(1), static_cast<std::size_t>(p));
  Poly plus = one;
  Poly minus = one;
  for (int k = 0; k < p; ++k) {
    const Poly wx = Poly::monomial(w_pow(k), 1);
    plus = plus * (wx + one);
    minus = minus * (wx - one);
  }
  const T h = T(1) / T(2);
  Poly pp = ((one + xp) * plus + (one - xp) * minus).scaled(h);
  Poly qq = ((one - xp) * plus + (one + xp) * minus).scaled(T(0) - h);
  return {pp, qq};
}

ExactPolynomial reduce_all(const ExactPolynomial& poly) {
  std::vector<Cyclotomic> v = poly.coefficients();
  for (auto& c : v) c = c.reduced();
  return ExactPolynomial(std::move(v));
}

}  // namespace

ExactPolynomial p_coefficients(int p, const RationalAngle& beta) {
  require_sup_prime(p);
  return reduce_all(expand<Cyclotomic>(p, [&](int k) { return e(beta.scaled(k)); }).first);
}

ExactPolynomial q_coefficients(int p, const RationalAngle& beta) {
  require_sup_prime(p);
  return reduce_all(expand<Cyclotomic>(p, [&](int k) { return e(beta.scaled(k)); }).second);
}

FloatPolynomial q_coefficients(int p, double beta) {
  require_sup_prime(p);
  return expand<std::complex<double>>(p, [&](int k) { return e(k * beta); }).second;
}

Cyclotomic extract_a1(const ExactPolynomial& poly, int n) {
  if (n < 1 || n > 11) throw DomainError("extraction level must be in [1, 11]");
  const long width = 1L << n;
  if (width <= poly.degree()) {
    throw DomainError("2^n = " + std::to_string(width) +
                      " must exceed the degree " + std::to_string(poly.degree()));
  }
  Cyclotomic acc;
  for (long k = 0; k < width; ++k) {
    // w^k = e^{2 i pi k / 2^n}
    const Cyclotomic wk = Cyclotomic::zeta(static_cast<std::uint32_t>(width), k);
    acc += poly.evaluate(wk) * Cyclotomic::zeta(static_cast<std::uint32_t>(width), -k);
  }
  return (acc * Cyclotomic(Rational(1, width))).reduced();
}

std::complex<double> extract_a1(const FloatPolynomial& poly, int n) {
  if (n < 1 || n > 20) throw DomainError("extraction level must be in [1, 20]");
  const long width = 1L << n;
  if (width <= poly.degree()) {
    throw DomainError("2^n = " + std::to_string(width) +
                      " must exceed the degree " + std::to_string(poly.degree()));
  }
  std::complex<double> acc = 0.0;
  for (long k = 0; k < width; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(width);
    acc += poly.evaluate(e(theta)) * e(-theta);
  }
  return acc / static_cast<double>(width);
}

Cyclotomic negated_geometric_sum(int p, const RationalAngle& beta) {
  Cyclotomic acc;
  for (int k = 0; k < p; ++k) acc -= e(beta.scaled(k));
  return acc.reduced();
}

bool SupCycReport::passed() const {
  return !steps.empty() &&
         std::all_of(steps.begin(), steps.end(), [](const SupCycStep& s) { return s.passed; });
}

int extraction_level(int p) {
  int n = 0;
  while ((1L << n) <= 2L * p) ++n;
  return n;
}

SupCycReport verify_sup_to_cyc(int p, std::uint64_t seed) {
  if (!is_odd_prime(p) || p > 13) {
    throw DomainError("p must be an odd prime <= 13, got " + std::to_string(p));
  }
  SupCycReport report;
  report.p = p;
  report.extraction_level = extraction_level(p);
  report.extraction_width = 1L << report.extraction_level;
  const RationalAngle beta_p = RationalAngle::pi_times(2, p);
  const double beta_p_real = 2.0 * std::numbers::pi / p;

  std::mt19937_64 rng(derive_seed(seed, "sup-to-cyc", static_cast<std::uint64_t>(p)));
  std::uniform_int_distribution<int> den_dist(1, 16);
  std::uniform_real_distribution<double> real_dist(0.0, 2.0 * std::numbers::pi);
  const auto rational_angle = [&] {
    const int d = den_dist(rng);
    return RationalAngle::pi_times(std::uniform_int_distribution<int>(0, 2 * d - 1)(rng), d);
  };

  std::vector<RationalAngle> exact_alphas(50);
  for (auto& a : exact_alphas) a = rational_angle();
  std::vector<double> real_alphas(50);
  for (auto& a : real_alphas) a = real_dist(rng);

  // (a) D(p, alpha, 2pi/p) = (2 e^{i p alpha}, 0).
  {
    SupCycStep step{"a", "D(p, alpha, 2pi/p) = (2e^{ip alpha}, 0)", true, 0, ""};
    for (const auto& a : exact_alphas) {
      auto v = d_semantics(p, a, beta_p);
      ++step.checks;
      if (!(v[0] == Cyclotomic(2) * e(a.scaled(p))) || !v[1].is_zero()) {
        step.passed = false;
        if (step.detail.empty()) step.detail = "fails at alpha = " + angle_text(a);
      }
    }
    for (double a : real_alphas) {
      auto v = d_semantics(p, a, beta_p_real);
      ++step.checks;
      if (std::abs(v[0] - 2.0 * e(p * a)) > kTolerance || std::abs(v[1]) > kTolerance) {
        step.passed = false;
        if (step.detail.empty()) step.detail = "fails at alpha = " + std::to_string(a);
      }
    }
    report.steps.push_back(step);
  }
  // (b) D2(p, alpha, 2pi/p) = (1, 0).
  {
    SupCycStep step{"b", "D2(p, alpha, 2pi/p) = (1, 0)", true, 0, ""};
    for (const auto& a : exact_alphas) {
      auto v = d2_semantics(p, a, beta_p);
      ++step.checks;
      if (!(v[0] == Cyclotomic(1)) || !v[1].is_zero()) {
        step.passed = false;
        if (step.detail.empty()) step.detail = "fails at alpha = " + angle_text(a);
      }
    }
    for (double a : real_alphas) {
      auto v = d2_semantics(p, a, beta_p_real);
      ++step.checks;
      if (std::abs(v[0] - 1.0) > kTolerance || std::abs(v[1]) > kTolerance) {
        step.passed = false;
        if (step.detail.empty()) step.detail = "fails at alpha = " + std::to_string(a);
      }
    }
    report.steps.push_back(step);
  }
  // (c) Q(X, e^{2i pi/p}) is the zero polynomial.
  {
    SupCycStep step{"c", "Q(X, e^{2i pi/p}) vanishes identically", true, 1, ""};
    ExactPolynomial q = q_coefficients(p, beta_p);
    if (!q.is_zero()) {
      step.passed = false;
      step.detail = "degree " + std::to_string(q.degree()) + " coefficient is nonzero";
    }
    report.steps.push_back(step);
  }
  // (d) a1 extraction from Q at 2^n > 2p roots of unity.
  {
    SupCycStep step{"d",
                    "extract_a1(Q(., beta), n) = -sum_k e^{ik beta} at width " +
                        std::to_string(report.extraction_width),
                    true, 0, ""};
    for (int i = 0; i < 20; ++i) {
      const RationalAngle beta = rational_angle();
      ExactPolynomial q = q_coefficients(p, beta);
      ++step.checks;
      if (!(extract_a1(q, report.extraction_level) == negated_geometric_sum(p, beta)) ||
          !(q.coefficient(1) == negated_geometric_sum(p, beta))) {
        step.passed = false;
        if (step.detail.empty()) step.detail = "fails at beta = " + angle_text(beta);
      }
    }
    report.steps.push_back(step);
  }
  // (e) At beta = 2pi/p the extracted value, i.e. -(1 + zeta_p + ...), is 0.
  {
    SupCycStep step{"e", "extracted value at beta = 2pi/p is 0 (1 + zeta_p + ... = 0)",
                    true, 2, ""};
    const Cyclotomic a1 = extract_a1(q_coefficients(p, beta_p), report.extraction_level);
    if (!a1.is_zero() || !negated_geometric_sum(p, beta_p).is_zero()) {
      step.passed = false;
      step.detail = "extracted value " + a1.to_string();
    }
    report.steps.push_back(step);
  }
  return report;
}

}  // namespace zxverify
