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

#include "zxverify/radin_sadun.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <complex>
#include <numeric>
#include <numbers>

#include "zxverify/cyclotomic_order.hpp"
#include "zxverify/errors.hpp"
#include "zxverify/interpret.hpp"

namespace zxverify {

namespace {

using C = std::complex<double>;
using M2 = std::array<C, 4>;

M2 mul(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

M2 float_spider(bool z, double radians) {
  const C e = std::polar(1.0, radians);
  if (z) return {1.0, 0.0, 0.0, e};
  return {0.5 * (1.0 + e), 0.5 * (1.0 - e), 0.5 * (1.0 - e), 0.5 * (1.0 + e)};
}

bool near_scalar_identity(const M2& m) {
  constexpr double kTol = 1e-9;
  return std::abs(m[1]) <= kTol && std::abs(m[2]) <= kTol && std::abs(m[0] - m[3]) <= kTol;
}

bool exact_scalar_identity(const std::vector<RationalAngle>& angles) {
  std::uint32_t order = 1;
  for (const auto& a : angles) {
    order = common_order(order, Cyclotomic::root_of_unity(a).order());
  }
  Matrix product = Matrix::identity(2, Backend::kExact);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    Generator g;
    g.kind = i % 2 == 0 ? GeneratorKind::kZ : GeneratorKind::kX;
    g.inputs = 1;
    g.outputs = 1;
    g.angle = AngleExpr(angles[i]);
    product = product * generator_matrix(g, Backend::kExact, order);
  }
  return equal_up_to_scalar(product, Matrix::identity(2, Backend::kExact)).has_value();
}

bool in_zero_pi(const RationalAngle& a) { return a.denominator() == 1; }
bool in_half_pi(const RationalAngle& a) { return a.denominator() == 2; }

}  // namespace

const char* verdict_name(RadinSadunVerdict v) {
  switch (v) {
    case RadinSadunVerdict::kNotIdentity:
      return "not-identity";
    case RadinSadunVerdict::kConclusionHolds:
      return "conclusion-holds";
    case RadinSadunVerdict::kCounterexample:
      return "COUNTEREXAMPLE";
  }
  return "?";
}

bool radin_sadun_conclusion(const std::vector<RationalAngle>& angles) {
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (in_zero_pi(angles[i])) return true;
    if (i + 1 < angles.size() && in_half_pi(angles[i]) && in_half_pi(angles[i + 1])) {
      return true;
    }
  }
  return false;
}

RadinSadunVerdict radin_sadun_check(const std::vector<Angle>& angles) {
  if (angles.empty()) throw DomainError("empty spider sequence");
  std::vector<RationalAngle> rational;
  rational.reserve(angles.size());
  for (const auto& a : angles) {
    if (!a.is_rational()) throw DomainError("irrational angle " + a.to_string());
    rational.push_back(a.rational());
  }
  if (!exact_scalar_identity(rational)) return RadinSadunVerdict::kNotIdentity;
  return radin_sadun_conclusion(rational) ? RadinSadunVerdict::kConclusionHolds
                                          : RadinSadunVerdict::kCounterexample;
}

RadinSadunReport radin_sadun_sweep(int max_length, int max_denominator) {
  if (max_length < 1 || max_length > kMaxRadinSadunLength) {
    throw DomainError("length must be in 1.." + std::to_string(kMaxRadinSadunLength));
  }
  if (max_denominator < 1 || max_denominator > kMaxRadinSadunDenominator) {
    throw DomainError("max denominator must be in 1.." +
                      std::to_string(kMaxRadinSadunDenominator));
  }
  const auto start = std::chrono::steady_clock::now();
  RadinSadunReport report;
  report.max_length = max_length;
  report.max_denominator = max_denominator;
  report.identities_by_length.assign(static_cast<std::size_t>(max_length) + 1, 0);

  std::vector<RationalAngle> angles;
  for (std::int64_t d = 1; d <= max_denominator; ++d) {
    for (std::int64_t k = 0; k < 2 * d; ++k) {
      if (std::gcd(k, d) == 1 || (k == 0 && d == 1)) angles.push_back(RationalAngle::pi_times(k, d));
    }
  }
  std::sort(angles.begin(), angles.end());
  report.angle_count = angles.size();
  std::array<std::vector<M2>, 2> spiders;
  for (const auto& a : angles) {
    spiders[0].push_back(float_spider(true, a.radians()));
    spiders[1].push_back(float_spider(false, a.radians()));
  }

  // Depth-first over prefixes, reusing partial products.
  std::vector<std::size_t> index;
  std::vector<M2> prefix{M2{1.0, 0.0, 0.0, 1.0}};
  const auto visit = [&](auto&& self) -> void {
    const std::size_t depth = index.size();
    const auto& pool = spiders[depth % 2];
    for (std::size_t i = 0; i < pool.size(); ++i) {
      index.push_back(i);
      prefix.push_back(mul(prefix.back(), pool[i]));
      ++report.sequences;
      if (near_scalar_identity(prefix.back())) {
        ++report.candidates;
        std::vector<RationalAngle> seq;
        for (std::size_t k : index) seq.push_back(angles[k]);
        if (exact_scalar_identity(seq)) {
          ++report.identities;
          ++report.identities_by_length[index.size()];
          if (!radin_sadun_conclusion(seq)) report.counterexamples.push_back(seq);
        }
      }
      if (static_cast<int>(index.size()) < max_length) self(self);
      prefix.pop_back();
      index.pop_back();
    }
  };
  visit(visit);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace zxverify
