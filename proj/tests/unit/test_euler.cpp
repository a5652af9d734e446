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

#include <array>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "zxverify/errors.hpp"
#include "zxverify/euler.hpp"
#include "zxverify/interpret.hpp"
#include "zxverify/radin_sadun.hpp"

namespace zxverify {
namespace {

using C = std::complex<double>;
using M2 = std::array<C, 4>;

Angle pi(std::int64_t k, std::int64_t d = 1) { return Angle::pi_times(k, d); }

// Independent 2x2 oracle: Z(a) = diag(1, e^{ia}), X(a) = H Z(a) H.
M2 mul(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}
M2 zm(double a) { return {1.0, 0.0, 0.0, std::polar(1.0, a)}; }
M2 xm(double a) {
  const C e = std::polar(1.0, a);
  return {0.5 * (1.0 + e), 0.5 * (1.0 - e), 0.5 * (1.0 - e), 0.5 * (1.0 + e)};
}
M2 product(const Triple& t, bool zxz) {
  auto f = [&](int i) {
    const double a = t[static_cast<std::size_t>(i)].radians();
    return (i == 1) == zxz ? xm(a) : zm(a);
  };
  return mul(mul(f(0), f(1)), f(2));
}
bool proportional(const M2& a, const M2& b, double tol) {
  // a ~ b iff all 2x2 minors of the 2x4 stack vanish.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] -
                   a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)]) > tol) {
        return false;
      }
    }
  }
  return true;
}

TEST(EulerCompose, Examples) {
  const Matrix id = euler_compose({Angle(), Angle(), Angle()}, EulerOrder::kZXZ);
  EXPECT_TRUE(equal_up_to_scalar(id, Matrix::identity(2, Backend::kExact)));
  // Z X Z = -X and X Z X = -Z as Pauli products, so these differ.
  const Triple ppp = {pi(1), pi(1), pi(1)};
  EXPECT_FALSE(proportional(product(ppp, true), product(ppp, false), 1e-9));
  EXPECT_FALSE(equal_up_to_scalar(euler_compose(ppp, EulerOrder::kZXZ),
                                 euler_compose(ppp, EulerOrder::kXZX)));
  const Triple hhh = {pi(1, 2), pi(1, 2), pi(1, 2)};
  EXPECT_TRUE(equal_up_to_scalar(euler_compose(hhh, EulerOrder::kZXZ),
                                 euler_compose(hhh, EulerOrder::kXZX)));
  const Triple t = {pi(1, 3), pi(3, 4), pi(7, 5)};
  EXPECT_EQ(euler_compose(t, EulerOrder::kZXZ).backend(), Backend::kExact);
  const M2 o = product(t, true);
  const Matrix m = euler_compose(t, EulerOrder::kZXZ);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(m.value(static_cast<std::size_t>(i / 2), static_cast<std::size_t>(i % 2)) -
                         o[static_cast<std::size_t>(i)]),
                0.0, 1e-12);
  }
}

TEST(EulerFamilies, RealInstancesHold) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  for (int f = 1; f <= kEulerFamilyCount; ++f) {
    for (int trial = 0; trial < 100; ++trial) {
      std::map<std::string, Angle> params;
      for (const auto& name : euler_family_parameters(f)) params[name] = Angle::real(u(rng));
      const int n = static_cast<int>(rng() % 2);
      const int m = static_cast<int>(rng() % 2);
      const auto [a, b] = instantiate_euler_family(f, n, m, params);
      EXPECT_TRUE(proportional(product(a, true), product(b, false), 1e-9)) << "family " << f;
      // Color swap: XZX(a) = ZXZ(b).
      EXPECT_TRUE(proportional(product(a, false), product(b, true), 1e-9)) << "family " << f;
    }
  }
}

TEST(EulerFamilies, RationalInstancesHoldExactly) {
  std::mt19937_64 rng(32);
  for (int f = 1; f <= kEulerFamilyCount; ++f) {
    for (int trial = 0; trial < 50; ++trial) {
      std::map<std::string, Angle> params;
      for (const auto& name : euler_family_parameters(f)) {
        const auto d = static_cast<std::int64_t>(rng() % 12 + 1);
        params[name] = pi(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * d)), d);
      }
      const auto [a, b] = instantiate_euler_family(f, trial % 2, (trial / 2) % 2, params);
      EXPECT_TRUE((EulerEquality{a, b, false}.holds())) << f;
      EXPECT_TRUE((EulerEquality{a, b, true}.holds())) << f;
    }
  }
}

TEST(EulerFamilies, TemplateMatchesInstances) {
  const std::map<std::string, Angle> params = {
      {"alpha2", pi(1, 3)}, {"alpha3", pi(3, 4)}, {"beta1", pi(5, 6)}};
  for (int f = 1; f <= kEulerFamilyCount; ++f) {
    const auto [a, b] = instantiate_euler_family(f, 1, 0, params);
    const auto [ta, tb] = euler_family_template(f, 1, 0);
    const Diagram lhs = substitute(euler_diagram(ta, EulerOrder::kZXZ), params);
    const Diagram rhs = substitute(euler_diagram(tb, EulerOrder::kXZX), params);
    EXPECT_TRUE(equal_exact(interpret(lhs, Backend::kExact), euler_compose(a, EulerOrder::kZXZ)));
    EXPECT_TRUE(equal_exact(interpret(rhs, Backend::kExact), euler_compose(b, EulerOrder::kXZX)));
  }
}

TEST(ClassifyEuler, Examples) {
  auto c = classify_euler({{pi(0), Angle::real(1.0), Angle::real(0.7)},
                           {Angle::real(1.0), Angle::real(0.7), pi(0)},
                           false});
  ASSERT_TRUE(c.match);
  EXPECT_EQ(c.match->family, 1);
  EXPECT_EQ(c.match->n, 0);
  EXPECT_EQ(c.match->m, 0);
  EXPECT_TRUE(c.matrices_equal);

  c = classify_euler({{pi(1, 2), pi(1, 2), pi(1, 2)}, {pi(1, 2), pi(1, 2), pi(1, 2)}, false});
  ASSERT_TRUE(c.match);
  EXPECT_EQ(c.match->family, 4);
  EXPECT_EQ(c.match->n, 0);
  EXPECT_EQ(c.match->m, 0);
  EXPECT_EQ(c.match->parameters.at("alpha3"), pi(1, 2));

  c = classify_euler({{pi(1, 3), pi(1, 3), pi(1, 3)}, {pi(1, 3), pi(1, 3), pi(1, 3)}, false});
  EXPECT_FALSE(c.match);
  EXPECT_FALSE(c.matrices_equal);
  EXPECT_FALSE(c.completeness_violation);
}

TEST(ClassifyEuler, ColorSwapInvariance) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    Triple a, b;
    for (auto& x : a) x = pi(static_cast<std::int64_t>(rng() % 4), 2);
    for (auto& x : b) x = pi(static_cast<std::int64_t>(rng() % 4), 2);
    const EulerEquality eq{a, b, false};
    const auto c1 = classify_euler(eq);
    const auto c2 = classify_euler(eq.color_swap());
    EXPECT_EQ(c1.match.has_value(), c2.match.has_value());
    EXPECT_EQ(c1.matrices_equal, c2.matrices_equal);
  }
}

TEST(TwoSpider, Examples) {
  auto r = two_spider_solve(pi(1, 4), pi(0));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, pi(0));
  EXPECT_EQ(r->second, pi(1, 4));
  r = two_spider_solve(pi(1, 3), pi(1));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, pi(1));
  EXPECT_EQ(r->second, pi(-1, 3));
  EXPECT_FALSE(two_spider_solve(pi(1, 3), pi(1, 5)));
}

TEST(TwoSpider, ResultsAlwaysVerify) {
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      const auto r = two_spider_solve(pi(i, 8), pi(j, 8));
      if (!r) continue;
      const M2 lhs = mul(zm(pi(i, 8).radians()), xm(pi(j, 8).radians()));
      const M2 rhs = mul(xm(r->first.radians()), zm(r->second.radians()));
      EXPECT_TRUE(proportional(lhs, rhs, 1e-12)) << i << " " << j;
    }
  }
}

TEST(EulerDecompose, RecoversRationalAngles) {
  std::mt19937_64 rng(34);
  for (EulerOrder order : {EulerOrder::kZXZ, EulerOrder::kXZX}) {
    for (int trial = 0; trial < 40; ++trial) {
      Triple t;
      for (auto& x : t) x = pi(static_cast<std::int64_t>(rng() % 24), 12);
      const Matrix m = euler_compose(t, order);
      const auto d = euler_decompose(m, order);
      ASSERT_TRUE(d);
      EXPECT_TRUE(d->exact);
      EXPECT_TRUE(equal_up_to_scalar(m, euler_compose(d->angles, order, Backend::kExact)));
    }
  }
  const Matrix tri = Matrix::from_float(2, 2, {1.0, 1.0, 0.0, 1.0});
  EXPECT_FALSE(euler_decompose(tri, EulerOrder::kZXZ));
}

TEST(EulerEnumerate, DegenerateGrid) {
  const EulerEnumeration e = enumerate_euler(1);
  EXPECT_EQ(e.grid, 1);
  EXPECT_EQ(e.triples_per_side, 8u);
  EXPECT_EQ(e.equalities.size(), 16u);
  EXPECT_EQ(e.unclassified, 0u);
  for (const auto& item : e.equalities) {
    ASSERT_TRUE(item.match);
    EXPECT_LE(item.match->family, 3);
  }
}

// Brute-force oracle on the pi/2 grid: every ZXZ/XZX pair with
// proportional float products.
TEST(EulerEnumerate, MatchesBruteForceOnQuarterGrid) {
  const EulerEnumeration e = enumerate_euler(2);
  std::size_t expected = 0;
  std::vector<Triple> all;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) all.push_back({pi(a, 2), pi(b, 2), pi(c, 2)});
    }
  }
  for (const auto& l : all) {
    for (const auto& r : all) expected += proportional(product(l, true), product(r, false), 1e-9);
  }
  EXPECT_EQ(e.equalities.size(), expected);
  EXPECT_EQ(e.unclassified, 0u);
  EXPECT_TRUE(std::is_sorted(e.equalities.begin(), e.equalities.end(),
                             [](const auto& x, const auto& y) {
                               auto key = [](const EnumeratedEquality& q) {
                                 return std::array<RationalAngle, 6>{
                                     q.equality.lhs[0].rational(), q.equality.lhs[1].rational(),
                                     q.equality.lhs[2].rational(), q.equality.rhs[0].rational(),
                                     q.equality.rhs[1].rational(), q.equality.rhs[2].rational()};
                               };
                               return key(x) < key(y);
                             }));
}

TEST(EulerEnumerate, CompleteAtDeskScale) {
  for (int q : {3, 4}) {
    const EulerEnumeration e = enumerate_euler(q);
    EXPECT_GT(e.equalities.size(), 0u);
    EXPECT_EQ(e.unclassified, 0u) << q;
  }
}

TEST(EulerEnumerate, DeterministicAcrossThreads) {
  const EulerEnumeration a = enumerate_euler(3, 1);
  const EulerEnumeration b = enumerate_euler(3, 4);
  ASSERT_EQ(a.equalities.size(), b.equalities.size());
  for (std::size_t i = 0; i < a.equalities.size(); ++i) {
    EXPECT_EQ(a.equalities[i].equality.lhs, b.equalities[i].equality.lhs);
    EXPECT_EQ(a.equalities[i].equality.rhs, b.equalities[i].equality.rhs);
  }
}

TEST(EulerEnumerate, Caps) {
  EXPECT_THROW(enumerate_euler(0), DomainError);
  EXPECT_THROW(enumerate_euler(13), DomainError);
  EXPECT_THROW(enumerate_euler(7), CapacityError);
}

TEST(RadinSadun, Examples) {
  EXPECT_EQ(radin_sadun_check({pi(1), pi(1), pi(1), pi(1)}), RadinSadunVerdict::kConclusionHolds);
  EXPECT_EQ(radin_sadun_check({pi(1, 2), pi(1, 2), pi(1, 2), pi(1, 2)}),
            RadinSadunVerdict::kNotIdentity);
  EXPECT_EQ(radin_sadun_check({pi(1, 2), pi(-1, 2)}), RadinSadunVerdict::kNotIdentity);
  EXPECT_THROW(radin_sadun_check({Angle::real(0.5)}), DomainError);
}

TEST(RadinSadun, Sweeps) {
  const RadinSadunReport small = radin_sadun_sweep(2, 4);
  EXPECT_GT(small.identities, 0u);
  EXPECT_TRUE(small.counterexamples.empty());
  const RadinSadunReport r = radin_sadun_sweep(4, 6);
  EXPECT_EQ(r.angle_count, 24u);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.identities, r.candidates);
  EXPECT_THROW(radin_sadun_sweep(6, 4), DomainError);
  EXPECT_THROW(radin_sadun_sweep(4, 9), DomainError);
}

}  // namespace
}  // namespace zxverify
