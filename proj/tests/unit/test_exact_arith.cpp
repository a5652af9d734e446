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

#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "zxverify/cyclotomic.hpp"
#include "zxverify/cyclotomic_order.hpp"
#include "zxverify/errors.hpp"
#include "zxverify/integral_cyclotomic.hpp"
#include "zxverify/rational_angle.hpp"

namespace zxverify {
namespace {

TEST(RationalAngle, NormalizeExamples) {
  auto a = RationalAngle::normalize(3, 2);
  EXPECT_EQ(a.numerator(), 3);
  EXPECT_EQ(a.denominator(), 2);
  a = RationalAngle::normalize(-1, 2);
  EXPECT_EQ(a.numerator(), 3);
  EXPECT_EQ(a.denominator(), 2);
  a = RationalAngle::normalize(10, 4);
  EXPECT_EQ(a.numerator(), 1);
  EXPECT_EQ(a.denominator(), 2);
}

TEST(RationalAngle, ZeroDenominatorRejected) {
  EXPECT_THROW(RationalAngle::normalize(1, 0), DomainError);
}

TEST(RationalAngle, NegativeDenominatorAndRange) {
  auto a = RationalAngle::normalize(1, -3);  // -pi/3
  EXPECT_EQ(a, RationalAngle::pi_times(5, 3));
  EXPECT_EQ(RationalAngle::pi_times(4), RationalAngle());
  EXPECT_EQ(RationalAngle::pi_times(7, 3).scaled(3), RationalAngle::pi_times(1));
}

TEST(RationalAngle, ToString) {
  EXPECT_EQ(RationalAngle().to_string(), "0");
  EXPECT_EQ(RationalAngle::pi_times(1).to_string(), "pi");
  EXPECT_EQ(RationalAngle::pi_times(3, 2).to_string(), "3*pi/2");
  EXPECT_EQ(RationalAngle::pi_times(1, 4).to_string(), "pi/4");
}

TEST(Cyclotomic, RootOfUnityExamples) {
  auto i = root_of_unity(RationalAngle::pi_times(1, 2));
  EXPECT_EQ(i.order(), 4u);
  EXPECT_NEAR(std::abs(i.to_complex() - std::complex<double>(0, 1)), 0.0, 1e-15);
  auto m = root_of_unity(RationalAngle::pi_times(1));
  EXPECT_EQ(m.order(), 2u);
  EXPECT_EQ(m, Cyclotomic(Rational(-1)));
  auto w = root_of_unity(RationalAngle::pi_times(2, 3));
  EXPECT_EQ(w.order(), 3u);
  EXPECT_TRUE((Cyclotomic(Rational(1)) + w + w * w).is_zero());
}

TEST(Cyclotomic, OpsExamples) {
  EXPECT_TRUE((Cyclotomic(Rational(1)) + Cyclotomic::zeta(2)).is_zero());
  EXPECT_EQ(Cyclotomic::zeta(4) * Cyclotomic::zeta(4), Cyclotomic::zeta(2));
  Cyclotomic s(Rational(0));
  for (int k = 0; k < 5; ++k) s += Cyclotomic::zeta(5, k);
  EXPECT_TRUE(s.is_zero());
}

TEST(Cyclotomic, PrimeSumsVanish) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    Cyclotomic s(Rational(0));
    for (std::uint32_t k = 0; k < p; ++k) s += Cyclotomic::zeta(p, k);
    EXPECT_TRUE(s.is_zero()) << "p = " << p;
  }
}

TEST(Cyclotomic, Sqrt2) {
  const Cyclotomic r = Cyclotomic::sqrt2();
  EXPECT_EQ(r * r, Cyclotomic(Rational(2)));
  EXPECT_EQ(r, Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7));
}

TEST(Cyclotomic, RootsMultiplyLikeAngles) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> den(1, 24);
  for (int trial = 0; trial < 200; ++trial) {
    const int da = den(rng);
    const int db = den(rng);
    const auto a = RationalAngle::pi_times(std::uniform_int_distribution<int>(0, 2 * da)(rng), da);
    const auto b = RationalAngle::pi_times(std::uniform_int_distribution<int>(0, 2 * db)(rng), db);
    EXPECT_EQ(root_of_unity(a) * root_of_unity(b), root_of_unity(a + b))
        << a.to_string() << " + " << b.to_string();
  }
}

TEST(Cyclotomic, LiftingPreservesValue) {
  const Cyclotomic w = Cyclotomic::zeta(3);
  const Cyclotomic lifted = w.lifted(6);
  EXPECT_EQ(lifted.order(), 6u);
  EXPECT_EQ(w, Cyclotomic::zeta(6, 2));
  EXPECT_EQ(lifted, Cyclotomic::zeta(6, 2));
}

TEST(Cyclotomic, InverseAndConj) {
  const Cyclotomic x = Cyclotomic(Rational(3)) + Cyclotomic::zeta(12, 5) * Rational(2);
  EXPECT_EQ(x * x.inverse(), Cyclotomic(Rational(1)));
  EXPECT_NEAR(std::abs(x.conj().to_complex() - std::conj(x.to_complex())), 0.0, 1e-12);
  EXPECT_THROW(Cyclotomic().inverse(), DomainError);
}

// Random expression trees, compared with std::complex arithmetic.
TEST(Cyclotomic, FloatEmbeddingTracksArithmetic) {
  std::mt19937_64 rng(11);
  for (std::uint32_t order : {8u, 60u, 128u, 1024u}) {
    Cyclotomic x(Rational(1));
    std::complex<double> f(1.0, 0.0);
    for (int op = 0; op < 100; ++op) {
      const auto k = std::uniform_int_distribution<std::uint32_t>(0, order - 1)(rng);
      const Cyclotomic z = Cyclotomic::zeta(order, k);
      const std::complex<double> zf = std::polar(1.0, 2.0 * std::numbers::pi * k / order);
      switch (rng() % 3) {
        case 0:
          x += z;
          f += zf;
          break;
        case 1:
          x -= z * Rational(1, 2);
          f -= 0.5 * zf;
          break;
        default:
          x *= z;
          f *= zf;
      }
    }
    EXPECT_NEAR(std::abs(x.to_complex() - f), 0.0, 1e-9) << "order " << order;
  }
}

TEST(Cyclotomic, ToStringIsCanonical) {
  EXPECT_EQ(Cyclotomic(Rational(2)).to_string(), "2");
  EXPECT_EQ(Cyclotomic().to_string(), "0");
}

TEST(CyclotomicOrder, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(euler_phi(120), 32u);
  EXPECT_EQ(common_order(8, 6), 24u);
  EXPECT_THROW(CyclotomicOrder::get(4097), CapacityError);
}

TEST(IntegralCyclotomic, AgreesWithRationalField) {
  IntegralCyclotomicRing ring(24);
  auto a = ring.add(ring.zeta(5), ring.constant(3));
  auto b = ring.sub(ring.zeta(7), ring.zeta(19));
  auto prod = ring.mul(a, b);
  const Cyclotomic ea = Cyclotomic::zeta(24, 5) + Cyclotomic(Rational(3));
  const Cyclotomic eb = Cyclotomic::zeta(24, 7) - Cyclotomic::zeta(24, 19);
  EXPECT_EQ(ring.to_cyclotomic(prod), ea * eb);
  EXPECT_EQ(ring.to_cyclotomic(ring.conj(a)), ea.conj());
  auto s = ring.constant(0);
  for (int k = 0; k < 24; k += 8) s = ring.add(s, ring.zeta(k));
  EXPECT_TRUE(ring.is_zero(s));
}

}  // namespace
}  // namespace zxverify
