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

#include "random_diagram.hpp"
#include "zxverify/errors.hpp"
#include "zxverify/interpret.hpp"
#include "zxverify/matrix.hpp"
#include "zxverify/matrix_io.hpp"

namespace zxverify {
namespace {

using C = std::complex<double>;

Cyclotomic q(long num, long den = 1) { return Cyclotomic(Rational(num, den)); }

Matrix exact(std::size_t r, std::size_t c, std::vector<Cyclotomic> v) {
  return Matrix::from_exact(r, c, std::move(v));
}

// Printed Z spider: 1 at (0,0), e^{ia} at the opposite corner.
std::vector<C> z_oracle(int n, int m, double a) {
  const std::size_t rows = std::size_t{1} << m;
  const std::size_t cols = std::size_t{1} << n;
  std::vector<C> v(rows * cols, 0.0);
  if (rows * cols == 1) return {C(1.0) + std::polar(1.0, a)};
  v[0] = 1.0;
  v[rows * cols - 1] += std::polar(1.0, a);
  return v;
}

// X spider from its closed form (1/sqrt2)^{n+m} (1 + e^{ia} (-1)^{|i|+|j|}).
std::vector<C> x_oracle(int n, int m, double a) {
  const std::size_t rows = std::size_t{1} << m;
  const std::size_t cols = std::size_t{1} << n;
  std::vector<C> v(rows * cols);
  const double s = std::pow(std::sqrt(0.5), n + m);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < cols; ++i) {
      const int parity = (std::popcount(i) + std::popcount(j)) % 2;
      v[j * cols + i] = s * (1.0 + std::polar(1.0, a) * (parity ? -1.0 : 1.0));
    }
  }
  return v;
}

double deviation(const Matrix& m, const std::vector<C>& v) {
  double d = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      d = std::max(d, std::abs(m.value(r, c) - v[r * m.cols() + c]));
    }
  }
  return d;
}

TEST(Interpret, Hadamard) {
  const Cyclotomic h = Cyclotomic::sqrt2().inverse();
  EXPECT_TRUE(equal_exact(interpret(Diagram::hadamard(), Backend::kExact),
                          exact(2, 2, {h, h, h, -h})));
}

TEST(Interpret, ScalarsAndWires) {
  EXPECT_TRUE(equal_exact(interpret(Diagram::z(0, 0), Backend::kExact), exact(1, 1, {q(2)})));
  EXPECT_TRUE(equal_exact(interpret(Diagram::z(1, 1), Backend::kExact),
                          Matrix::identity(2, Backend::kExact)));
  EXPECT_TRUE(equal_exact(interpret(Diagram::seq(Diagram::cap(), Diagram::cup()), Backend::kExact),
                          exact(1, 1, {q(2)})));
  EXPECT_TRUE(equal_exact(interpret(Diagram::empty(), Backend::kExact), exact(1, 1, {q(1)})));
  EXPECT_TRUE(equal_exact(interpret(Diagram::cup(), Backend::kExact),
                          exact(1, 4, {q(1), q(0), q(0), q(1)})));
  EXPECT_TRUE(equal_exact(interpret(Diagram::cap(), Backend::kExact),
                          exact(4, 1, {q(1), q(0), q(0), q(1)})));
  EXPECT_TRUE(equal_exact(interpret(Diagram::triangle(), Backend::kExact),
                          exact(2, 2, {q(1), q(1), q(0), q(1)})));
  EXPECT_TRUE(equal_exact(
      interpret(Diagram::swap(), Backend::kExact),
      exact(4, 4, {q(1), q(0), q(0), q(0), q(0), q(0), q(1), q(0), q(0), q(1), q(0), q(0), q(0),
                   q(0), q(0), q(1)})));
}

TEST(Interpret, SpidersMatchPrintedForms) {
  const std::vector<RationalAngle> angles = {RationalAngle(), RationalAngle::pi_times(1, 4),
                                             RationalAngle::pi_times(2, 3),
                                             RationalAngle::pi_times(7, 5)};
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& a : angles) {
        const Matrix z = interpret(Diagram::z(n, m, a), Backend::kExact);
        const Matrix x = interpret(Diagram::x(n, m, a), Backend::kExact);
        EXPECT_LT(deviation(z, z_oracle(n, m, a.radians())), 1e-12) << n << m << a.to_string();
        EXPECT_LT(deviation(x, x_oracle(n, m, a.radians())), 1e-12) << n << m << a.to_string();
      }
    }
  }
}

TEST(Interpret, XSpiderIsConjugatedZ) {
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; n + m <= 6; ++m) {
      const auto a = RationalAngle::pi_times(static_cast<std::int64_t>(rng() % 32), 16);
      Diagram hn = Diagram::empty();
      for (int i = 0; i < n; ++i) hn = Diagram::par(hn, Diagram::hadamard());
      Diagram hm = Diagram::empty();
      for (int i = 0; i < m; ++i) hm = Diagram::par(hm, Diagram::hadamard());
      const Matrix lhs = interpret(Diagram::x(n, m, a), Backend::kExact);
      const Matrix rhs = interpret(Diagram::seq({hn, Diagram::z(n, m, a), hm}), Backend::kExact);
      EXPECT_TRUE(equal_exact(lhs, rhs)) << n << "->" << m;
    }
  }
}

TEST(Interpret, Compositionality) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Diagram a = testing_util::random_rational_diagram(rng, 4);
    const Diagram b = testing_util::random_rational_diagram(rng, 4);
    const Matrix ma = interpret(a, Backend::kExact);
    const Matrix mb = interpret(b, Backend::kExact);
    EXPECT_TRUE(equal_exact(interpret(Diagram::par(a, b), Backend::kExact), kron(ma, mb)));
    if (a.outputs() == b.inputs()) {
      EXPECT_TRUE(equal_exact(interpret(Diagram::seq(a, b), Backend::kExact), mb * ma));
    }
  }
}

TEST(Interpret, BackendsAgree) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Diagram d = testing_util::random_rational_diagram(rng, 12);
    const Matrix e = interpret(d, Backend::kExact);
    const Matrix f = interpret(d, Backend::kFloat);
    EXPECT_LE(max_deviation(e.to_float(), f), 1e-9) << d.to_string();
  }
}

TEST(Interpret, Errors) {
  EXPECT_THROW(interpret(Diagram::z(1, 1, Angle::real(0.3)), Backend::kExact), BackendError);
  EXPECT_THROW(interpret(Diagram::z(1, 1, AngleExpr::variable("a")), Backend::kFloat),
               UnboundVariableError);
  EXPECT_THROW(interpret(Diagram::z(1, 15), Backend::kFloat), CapacityError);
  EXPECT_NO_THROW(interpret(Diagram::z(1, 3), Backend::kFloat, 3));
  EXPECT_THROW(interpret(Diagram::z(1, 4), Backend::kFloat, 3), CapacityError);
}

TEST(Interpret, WorkingOrder) {
  EXPECT_EQ(working_order(Diagram::z(1, 1, RationalAngle::pi_times(1, 3))), 24u);
  EXPECT_EQ(working_order(Diagram::hadamard()), 8u);
}

TEST(Matrix, EqualExact) {
  const Matrix id = Matrix::identity(2, Backend::kExact);
  EXPECT_TRUE(equal_exact(id, id));
  EXPECT_FALSE(equal_exact(id, exact(2, 2, {q(1), q(0), q(0), q(2)})));
  const Matrix a = exact(1, 1, {Cyclotomic::zeta(3)});
  const Matrix b = exact(1, 1, {Cyclotomic::zeta(6, 2)});
  EXPECT_TRUE(equal_exact(a, b));
  EXPECT_THROW(equal_exact(id, Matrix::identity(2, Backend::kFloat)), BackendError);
}

TEST(Matrix, EqualUpToScalar) {
  const Matrix m = exact(2, 2, {q(1), Cyclotomic::zeta(8), q(0), q(3)});
  const Matrix m2 = m.scaled(Scalar{Backend::kExact, q(2), 2.0});
  auto l = equal_up_to_scalar(m, m2);
  ASSERT_TRUE(l);
  EXPECT_EQ(l->exact, q(1, 2));
  EXPECT_FALSE(equal_up_to_scalar(Matrix::identity(2, Backend::kExact),
                                  exact(2, 2, {q(1), q(0), q(0), q(2)})));
  auto z = equal_up_to_scalar(Matrix::zeros(2, 2, Backend::kExact),
                              Matrix::zeros(2, 2, Backend::kExact));
  ASSERT_TRUE(z);
  EXPECT_EQ(z->exact, q(1));
  EXPECT_FALSE(equal_up_to_scalar(Matrix::zeros(2, 2, Backend::kExact),
                                  Matrix::identity(2, Backend::kExact)));
  EXPECT_THROW(equal_up_to_scalar(Matrix::identity(2, Backend::kExact),
                                  Matrix::identity(4, Backend::kExact)),
               DomainError);
}

TEST(Matrix, UpToScalarIsEquivalence) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<C> v(4);
    for (auto& x : v) x = C(u(rng), u(rng));
    const C l1(u(rng) + 2.0, u(rng));
    const C l2(u(rng), u(rng) - 2.0);
    const Matrix a = Matrix::from_float(2, 2, v);
    std::vector<C> bv = v;
    for (auto& x : bv) x *= l1;
    std::vector<C> cv = bv;
    for (auto& x : cv) x *= l2;
    const Matrix b = Matrix::from_float(2, 2, bv);
    const Matrix c = Matrix::from_float(2, 2, cv);
    ASSERT_TRUE(equal_up_to_scalar(a, a));
    auto ab = equal_up_to_scalar(a, b);
    auto ba = equal_up_to_scalar(b, a);
    auto ac = equal_up_to_scalar(a, c);
    ASSERT_TRUE(ab && ba && ac);
    EXPECT_NEAR(std::abs(ab->value * ba->value - 1.0), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(ac->value - 1.0 / (l1 * l2)), 0.0, 1e-9);
  }
}

TEST(MatrixIo, RoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Diagram d = testing_util::random_rational_diagram(rng, 6);
    for (Backend b : {Backend::kExact, Backend::kFloat}) {
      const Matrix m = interpret(d, b);
      const Matrix back = parse_matrix(format_matrix(m));
      ASSERT_EQ(back.backend(), b);
      if (b == Backend::kExact) {
        EXPECT_TRUE(equal_exact(m, back));
      } else {
        EXPECT_EQ(max_deviation(m, back), 0.0);
      }
    }
  }
}

TEST(MatrixIo, HadamardDump) {
  EXPECT_EQ(format_matrix(interpret(Diagram::hadamard(), Backend::kExact)),
            "# rows 2 cols 2 backend exact order 8\n"
            "1/2*z^1-1/2*z^3 1/2*z^1-1/2*z^3\n"
            "1/2*z^1-1/2*z^3 -1/2*z^1+1/2*z^3\n");
}

}  // namespace
}  // namespace zxverify
