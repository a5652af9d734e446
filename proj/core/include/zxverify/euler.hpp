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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zxverify/angle.hpp"
#include "zxverify/diagram.hpp"
#include "zxverify/matrix.hpp"

namespace zxverify {

using Triple = std::array<Angle, 3>;

enum class EulerOrder { kZXZ, kXZX };

/// M(a) * M(b) * M(c) for one-wire spiders of the stated colours, acting on
/// column vectors (the third angle is applied first). Exact when every
/// angle is rational, float otherwise, unless a backend is forced.
Matrix euler_compose(const Triple& angles, EulerOrder order);
Matrix euler_compose(const Triple& angles, EulerOrder order, Backend backend);

/// ZXZ(lhs) = XZX(rhs) up to scalar, or XZX(lhs) = ZXZ(rhs) when
/// color_swapped is set.
struct EulerEquality {
  Triple lhs;
  Triple rhs;
  bool color_swapped = false;

  /// The two products agree up to a nonzero scalar.
  bool holds(double tol = kDefaultTolerance) const;
  /// Z and X exchanged on both sides.
  EulerEquality color_swap() const { return {lhs, rhs, !color_swapped}; }
};

inline constexpr int kEulerFamilyCount = 7;

/// Free angle names of a family: {"alpha2", "alpha3"}, {"alpha2", "beta1"},
/// {"alpha2", "alpha3"} and {"alpha3"} for families 4 to 7.
std::vector<std::string> euler_family_parameters(int family);

/// (ZXZ angles, XZX angles) of family 1..7 at integers n, m.
std::pair<Triple, Triple> instantiate_euler_family(
    int family, int n, int m, const std::map<std::string, Angle>& parameters);

using SymbolicTriple = std::array<AngleExpr, 3>;

/// The family with its free angles left as variables named as in
/// euler_family_parameters.
std::pair<SymbolicTriple, SymbolicTriple> euler_family_template(int family, int n, int m);

/// The three-node diagram whose interpretation is euler_compose(angles, order).
Diagram euler_diagram(const SymbolicTriple& angles, EulerOrder order);

struct EulerMatch {
  int family = 0;
  bool color_swapped = false;
  int n = 0;
  int m = 0;
  std::map<std::string, Angle> parameters;
};

struct EulerClassification {
  std::optional<EulerMatch> match;
  bool matrices_equal = false;
  /// A true equality no family explains. Never expected.
  bool completeness_violation = false;
};

/// Family match only, without the matrix check.
std::optional<EulerMatch> match_euler_family(const EulerEquality& eq,
                                             double tol = kDefaultTolerance);

/// First family (1..7, plain before color-swapped, (n, m) in (0,0), (0,1),
/// (1,0), (1,1)) whose instance equals the equality slot by slot mod 2*pi.
/// Exact on rational angles, within `tol` otherwise.
EulerClassification classify_euler(const EulerEquality& eq,
                                   double tol = kDefaultTolerance);

/// (b1, b2) with Z(a1) X(a2) = X(b1) Z(b2) up to scalar, verified on the
/// matrices before returning.
std::optional<std::pair<Angle, Angle>> two_spider_solve(
    const Angle& a1, const Angle& a2, double tol = kDefaultTolerance);

struct EulerDecomposition {
  Triple angles;
  EulerOrder order = EulerOrder::kZXZ;
  bool exact = false;  // angles are rational and verified exactly
  std::complex<double> scalar;  // matrix = scalar * euler_compose(angles)
};

/// Angles with matrix = lambda * euler_compose(angles, order), or nullopt
/// when the matrix is not a scalar multiple of a unitary. Exact input is
/// solved numerically, snapped to k*pi/d with d <= 1024, and re-verified
/// exactly.
std::optional<EulerDecomposition> euler_decompose(const Matrix& m,
                                                  EulerOrder order,
                                                  double tol = 1e-7);

struct EnumeratedEquality {
  EulerEquality equality;
  std::optional<EulerMatch> match;
};

struct EulerEnumeration {
  int max_denominator = 0;
  std::int64_t grid = 0;  // angles are k*pi/grid, 0 <= k < 2*grid
  std::size_t triples_per_side = 0;
  std::vector<EnumeratedEquality> equalities;  // sorted by (lhs, rhs)
  std::size_t unclassified = 0;
  std::array<std::size_t, kEulerFamilyCount> per_family{};
  std::array<std::size_t, kEulerFamilyCount> per_family_swapped{};
};

inline constexpr int kMaxEulerDenominator = 12;

/// All rational ZXZ = XZX equalities on the grid k*pi/q, q = lcm(1..Q),
/// each classified. Throws DomainError for Q < 1 or Q above the cap and
/// CapacityError when 2q exceeds the cyclotomic order limit.
EulerEnumeration enumerate_euler(int max_denominator, unsigned threads = 0);

/// Same on the explicit grid k*pi/q.
EulerEnumeration enumerate_euler_grid(std::int64_t q, unsigned threads = 0);

}  // namespace zxverify
