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

#include "zxverify/euler.hpp"

#include <cmath>
#include <numbers>

#include "zxverify/cyclotomic_order.hpp"
#include "zxverify/errors.hpp"
#include "zxverify/interpret.hpp"

namespace zxverify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool all_rational(const Triple& t) {
  return t[0].is_rational() && t[1].is_rational() && t[2].is_rational();
}

bool same_angle(const Angle& a, const Angle& b, double tol) {
  if (a.is_rational() && b.is_rational()) return a == b;
  double d = std::fmod(std::abs(a.radians() - b.radians()), kTwoPi);
  return std::min(d, kTwoPi - d) <= tol;
}

bool same_triple(const Triple& a, const Triple& b, double tol) {
  for (int i = 0; i < 3; ++i) {
    if (!same_angle(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)], tol)) {
      return false;
    }
  }
  return true;
}

Matrix spider(GeneratorKind kind, const Angle& a, Backend backend,
              std::uint32_t order) {
  Generator g;
  g.kind = kind;
  g.inputs = 1;
  g.outputs = 1;
  g.angle = AngleExpr(a);
  return generator_matrix(g, backend, order);
}

std::int64_t sign(int n) { return n % 2 == 0 ? 1 : -1; }

// Free parameters of `family` read off (A, B) for given n, m.
std::map<std::string, Angle> solve_parameters(int family, int n, int m,
                                              const Triple& a, const Triple& b) {
  const Angle big_n = Angle::pi_times(n);
  std::map<std::string, Angle> p;
  switch (family) {
    case 1:
      p["alpha2"] = a[1].scaled(sign(n));
      p["alpha3"] = a[2] - big_n;
      break;
    case 2:
      p["alpha2"] = a[1].scaled(sign(n));
      p["beta1"] = b[0].scaled(sign(m));
      break;
    case 3:
      p["alpha2"] = a[2].scaled(sign(n));
      p["alpha3"] = b[0].scaled(sign(m));
      break;
    case 4:
    case 5:
      p["alpha3"] = a[2] - big_n;
      break;
    case 6:
    case 7:
      p["alpha3"] = a[1] - big_n;
      break;
    default:
      throw DomainError("Euler family must be in 1..7");
  }
  return p;
}

}  // namespace

Matrix euler_compose(const Triple& angles, EulerOrder order) {
  return euler_compose(angles, order,
                       all_rational(angles) ? Backend::kExact : Backend::kFloat);
}

Matrix euler_compose(const Triple& angles, EulerOrder order, Backend backend) {
  std::uint32_t n = 1;
  if (backend == Backend::kExact) {
    for (const auto& a : angles) {
      n = common_order(n, Cyclotomic::root_of_unity(a.rational()).order());
    }
  }
  const GeneratorKind outer = order == EulerOrder::kZXZ ? GeneratorKind::kZ : GeneratorKind::kX;
  const GeneratorKind inner = order == EulerOrder::kZXZ ? GeneratorKind::kX : GeneratorKind::kZ;
  return spider(outer, angles[0], backend, n) * spider(inner, angles[1], backend, n) *
         spider(outer, angles[2], backend, n);
}

bool EulerEquality::holds(double tol) const {
  const EulerOrder lo = color_swapped ? EulerOrder::kXZX : EulerOrder::kZXZ;
  const EulerOrder ro = color_swapped ? EulerOrder::kZXZ : EulerOrder::kXZX;
  const bool exact = all_rational(lhs) && all_rational(rhs);
  const Backend backend = exact ? Backend::kExact : Backend::kFloat;
  return equal_up_to_scalar(euler_compose(lhs, lo, backend),
                            euler_compose(rhs, ro, backend), tol)
      .has_value();
}

std::vector<std::string> euler_family_parameters(int family) {
  switch (family) {
    case 1:
    case 3:
      return {"alpha2", "alpha3"};
    case 2:
      return {"alpha2", "beta1"};
    case 4:
    case 5:
    case 6:
    case 7:
      return {"alpha3"};
    default:
      throw DomainError("Euler family must be in 1..7");
  }
}

namespace {

template <typename T, typename Get>
std::pair<std::array<T, 3>, std::array<T, 3>> family_triples(int family, int n, int m,
                                                             Get get) {
  const T big_n = Angle::pi_times(n);
  const T big_m = Angle::pi_times(m);
  const T h = Angle::pi_times(1, 2);
  const std::int64_t sn = sign(n);
  const std::int64_t sm = sign(m);
  switch (family) {
    case 1: {
      const T a2 = get("alpha2");
      const T a3 = get("alpha3");
      return {{big_n, a2.scaled(sn), a3 + big_n}, {a2 + big_m, a3.scaled(sm), big_m}};
    }
    case 2: {
      const T a2 = get("alpha2");
      const T b1 = get("beta1");
      return {{big_m + big_n, a2.scaled(sn), big_n}, {b1.scaled(sm), big_m, a2 - b1}};
    }
    case 3: {
      const T a2 = get("alpha2");
      const T a3 = get("alpha3");
      return {{big_m - a2, big_n, a2.scaled(sn)}, {a3.scaled(sm), big_m, big_n - a3}};
    }
    case 4: {
      const T a3 = get("alpha3");
      return {{big_n + h, big_n + h, big_n + a3}, {big_m + a3, big_m + h, big_m + h}};
    }
    case 5: {
      const T a3 = get("alpha3");
      return {{big_n - h, big_n + h, big_n + a3}, {big_m - a3, big_m - h, big_m + h}};
    }
    case 6: {
      const T a3 = get("alpha3");
      return {{big_n + h, big_n + a3, big_m - h}, {big_n - h, big_m + a3, big_m + h}};
    }
    case 7: {
      const T a3 = get("alpha3");
      return {{big_n + h, big_n + a3, big_m - h}, {big_n + h, big_m - a3, big_m - h}};
    }
    default:
      throw DomainError("Euler family must be in 1..7");
  }
}

}  // namespace

std::pair<Triple, Triple> instantiate_euler_family(
    int family, int n, int m, const std::map<std::string, Angle>& parameters) {
  return family_triples<Angle>(family, n, m, [&](const char* name) {
    auto it = parameters.find(name);
    if (it == parameters.end()) throw UnboundVariableError(name);
    return it->second;
  });
}

std::pair<SymbolicTriple, SymbolicTriple> euler_family_template(int family, int n, int m) {
  return family_triples<AngleExpr>(family, n, m,
                                   [](const char* name) { return AngleExpr::variable(name); });
}

Diagram euler_diagram(const SymbolicTriple& angles, EulerOrder order) {
  const bool zxz = order == EulerOrder::kZXZ;
  const auto node = [&](int i) {
    const AngleExpr& a = angles[static_cast<std::size_t>(i)];
    return (i == 1) == zxz ? Diagram::x(1, 1, a) : Diagram::z(1, 1, a);
  };
  // The rightmost matrix factor acts first, so it sits on top.
  return Diagram::seq({node(2), node(1), node(0)});
}

std::optional<EulerMatch> match_euler_family(const EulerEquality& eq, double tol) {
  // Orientation ZXZ(a) = XZX(b).
  const Triple& a = eq.color_swapped ? eq.rhs : eq.lhs;
  const Triple& b = eq.color_swapped ? eq.lhs : eq.rhs;
  static constexpr int kNM[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (int family = 1; family <= kEulerFamilyCount; ++family) {
    for (int swapped = 0; swapped < 2; ++swapped) {
      // A color-swapped instance reads the family with its sides exchanged.
      const Triple& fa = swapped ? b : a;
      const Triple& fb = swapped ? a : b;
      for (const auto& nm : kNM) {
        auto params = solve_parameters(family, nm[0], nm[1], fa, fb);
        auto [la, rb] = instantiate_euler_family(family, nm[0], nm[1], params);
        if (same_triple(la, fa, tol) && same_triple(rb, fb, tol)) {
          return EulerMatch{family, swapped != 0, nm[0], nm[1], std::move(params)};
        }
      }
    }
  }
  return std::nullopt;
}

EulerClassification classify_euler(const EulerEquality& eq, double tol) {
  EulerClassification out;
  out.match = match_euler_family(eq, tol);
  out.matrices_equal = eq.holds(tol);
  out.completeness_violation = !out.match && out.matrices_equal;
  return out;
}

std::optional<std::pair<Angle, Angle>> two_spider_solve(const Angle& a1,
                                                        const Angle& a2,
                                                        double tol) {
  const Angle zero;
  const Angle pi = Angle::pi_times(1);
  std::optional<std::pair<Angle, Angle>> candidate;
  if (same_angle(a2, zero, tol)) {
    candidate = {zero, a1};
  } else if (same_angle(a2, pi, tol)) {
    candidate = {pi, -a1};
  } else if (same_angle(a1, zero, tol)) {
    candidate = {a2, zero};
  } else if (same_angle(a1, pi, tol)) {
    candidate = {-a2, pi};
  }
  if (!candidate) return std::nullopt;
  const bool exact = a1.is_rational() && a2.is_rational() &&
                     candidate->first.is_rational() && candidate->second.is_rational();
  const Backend backend = exact ? Backend::kExact : Backend::kFloat;
  std::uint32_t n = 1;
  if (exact) {
    for (const Angle* a : std::array<const Angle*, 4>{&a1, &a2, &candidate->first, &candidate->second}) {
      n = common_order(n, Cyclotomic::root_of_unity(a->rational()).order());
    }
  }
  const Matrix lhs = spider(GeneratorKind::kZ, a1, backend, n) *
                     spider(GeneratorKind::kX, a2, backend, n);
  const Matrix rhs = spider(GeneratorKind::kX, candidate->first, backend, n) *
                     spider(GeneratorKind::kZ, candidate->second, backend, n);
  if (!equal_up_to_scalar(lhs, rhs, tol)) return std::nullopt;
  return candidate;
}

namespace {

// Best k*pi/d approximation with d <= max_den (Stern-Brocot on x/pi).
RationalAngle snap(double radians, std::int64_t max_den) {
  double x = std::fmod(radians / std::numbers::pi, 2.0);
  if (x < 0) x += 2.0;
  std::int64_t best_num = 0;
  std::int64_t best_den = 1;
  double best_err = std::abs(x);
  for (std::int64_t d = 1; d <= max_den; ++d) {
    const auto k = static_cast<std::int64_t>(std::llround(x * static_cast<double>(d)));
    const double err = std::abs(x - static_cast<double>(k) / static_cast<double>(d));
    if (err < best_err - 1e-15) {
      best_err = err;
      best_num = k;
      best_den = d;
    }
  }
  return RationalAngle::normalize(best_num, best_den);
}

std::optional<Triple> solve_zxz(const std::array<std::complex<double>, 4>& m,
                                double tol) {
  // 2 ZXZ(a, b, c) = [[1+eb, (1-eb)ec], [ea(1-eb), ea(1+eb)ec]].
  const double scale = std::max({std::abs(m[0]), std::abs(m[1]), std::abs(m[2]), std::abs(m[3])});
  if (scale <= tol) return std::nullopt;
  if (std::abs(m[0]) <= tol * scale) {
    if (std::abs(m[1]) <= tol * scale || std::abs(m[2]) <= tol * scale) return std::nullopt;
    // b = pi: [[0, ec], [ea, 0]] up to scalar; fix c = 0.
    return Triple{Angle::real(std::arg(m[2] / m[1])), Angle::pi_times(1), Angle()};
  }
  const std::complex<double> r01 = m[1] / m[0];
  const std::complex<double> r10 = m[2] / m[0];
  const std::complex<double> r11 = m[3] / m[0];
  const double t = std::abs(r01);
  if (t <= tol) {
    // b = 0: diag(1, ea ec); fix c = 0.
    return Triple{Angle::real(std::arg(r11)), Angle(), Angle()};
  }
  // r01 = -i tan(b/2) ec and r10 = -i tan(b/2) ea.
  const double b = 2.0 * std::atan(t);
  const std::complex<double> i(0.0, 1.0);
  return Triple{Angle::real(std::arg(i * r10 / t)), Angle::real(b),
                Angle::real(std::arg(i * r01 / t))};
}

}  // namespace

std::optional<EulerDecomposition> euler_decompose(const Matrix& m,
                                                  EulerOrder order, double tol) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw DomainError("Euler decomposition needs a 2x2 matrix");
  }
  std::array<std::complex<double>, 4> v = {m.value(0, 0), m.value(0, 1), m.value(1, 0),
                                           m.value(1, 1)};
  if (order == EulerOrder::kXZX) {
    // XZX(a,b,c) = H ZXZ(a,b,c) H, so decompose H m H.
    const std::complex<double> a = v[0], b = v[1], c = v[2], d = v[3];
    v = {0.5 * (a + b + c + d), 0.5 * (a - b + c - d), 0.5 * (a + b - c - d),
         0.5 * (a - b - c + d)};
  }
  auto triple = solve_zxz(v, tol);
  if (!triple) return std::nullopt;
  EulerDecomposition out;
  out.order = order;
  out.angles = *triple;
  const Matrix fm = m.to_float();
  const Matrix fc = euler_compose(out.angles, order, Backend::kFloat);
  auto lambda = equal_up_to_scalar(fm, fc, tol);
  if (!lambda) return std::nullopt;
  out.scalar = lambda->value;
  if (m.backend() == Backend::kExact) {
    Triple snapped = {Angle(snap(out.angles[0].radians(), 1024)),
                      Angle(snap(out.angles[1].radians(), 1024)),
                      Angle(snap(out.angles[2].radians(), 1024))};
    try {
      if (auto exact = equal_up_to_scalar(m, euler_compose(snapped, order, Backend::kExact))) {
        out.angles = snapped;
        out.exact = true;
        out.scalar = exact->value;
      }
    } catch (const CapacityError&) {
      // Snapped angles need too large an order; keep the float answer.
    }
  }
  return out;
}

}  // namespace zxverify
