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
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zxverify/angle.hpp"
#include "zxverify/cyclotomic.hpp"

namespace zxverify {

namespace detail {
inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c) { return c == 0.0; }
}  // namespace detail

/// Polynomial in X = e^{i alpha}; coefficient r multiplies X^r.
template <typename T>
class ExpPolynomial {
 public:
  ExpPolynomial() = default;
  explicit ExpPolynomial(std::vector<T> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }

  /// c * X^r.
  static ExpPolynomial monomial(const T& c, std::size_t r) {
    std::vector<T> v(r + 1, T(0));
    v[r] = c;
    return ExpPolynomial(std::move(v));
  }

  const std::vector<T>& coefficients() const { return coefficients_; }
  /// Zero beyond the stored range.
  T coefficient(std::size_t r) const {
    return r < coefficients_.size() ? coefficients_[r] : T(0);
  }
  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }

  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  friend ExpPolynomial operator+(const ExpPolynomial& a, const ExpPolynomial& b) {
    std::vector<T> v(std::max(a.coefficients_.size(), b.coefficients_.size()), T(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) v[i] = v[i] + a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) v[i] = v[i] + b.coefficients_[i];
    return ExpPolynomial(std::move(v));
  }
  friend ExpPolynomial operator-(const ExpPolynomial& a, const ExpPolynomial& b) {
    return a + b.scaled(T(-1));
  }
  friend ExpPolynomial operator*(const ExpPolynomial& a, const ExpPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coefficients_.size() + b.coefficients_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
        v[i + j] = v[i + j] + a.coefficients_[i] * b.coefficients_[j];
      }
    }
    return ExpPolynomial(std::move(v));
  }
  ExpPolynomial scaled(const T& c) const {
    std::vector<T> v = coefficients_;
    for (auto& x : v) x = x * c;
    return ExpPolynomial(std::move(v));
  }

 private:
  void trim() {
    while (!coefficients_.empty() && detail::coeff_is_zero(coefficients_.back())) {
      coefficients_.pop_back();
    }
  }

  std::vector<T> coefficients_;
};

using ExactPolynomial = ExpPolynomial<Cyclotomic>;
using FloatPolynomial = ExpPolynomial<std::complex<double>>;

template <typename T>
using Vector2 = std::array<T, 2>;

/// Throws DomainError unless p is an odd prime <= 23.
void require_sup_prime(int p);

/// The interpretation of D(alpha, beta):
/// 1/2 ( (1+X^p) prod_k (X w^k + 1) + (1-X^p) prod_k (X w^k - 1),
///      -(1-X^p) prod_k (X w^k + 1) - (1+X^p) prod_k (X w^k - 1) )
/// with X = e^{i alpha}, w = e^{i beta}, k < p.
Vector2<Cyclotomic> d_semantics(int p, const RationalAngle& alpha,
                                const RationalAngle& beta);
Vector2<std::complex<double>> d_semantics(int p, double alpha, double beta);

/// (1, P) and (1, Q), the first and second entries of D.
Vector2<Cyclotomic> d1_semantics(int p, const RationalAngle& alpha,
                                 const RationalAngle& beta);
Vector2<std::complex<double>> d1_semantics(int p, double alpha, double beta);
Vector2<Cyclotomic> d2_semantics(int p, const RationalAngle& alpha,
                                 const RationalAngle& beta);
Vector2<std::complex<double>> d2_semantics(int p, double alpha, double beta);

/// P and Q expanded symbolically as polynomials in X = e^{i alpha}.
ExactPolynomial p_coefficients(int p, const RationalAngle& beta);
ExactPolynomial q_coefficients(int p, const RationalAngle& beta);
FloatPolynomial q_coefficients(int p, double beta);

/// (1/2^n) sum_{k < 2^n} P(w^k) / w^k with w = e^{2 i pi / 2^n}, which is
/// the degree-1 coefficient. Throws DomainError unless 2^n > degree(P).
Cyclotomic extract_a1(const ExactPolynomial& poly, int n);
std::complex<double> extract_a1(const FloatPolynomial& poly, int n);

/// -sum_{k < p} e^{i k beta}.
Cyclotomic negated_geometric_sum(int p, const RationalAngle& beta);

struct SupCycStep {
  std::string id;  // "a" .. "e"
  std::string description;
  bool passed = false;
  std::size_t checks = 0;
  std::string detail;  // first failure, if any
};

struct SupCycReport {
  int p = 0;
  int extraction_level = 0;  // n, minimal with 2^n > 2p
  std::int64_t extraction_width = 0;  // 2^n
  std::vector<SupCycStep> steps;
  bool passed() const;
};

/// Smallest n with 2^n > 2p.
int extraction_level(int p);

/// Runs the five semantic checks of the SUP_p to CYC_p chain. Throws
/// DomainError unless p is an odd prime <= 13.
SupCycReport verify_sup_to_cyc(int p, std::uint64_t seed = 1);

}  // namespace zxverify
