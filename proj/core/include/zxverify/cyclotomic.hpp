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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zxverify/rational_angle.hpp"

namespace zxverify {

using Rational = mpq_class;

/// An exact element of the cyclotomic field Q(zeta_N).
///
/// Values are stored as sparse sums  sum_k c_k * zeta_N^k  over the full power
/// basis 1, zeta, ..., zeta^(N-1) with arbitrary-precision rational c_k. That
/// representation is not unique (1 + zeta_2 == 0), so equality goes through
/// `canonical()`, which reduces modulo the N-th cyclotomic polynomial.
/// Reduction is lazy: arithmetic never reduces, only comparisons do.
///
/// Binary operations lift both operands to the common order lcm(N_x, N_y);
/// orders above CyclotomicOrder::kMaxOrder throw CapacityError.
///
/// sqrt(2) lives in Q(zeta_8) as zeta_8 + zeta_8^-1, which is how the
/// Hadamard normalization stays exact.
class Cyclotomic {
 public:
  struct Term {
    std::uint32_t exponent;
    Rational coefficient;
  };

  /// Zero, at order 1.
  Cyclotomic() = default;
  /// A rational constant, at order 1.
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}  // NOLINT

  /// zeta_order^k.
  static Cyclotomic zeta(std::uint32_t order, std::int64_t k = 1);
  /// e^{i angle} at the smallest order containing it.
  static Cyclotomic root_of_unity(const RationalAngle& angle);
  static Cyclotomic sqrt2();
  /// Sum of terms at the given order; exponents are taken modulo order.
  static Cyclotomic from_terms(std::uint32_t order, std::vector<Term> terms);

  std::uint32_t order() const { return order_; }
  std::span<const Term> terms() const { return terms_; }

  /// The same value written at a multiple of the current order.
  Cyclotomic lifted(std::uint32_t order) const;

  bool is_zero() const;
  /// Canonical power-basis coordinates modulo Phi_N; length phi(N).
  std::vector<Rational> canonical() const;
  /// Same value with only exponents below phi(N).
  Cyclotomic reduced() const;

  Cyclotomic conj() const;
  /// Multiplicative inverse. Throws DomainError on zero.
  Cyclotomic inverse() const;

  std::complex<double> to_complex() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) {
    return a += b;
  }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) {
    return a -= b;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return (a - b).is_zero();
  }

  /// Canonical text "c*z^k+..." where z is zeta_N for N == order(); "0" for
  /// zero. Rationals print as "a/b" or "a".
  std::string to_string() const;

 private:
  Cyclotomic(std::uint32_t order, std::vector<Term> terms)
      : order_(order), terms_(std::move(terms)) {}

  static void normalize_terms(std::vector<Term>& terms);

  std::uint32_t order_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

/// Free-function spelling used by the exact backend.
inline Cyclotomic root_of_unity(const RationalAngle& angle) {
  return Cyclotomic::root_of_unity(angle);
}

}  // namespace zxverify
