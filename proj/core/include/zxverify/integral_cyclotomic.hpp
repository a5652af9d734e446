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

#include <cstdint>
#include <utility>
#include <vector>

#include "zxverify/cyclotomic.hpp"

namespace zxverify {

class CyclotomicOrder;

/// Z[zeta_N] at one fixed order with machine-integer coefficients.
///
/// This is the hot-loop companion of Cyclotomic: no rationals, no order
/// lifting, sparse terms. Arithmetic traps on int64 overflow
/// (CapacityError). Used by the Euler enumerator, where millions of 2x2
/// products must be reduced to canonical form.
class IntegralCyclotomicRing {
 public:
  /// Sorted (exponent, coefficient) pairs, no zero coefficients.
  using Element = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  explicit IntegralCyclotomicRing(std::uint32_t order);

  std::uint32_t order() const { return order_; }
  std::uint32_t phi() const;

  Element zeta(std::int64_t k) const;
  Element constant(std::int64_t c) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element conj(const Element& a) const;

  /// Canonical coordinates modulo Phi_N (length phi), written into `out`.
  void reduce(const Element& a, std::vector<std::int64_t>& out) const;
  bool is_zero(const Element& a) const;

  Cyclotomic to_cyclotomic(const Element& a) const;

 private:
  static void normalize(Element& e);

  std::uint32_t order_;
  const CyclotomicOrder* data_;
};

}  // namespace zxverify
