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
#include <span>
#include <vector>

namespace zxverify {

/// Precomputed data for Q(zeta_N): Euler's phi(N), the N-th cyclotomic
/// polynomial, and the power-basis expansion of zeta^k for phi <= k < N.
/// Instances are created once per order, cached for the life of the
/// process, and immutable; `get` is safe to call from several threads.
class CyclotomicOrder {
 public:
  static constexpr std::uint32_t kMaxOrder = 4096;

  /// Throws CapacityError for n > kMaxOrder and DomainError for n == 0.
  static const CyclotomicOrder& get(std::uint32_t n);

  std::uint32_t order() const { return order_; }
  std::uint32_t phi() const { return phi_; }

  /// Coefficients of Phi_N, lowest degree first; size phi + 1, monic.
  std::span<const std::int64_t> polynomial() const { return polynomial_; }

  /// Power-basis coordinates of zeta^k, phi <= k < order. Length phi.
  std::span<const std::int64_t> reduction(std::uint32_t k) const {
    return {table_.data() + static_cast<std::size_t>(k - phi_) * phi_, phi_};
  }

  CyclotomicOrder(const CyclotomicOrder&) = delete;
  CyclotomicOrder& operator=(const CyclotomicOrder&) = delete;

 private:
  explicit CyclotomicOrder(std::uint32_t n);

  std::uint32_t order_;
  std::uint32_t phi_;
  std::vector<std::int64_t> polynomial_;
  std::vector<std::int64_t> table_;
};

/// Integer coefficients of Phi_n, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n);

/// lcm(a, b), throwing CapacityError when it exceeds CyclotomicOrder's cap.
std::uint32_t common_order(std::uint32_t a, std::uint32_t b);

}  // namespace zxverify
