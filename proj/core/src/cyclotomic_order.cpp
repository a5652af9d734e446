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

#include "zxverify/cyclotomic_order.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CapacityError("integer overflow in cyclotomic table");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CapacityError("integer overflow in cyclotomic table");
  }
  return r;
}

// p(x) -> p(x^k)
Poly compose_power(const Poly& p, std::uint32_t k) {
  Poly out((p.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * k] = p[i];
  return out;
}

// Exact division by a monic polynomial.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  Poly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    std::int64_t c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      num[i - dd + j] = checked_add(num[i - dd + j], -checked_mul(c, den[j]));
    }
  }
  return quot;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
  // Phi_1 = x - 1; Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x) for p not dividing m;
  // Phi_n(x) = Phi_rad(n)(x^(n / rad(n))).
  Poly phi{-1, 1};
  std::uint32_t radical = 1;
  for (std::uint32_t p : prime_factors(n)) {
    phi = divide_exact(compose_power(phi, p), phi);
    radical *= p;
  }
  return compose_power(phi, n / radical);
}

std::uint32_t common_order(std::uint32_t a, std::uint32_t b) {
  std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  if (l > CyclotomicOrder::kMaxOrder) {
    throw CapacityError("cyclotomic order " + std::to_string(l) +
                        " exceeds the supported maximum " +
                        std::to_string(CyclotomicOrder::kMaxOrder));
  }
  return static_cast<std::uint32_t>(l);
}

CyclotomicOrder::CyclotomicOrder(std::uint32_t n)
    : order_(n), phi_(euler_phi(n)), polynomial_(cyclotomic_polynomial(n)) {
  const std::size_t rows = order_ - phi_;
  table_.assign(rows * phi_, 0);
  if (rows == 0) return;
  // zeta^phi = -(Phi_0 + Phi_1 zeta + ... + Phi_{phi-1} zeta^{phi-1})
  for (std::uint32_t j = 0; j < phi_; ++j) table_[j] = -polynomial_[j];
  for (std::size_t r = 1; r < rows; ++r) {
    const std::int64_t* prev = table_.data() + (r - 1) * phi_;
    std::int64_t* cur = table_.data() + r * phi_;
    const std::int64_t top = prev[phi_ - 1];
    for (std::uint32_t j = phi_; j-- > 1;) cur[j] = prev[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::uint32_t j = 0; j < phi_; ++j) {
        cur[j] = checked_add(cur[j], checked_mul(top, table_[j]));
      }
    }
  }
}

const CyclotomicOrder& CyclotomicOrder::get(std::uint32_t n) {
  if (n == 0) throw DomainError("cyclotomic order 0");
  if (n > kMaxOrder) {
    throw CapacityError("cyclotomic order " + std::to_string(n) +
                        " exceeds the supported maximum " +
                        std::to_string(kMaxOrder));
  }
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<const CyclotomicOrder>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::unique_ptr<const CyclotomicOrder>(
                              new CyclotomicOrder(n)))
             .first;
  }
  return *it->second;
}

}  // namespace zxverify
