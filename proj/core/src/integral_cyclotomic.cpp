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

#include "zxverify/integral_cyclotomic.hpp"

#include <algorithm>

#include "zxverify/cyclotomic_order.hpp"
#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CapacityError("int64 overflow in integral cyclotomic arithmetic");
  }
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CapacityError("int64 overflow in integral cyclotomic arithmetic");
  }
  return r;
}

}  // namespace

IntegralCyclotomicRing::IntegralCyclotomicRing(std::uint32_t order)
    : order_(order), data_(&CyclotomicOrder::get(order)) {}

std::uint32_t IntegralCyclotomicRing::phi() const { return data_->phi(); }

void IntegralCyclotomicRing::normalize(Element& e) {
  std::sort(e.begin(), e.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size();) {
    std::int64_t sum = 0;
    std::size_t j = i;
    for (; j < e.size() && e[j].first == e[i].first; ++j) {
      sum = add_checked(sum, e[j].second);
    }
    if (sum != 0) e[out++] = {e[i].first, sum};
    i = j;
  }
  e.resize(out);
}

IntegralCyclotomicRing::Element IntegralCyclotomicRing::zeta(
    std::int64_t k) const {
  const std::int64_t n = order_;
  std::int64_t r = k % n;
  if (r < 0) r += n;
  return {{static_cast<std::uint32_t>(r), 1}};
}

IntegralCyclotomicRing::Element IntegralCyclotomicRing::constant(
    std::int64_t c) const {
  if (c == 0) return {};
  return {{0, c}};
}

IntegralCyclotomicRing::Element IntegralCyclotomicRing::add(
    const Element& a, const Element& b) const {
  Element out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  normalize(out);
  return out;
}

IntegralCyclotomicRing::Element IntegralCyclotomicRing::sub(
    const Element& a, const Element& b) const {
  Element out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  for (const auto& [e, c] : b) out.emplace_back(e, -c);
  normalize(out);
  return out;
}

IntegralCyclotomicRing::Element IntegralCyclotomicRing::mul(
    const Element& a, const Element& b) const {
  Element out;
  out.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      out.emplace_back((ea + eb) % order_, mul_checked(ca, cb));
    }
  }
  normalize(out);
  return out;
}

IntegralCyclotomicRing::Element IntegralCyclotomicRing::conj(
    const Element& a) const {
  Element out;
  out.reserve(a.size());
  for (const auto& [e, c] : a) out.emplace_back((order_ - e) % order_, c);
  normalize(out);
  return out;
}

void IntegralCyclotomicRing::reduce(const Element& a,
                                    std::vector<std::int64_t>& out) const {
  const std::uint32_t phi = data_->phi();
  out.assign(phi, 0);
  for (const auto& [e, c] : a) {
    if (e < phi) {
      out[e] = add_checked(out[e], c);
      continue;
    }
    auto row = data_->reduction(e);
    for (std::uint32_t j = 0; j < phi; ++j) {
      if (row[j] != 0) out[j] = add_checked(out[j], mul_checked(c, row[j]));
    }
  }
}

bool IntegralCyclotomicRing::is_zero(const Element& a) const {
  if (a.empty()) return true;
  std::vector<std::int64_t> coords;
  reduce(a, coords);
  return std::all_of(coords.begin(), coords.end(),
                     [](std::int64_t v) { return v == 0; });
}

Cyclotomic IntegralCyclotomicRing::to_cyclotomic(const Element& a) const {
  std::vector<Cyclotomic::Term> terms;
  terms.reserve(a.size());
  for (const auto& [e, c] : a) terms.push_back({e, Rational(c)});
  return Cyclotomic::from_terms(order_, std::move(terms));
}

}  // namespace zxverify
