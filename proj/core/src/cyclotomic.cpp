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

#include "zxverify/cyclotomic.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "zxverify/cyclotomic_order.hpp"
#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (b nonzero, trimmed) over Q; quotient optional.
Poly poly_divmod(Poly a, const Poly& b, Poly* quotient) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    if (quotient) (*quotient)[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Power-basis accumulation with a common integer denominator.
std::vector<mpz_class> reduce_scaled(std::span<const Cyclotomic::Term> terms,
                                     const CyclotomicOrder& ord,
                                     mpz_class& denominator) {
  denominator = 1;
  for (const auto& t : terms) {
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(),
            t.coefficient.get_den_mpz_t());
  }
  const std::uint32_t phi = ord.phi();
  std::vector<mpz_class> acc(phi, 0);
  mpz_class c;
  for (const auto& t : terms) {
    c = t.coefficient.get_num() * (denominator / t.coefficient.get_den());
    if (t.exponent < phi) {
      acc[t.exponent] += c;
      continue;
    }
    auto row = ord.reduction(t.exponent);
    for (std::uint32_t j = 0; j < phi; ++j) {
      if (row[j] != 0) acc[j] += c * static_cast<long>(row[j]);
    }
  }
  return acc;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& value) {
  if (value != 0) {
    Rational v = value;
    v.canonicalize();
    terms_.push_back({0, v});
  }
}

Cyclotomic Cyclotomic::zeta(std::uint32_t order, std::int64_t k) {
  CyclotomicOrder::get(order);  // validates the order
  const std::int64_t n = order;
  std::int64_t e = k % n;
  if (e < 0) e += n;
  return Cyclotomic(order, {{static_cast<std::uint32_t>(e), Rational(1)}});
}

Cyclotomic Cyclotomic::root_of_unity(const RationalAngle& angle) {
  // e^{i pi a/b} = zeta_{2b}^a, then drop the common factor.
  const std::int64_t two_den = 2 * angle.denominator();
  const std::int64_t g = std::gcd(angle.numerator(), two_den);
  const std::int64_t order = two_den / g;
  if (order > static_cast<std::int64_t>(CyclotomicOrder::kMaxOrder)) {
    throw CapacityError("angle " + angle.to_string() +
                        " needs a cyclotomic order above the supported maximum");
  }
  return zeta(static_cast<std::uint32_t>(order), angle.numerator() / g);
}

Cyclotomic Cyclotomic::sqrt2() {
  return Cyclotomic(8, {{1, Rational(1)}, {7, Rational(1)}});
}

Cyclotomic Cyclotomic::from_terms(std::uint32_t order, std::vector<Term> terms) {
  CyclotomicOrder::get(order);
  for (auto& t : terms) t.exponent %= order;
  normalize_terms(terms);
  return Cyclotomic(order, std::move(terms));
}

void Cyclotomic::normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coefficient;
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) {
      sum += terms[j].coefficient;
      ++j;
    }
    if (sum != 0) {
      sum.canonicalize();
      terms[out].exponent = terms[i].exponent;
      terms[out].coefficient = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Cyclotomic Cyclotomic::lifted(std::uint32_t order) const {
  if (order == order_) return *this;
  if (order % order_ != 0) {
    throw DomainError("cannot lift order " + std::to_string(order_) + " to " +
                      std::to_string(order));
  }
  CyclotomicOrder::get(order);
  const std::uint32_t scale = order / order_;
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.exponent *= scale;
  return Cyclotomic(order, std::move(terms));
}

bool Cyclotomic::is_zero() const {
  if (terms_.empty()) return true;
  if (order_ == 1) return false;  // a single nonzero rational
  mpz_class den;
  auto acc = reduce_scaled(terms_, CyclotomicOrder::get(order_), den);
  return std::all_of(acc.begin(), acc.end(),
                     [](const mpz_class& v) { return v == 0; });
}

std::vector<Rational> Cyclotomic::canonical() const {
  const auto& ord = CyclotomicOrder::get(order_);
  mpz_class den;
  auto acc = reduce_scaled(terms_, ord, den);
  std::vector<Rational> out(ord.phi());
  for (std::size_t j = 0; j < acc.size(); ++j) {
    out[j] = Rational(acc[j], den);
    out[j].canonicalize();
  }
  return out;
}

Cyclotomic Cyclotomic::reduced() const {
  auto coeffs = canonical();
  std::vector<Term> terms;
  for (std::uint32_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) terms.push_back({j, coeffs[j]});
  }
  return Cyclotomic(order_, std::move(terms));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.exponent = (order_ - t.exponent) % order_;
  normalize_terms(terms);
  return Cyclotomic(order_, std::move(terms));
}

Cyclotomic Cyclotomic::inverse() const {
  const auto& ord = CyclotomicOrder::get(order_);
  Poly a = canonical();
  trim(a);
  if (a.empty()) throw DomainError("inverse of zero cyclotomic");
  Poly modulus(ord.polynomial().begin(), ord.polynomial().end());
  // Extended Euclid on (modulus, a), tracking the coefficient of a.
  Poly r0 = modulus, r1 = a;
  Poly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    if (r1.empty()) throw DomainError("cyclotomic element is not invertible");
    Poly q;
    Poly r2 = poly_divmod(r0, r1, &q);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant c with s1 * a == c (mod Phi_N).
  const Rational c = r1[0];
  std::vector<Term> terms;
  for (std::uint32_t j = 0; j < s1.size(); ++j) {
    if (s1[j] != 0) terms.push_back({j, Rational(s1[j] / c)});
  }
  normalize_terms(terms);
  return Cyclotomic(order_, std::move(terms));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0;
  const double step = 2.0 * std::numbers::pi / order_;
  for (const auto& t : terms_) {
    sum += t.coefficient.get_d() * std::polar(1.0, step * t.exponent);
  }
  return sum;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.terms_.empty()) return *this;
  const std::uint32_t order = common_order(order_, other.order_);
  if (order != order_) *this = lifted(order);
  const std::uint32_t scale = order / other.order_;
  terms_.reserve(terms_.size() + other.terms_.size());
  for (const auto& t : other.terms_) {
    terms_.push_back({t.exponent * scale, t.coefficient});
  }
  normalize_terms(terms_);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  return *this += -other;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  *this = *this * other;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Cyclotomic();
  const std::uint32_t order = common_order(a.order_, b.order_);
  const std::uint32_t sa = order / a.order_;
  const std::uint32_t sb = order / b.order_;
  std::vector<Cyclotomic::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      terms.push_back({(x.exponent * sa + y.exponent * sb) % order,
                       x.coefficient * y.coefficient});
    }
  }
  Cyclotomic::normalize_terms(terms);
  return Cyclotomic(order, std::move(terms));
}

std::string Cyclotomic::to_string() const {
  auto coeffs = canonical();
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    std::string c = coeffs[j].get_str();
    if (!out.empty() && c.front() != '-') out += '+';
    out += j == 0 ? c : c + "*z^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace zxverify
