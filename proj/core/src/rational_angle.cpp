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

#include "zxverify/rational_angle.hpp"

#include <numbers>
#include <numeric>

#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

__extension__ typedef __int128 Wide;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

RationalAngle from_wide(Wide num, Wide den) {
  if (den == 0) throw DomainError("angle denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Wide period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  if (den > INT64_MAX) throw CapacityError("angle denominator overflows");
  return RationalAngle::normalize(static_cast<std::int64_t>(num),
                                  static_cast<std::int64_t>(den));
}

}  // namespace

RationalAngle RationalAngle::normalize(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("angle denominator is zero");
  Wide n = num;
  Wide d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Wide period = 2 * d;
  n %= period;
  if (n < 0) n += period;
  return RationalAngle(static_cast<std::int64_t>(n),
                       static_cast<std::int64_t>(d));
}

double RationalAngle::radians() const {
  return std::numbers::pi * static_cast<double>(num_) /
         static_cast<double>(den_);
}

RationalAngle RationalAngle::operator-() const {
  return normalize(-num_, den_);
}

RationalAngle RationalAngle::operator+(const RationalAngle& other) const {
  Wide g = std::gcd(den_, other.den_);
  Wide den = static_cast<Wide>(den_ / g) * other.den_;
  Wide num = static_cast<Wide>(num_) * (other.den_ / g) +
             static_cast<Wide>(other.num_) * (den_ / g);
  return from_wide(num, den);
}

RationalAngle RationalAngle::operator-(const RationalAngle& other) const {
  return *this + (-other);
}

RationalAngle RationalAngle::scaled(std::int64_t k) const {
  Wide period = 2 * static_cast<Wide>(den_);
  Wide kk = static_cast<Wide>(k) % period;
  return from_wide(kk * num_, den_);
}

std::strong_ordering operator<=>(const RationalAngle& a,
                                 const RationalAngle& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RationalAngle::to_string() const {
  if (num_ == 0) return "0";
  std::string s = num_ == 1 ? "pi" : std::to_string(num_) + "*pi";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

}  // namespace zxverify
