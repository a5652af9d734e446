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

#include <compare>
#include <cstdint>
#include <string>

namespace zxverify {

/// An angle that is an exact rational multiple of pi, kept reduced modulo
/// 2*pi: the value is (numerator / denominator) * pi with
/// gcd(|numerator|, denominator) == 1 and 0 <= numerator < 2 * denominator.
class RationalAngle {
 public:
  /// The zero angle.
  constexpr RationalAngle() = default;

  /// Normalizes (num / den) * pi. Throws DomainError when den == 0.
  static RationalAngle normalize(std::int64_t num, std::int64_t den);

  /// k * pi / d for convenience; same as normalize.
  static RationalAngle pi_times(std::int64_t k, std::int64_t d = 1) {
    return normalize(k, d);
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  double radians() const;

  RationalAngle operator-() const;
  RationalAngle operator+(const RationalAngle& other) const;
  RationalAngle operator-(const RationalAngle& other) const;
  /// k * angle, reduced modulo 2*pi.
  RationalAngle scaled(std::int64_t k) const;

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
  friend std::strong_ordering operator<=>(const RationalAngle& a,
                                          const RationalAngle& b);

  /// Text in the diagram format: "0", "pi", "pi/4", "3*pi/2".
  std::string to_string() const;

 private:
  constexpr RationalAngle(std::int64_t num, std::int64_t den)
      : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Free-function spelling of RationalAngle::normalize.
inline RationalAngle angle_normalize(std::int64_t num, std::int64_t den) {
  return RationalAngle::normalize(num, den);
}

}  // namespace zxverify
