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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include "zxverify/rational_angle.hpp"

namespace zxverify {

/// A concrete angle: an exact rational multiple of pi, or real radians.
/// Real angles are kept in [0, 2*pi).
class Angle {
 public:
  Angle() = default;
  Angle(const RationalAngle& r) : value_(r) {}  // NOLINT
  static Angle real(double radians);
  static Angle pi_times(std::int64_t k, std::int64_t d = 1) {
    return RationalAngle::pi_times(k, d);
  }

  bool is_rational() const {
    return std::holds_alternative<RationalAngle>(value_);
  }
  /// Throws BackendError on a real angle.
  const RationalAngle& rational() const;
  double radians() const;

  Angle operator-() const;
  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const;
  Angle scaled(std::int64_t k) const;

  /// Exact equality for rationals; real angles compare by value.
  friend bool operator==(const Angle& a, const Angle& b) {
    return a.value_ == b.value_;
  }

  /// "pi/4" for rationals, "1.2345r" (17 significant digits) for reals.
  std::string to_string() const;

 private:
  std::variant<RationalAngle, double> value_;
};

using Assignment = std::map<std::string, Angle>;

/// constant + sum of integer multiples of named variables.
class AngleExpr {
 public:
  AngleExpr() = default;
  AngleExpr(const Angle& constant) : constant_(constant) {}  // NOLINT
  AngleExpr(const RationalAngle& constant) : constant_(constant) {}  // NOLINT

  static AngleExpr variable(const std::string& name, std::int64_t coeff = 1);

  const Angle& constant() const { return constant_; }
  const std::map<std::string, std::int64_t>& terms() const { return terms_; }

  /// No variables.
  bool is_concrete() const { return terms_.empty(); }
  bool is_rational() const { return constant_.is_rational(); }
  std::set<std::string> variables() const;

  AngleExpr operator-() const;
  AngleExpr operator+(const AngleExpr& other) const;
  AngleExpr operator-(const AngleExpr& other) const;
  /// Multiplies the constant and every coefficient by k.
  AngleExpr scaled(std::int64_t k) const;

  /// Throws UnboundVariableError when a variable is missing.
  Angle evaluate(const Assignment& assignment) const;
  /// Replaces bound variables, keeps unbound ones symbolic.
  AngleExpr substitute(const Assignment& assignment) const;

  friend bool operator==(const AngleExpr&, const AngleExpr&) = default;

  /// Text in the diagram format, e.g. "2*x-y+pi/4".
  std::string to_string() const;

 private:
  Angle constant_;
  std::map<std::string, std::int64_t> terms_;  // no zero coefficients
};

}  // namespace zxverify
