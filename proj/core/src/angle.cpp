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

#include "zxverify/angle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace

Angle Angle::real(double radians) {
  Angle a;
  a.value_ = wrap(radians);
  return a;
}

const RationalAngle& Angle::rational() const {
  if (const auto* r = std::get_if<RationalAngle>(&value_)) return *r;
  throw BackendError("angle " + to_string() + " is not a rational multiple of pi");
}

double Angle::radians() const {
  if (const auto* r = std::get_if<RationalAngle>(&value_)) return r->radians();
  return std::get<double>(value_);
}

Angle Angle::operator-() const {
  if (is_rational()) return -rational();
  return real(-radians());
}

Angle Angle::operator+(const Angle& other) const {
  if (is_rational() && other.is_rational()) {
    return rational() + other.rational();
  }
  return real(radians() + other.radians());
}

Angle Angle::operator-(const Angle& other) const { return *this + (-other); }

Angle Angle::scaled(std::int64_t k) const {
  if (is_rational()) return rational().scaled(k);
  return real(static_cast<double>(k) * radians());
}

std::string Angle::to_string() const {
  if (is_rational()) return rational().to_string();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17gr", radians());
  return buf;
}

AngleExpr AngleExpr::variable(const std::string& name, std::int64_t coeff) {
  AngleExpr e;
  if (coeff != 0) e.terms_[name] = coeff;
  return e;
}

std::set<std::string> AngleExpr::variables() const {
  std::set<std::string> out;
  for (const auto& [name, c] : terms_) out.insert(name);
  return out;
}

AngleExpr AngleExpr::operator-() const { return scaled(-1); }

AngleExpr AngleExpr::operator+(const AngleExpr& other) const {
  AngleExpr out = *this;
  out.constant_ = constant_ + other.constant_;
  for (const auto& [name, c] : other.terms_) {
    auto& slot = out.terms_[name];
    slot += c;
    if (slot == 0) out.terms_.erase(name);
  }
  return out;
}

AngleExpr AngleExpr::operator-(const AngleExpr& other) const {
  return *this + (-other);
}

AngleExpr AngleExpr::scaled(std::int64_t k) const {
  AngleExpr out;
  out.constant_ = constant_.scaled(k);
  if (k == 0) return out;
  for (const auto& [name, c] : terms_) out.terms_[name] = c * k;
  return out;
}

Angle AngleExpr::evaluate(const Assignment& assignment) const {
  Angle value = constant_;
  for (const auto& [name, c] : terms_) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw UnboundVariableError(name);
    value = value + it->second.scaled(c);
  }
  return value;
}

AngleExpr AngleExpr::substitute(const Assignment& assignment) const {
  AngleExpr out(constant_);
  for (const auto& [name, c] : terms_) {
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      out.terms_[name] = c;
    } else {
      out.constant_ = out.constant_ + it->second.scaled(c);
    }
  }
  return out;
}

std::string AngleExpr::to_string() const {
  std::string out;
  for (const auto& [name, c] : terms_) {
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += name;
  }
  const bool zero_constant =
      constant_.is_rational() && constant_.rational().is_zero();
  if (out.empty()) return constant_.to_string();
  if (!zero_constant) out += "+" + constant_.to_string();
  return out;
}

}  // namespace zxverify
