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

#include "zxverify/w_matrix.hpp"

#include <algorithm>

#include "zxverify/errors.hpp"

namespace zxverify {

WMatrix WMatrix::closed_form(int n) {
  WMatrix w;
  w.level_ = n;
  w.inputs_ = std::size_t{1} << n;
  w.rows_[0][{}] = 1;
  const Rational weight(1, mpz_class(1) << n);
  for (std::size_t i = 0; i < w.inputs_; ++i) {
    w.rows_[1][{static_cast<int>(i)}] = weight;
  }
  return w;
}

WMatrix WMatrix::base() {
  WMatrix w;
  w.level_ = 1;
  w.inputs_ = 2;
  w.rows_[0][{}] = 1;
  w.rows_[1][{0}] = Rational(1, 2);
  w.rows_[1][{1}] = Rational(1, 2);
  return w;
}

WMatrix WMatrix::combine(const WMatrix& a, const WMatrix& b) {
  if (a.level_ != b.level_) throw DomainError("W levels differ");
  const WMatrix w1 = base();
  // (a (x) b) has rows indexed by (ra, rb); W_1 reads them as its two input
  // wires with ra on wire 0.
  WMatrix out;
  out.level_ = a.level_ + 1;
  out.inputs_ = a.inputs_ + b.inputs_;
  const int offset = static_cast<int>(a.inputs_);
  for (int r = 0; r < 2; ++r) {
    for (const auto& [w1_col, w1_value] : w1.rows_[static_cast<std::size_t>(r)]) {
      const bool ra = std::find(w1_col.begin(), w1_col.end(), 0) != w1_col.end();
      const bool rb = std::find(w1_col.begin(), w1_col.end(), 1) != w1_col.end();
      for (const auto& [ca, va] : a.rows_[ra ? 1 : 0]) {
        for (const auto& [cb, vb] : b.rows_[rb ? 1 : 0]) {
          Column c = ca;
          for (int wire : cb) c.push_back(wire + offset);
          Rational& slot = out.rows_[static_cast<std::size_t>(r)][c];
          slot += w1_value * va * vb;
          if (slot == 0) out.rows_[static_cast<std::size_t>(r)].erase(c);
        }
      }
    }
  }
  return out;
}

std::size_t dense_column(const WMatrix::Column& column, std::size_t inputs) {
  std::size_t index = 0;
  for (int wire : column) index |= std::size_t{1} << (inputs - 1 - static_cast<std::size_t>(wire));
  return index;
}

Matrix WMatrix::dense() const {
  if (inputs_ > 14) throw CapacityError("dense W_n needs at most 14 inputs");
  const std::size_t cols = std::size_t{1} << inputs_;
  Matrix m = Matrix::zeros(2, cols, Backend::kExact);
  for (int r = 0; r < 2; ++r) {
    for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)]) {
      m.exact(static_cast<std::size_t>(r), dense_column(c, inputs_)) = Cyclotomic(v);
    }
  }
  return m;
}

WMatrix w_matrix(int n) {
  if (n < 1 || n > 8) throw DomainError("W_n is supported for 1 <= n <= 8");
  WMatrix w = WMatrix::base();
  for (int level = 1; level < n; ++level) w = WMatrix::combine(w, w);
  if (!(w == WMatrix::closed_form(n))) {
    throw Error("recursive W_" + std::to_string(n) + " disagrees with the closed form");
  }
  return w;
}

}  // namespace zxverify
