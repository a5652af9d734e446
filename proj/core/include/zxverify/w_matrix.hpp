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

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "zxverify/cyclotomic.hpp"
#include "zxverify/matrix.hpp"

namespace zxverify {

/// The 2 x 2^(2^n) matrix of W_n, stored sparsely.
///
/// W_n has 2^n inputs, so its dense form has 2^(2^n) columns; for n up to
/// 8 only the sparse form is practical. A column is named by the sorted
/// list of input wires carrying a 1 (wire 0 is the leftmost, i.e. the most
/// significant bit of the dense column index).
class WMatrix {
 public:
  using Column = std::vector<int>;
  using Row = std::map<Column, Rational>;

  int level() const { return level_; }
  std::size_t inputs() const { return inputs_; }
  const Row& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }

  /// First row 1 at column 0; second row 2^-n at every single-wire column.
  static WMatrix closed_form(int n);
  /// The printed base case [[1,0,0,0],[0,1/2,1/2,0]].
  static WMatrix base();

  /// W_1 o (a (x) b): both operands must have the same level.
  static WMatrix combine(const WMatrix& a, const WMatrix& b);

  /// Dense exact matrix; throws CapacityError above 14 inputs.
  Matrix dense() const;

  friend bool operator==(const WMatrix&, const WMatrix&) = default;

 private:
  int level_ = 0;
  std::size_t inputs_ = 0;
  std::array<Row, 2> rows_;
};

/// W_n built recursively from W_1 and checked against the closed form.
/// Throws DomainError unless 1 <= n <= 8.
WMatrix w_matrix(int n);

/// Dense column index of a sparse column for a matrix with `inputs` wires.
std::size_t dense_column(const WMatrix::Column& column, std::size_t inputs);

}  // namespace zxverify
