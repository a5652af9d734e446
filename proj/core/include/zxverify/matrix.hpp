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

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "zxverify/cyclotomic.hpp"

namespace zxverify {

enum class Backend { kExact, kFloat };

std::string_view backend_name(Backend b);

inline constexpr double kDefaultTolerance = 1e-9;

/// A scalar of either backend.
struct Scalar {
  Backend backend = Backend::kFloat;
  Cyclotomic exact;             // kExact only
  std::complex<double> value;   // always set (float embedding for kExact)
};

/// Dense row-major matrix over Q(zeta_N) or complex doubles.
class Matrix {
 public:
  Matrix() = default;

  static Matrix zeros(std::size_t rows, std::size_t cols, Backend backend);
  static Matrix identity(std::size_t dim, Backend backend);
  static Matrix from_exact(std::size_t rows, std::size_t cols,
                           std::vector<Cyclotomic> entries);
  static Matrix from_float(std::size_t rows, std::size_t cols,
                           std::vector<std::complex<double>> entries);

  Backend backend() const { return backend_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Cyclotomic& exact(std::size_t r, std::size_t c) const {
    return exact_[r * cols_ + c];
  }
  Cyclotomic& exact(std::size_t r, std::size_t c) { return exact_[r * cols_ + c]; }
  const std::complex<double>& number(std::size_t r, std::size_t c) const {
    return float_[r * cols_ + c];
  }
  std::complex<double>& number(std::size_t r, std::size_t c) {
    return float_[r * cols_ + c];
  }
  /// Float value of an entry in either backend.
  std::complex<double> value(std::size_t r, std::size_t c) const;

  const std::vector<Cyclotomic>& exact_entries() const { return exact_; }
  const std::vector<std::complex<double>>& float_entries() const {
    return float_;
  }

  /// Float embedding; identity on float matrices.
  Matrix to_float() const;
  /// Exact entries rewritten with exponents below phi(N).
  Matrix reduced() const;
  /// Every exact entry lifted to a common order (the lcm of the entries').
  Matrix at_common_order() const;

  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  bool is_zero(double tol = kDefaultTolerance) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  Backend backend_ = Backend::kFloat;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> exact_;
  std::vector<std::complex<double>> float_;
};

/// a (x) b with a on the more significant index bits.
Matrix kron(const Matrix& a, const Matrix& b);

/// Entrywise equality: exact zero-test or max |a-b| <= tol.
/// Throws BackendError on mixed backends. Shape mismatch compares false.
bool equal_exact(const Matrix& a, const Matrix& b,
                 double tol = kDefaultTolerance);

/// max |a - b| over the float embeddings. Shapes must agree.
double max_deviation(const Matrix& a, const Matrix& b);

/// A nonzero lambda with a = lambda * b, if any. The candidate comes from
/// the first row-major entry where either matrix is nonzero and is then
/// checked on every entry. Two zero matrices give lambda = 1. Throws
/// DomainError on a shape mismatch and BackendError on mixed backends.
std::optional<Scalar> equal_up_to_scalar(const Matrix& a, const Matrix& b,
                                         double tol = kDefaultTolerance);

}  // namespace zxverify
