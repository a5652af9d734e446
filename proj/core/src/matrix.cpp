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

#include "zxverify/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "zxverify/cyclotomic_order.hpp"
#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

void require_same_backend(const Matrix& a, const Matrix& b) {
  if (a.backend() != b.backend()) {
    throw BackendError("cannot compare an exact matrix with a float matrix");
  }
}

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::kExact ? "exact" : "float";
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols, Backend backend) {
  Matrix m;
  m.backend_ = backend;
  m.rows_ = rows;
  m.cols_ = cols;
  if (backend == Backend::kExact) {
    m.exact_.assign(rows * cols, Cyclotomic());
  } else {
    m.float_.assign(rows * cols, 0.0);
  }
  return m;
}

Matrix Matrix::identity(std::size_t dim, Backend backend) {
  Matrix m = zeros(dim, dim, backend);
  for (std::size_t i = 0; i < dim; ++i) {
    if (backend == Backend::kExact) {
      m.exact(i, i) = Cyclotomic(1);
    } else {
      m.number(i, i) = 1.0;
    }
  }
  return m;
}

Matrix Matrix::from_exact(std::size_t rows, std::size_t cols,
                          std::vector<Cyclotomic> entries) {
  if (entries.size() != rows * cols) throw DomainError("entry count mismatch");
  Matrix m;
  m.backend_ = Backend::kExact;
  m.rows_ = rows;
  m.cols_ = cols;
  m.exact_ = std::move(entries);
  return m;
}

Matrix Matrix::from_float(std::size_t rows, std::size_t cols,
                          std::vector<std::complex<double>> entries) {
  if (entries.size() != rows * cols) throw DomainError("entry count mismatch");
  Matrix m;
  m.backend_ = Backend::kFloat;
  m.rows_ = rows;
  m.cols_ = cols;
  m.float_ = std::move(entries);
  return m;
}

std::complex<double> Matrix::value(std::size_t r, std::size_t c) const {
  return backend_ == Backend::kExact ? exact(r, c).to_complex() : number(r, c);
}

Matrix Matrix::to_float() const {
  if (backend_ == Backend::kFloat) return *this;
  Matrix m = zeros(rows_, cols_, Backend::kFloat);
  for (std::size_t i = 0; i < exact_.size(); ++i) {
    m.float_[i] = exact_[i].to_complex();
  }
  return m;
}

Matrix Matrix::reduced() const {
  if (backend_ == Backend::kFloat) return *this;
  Matrix m = *this;
  for (auto& e : m.exact_) e = e.reduced();
  return m;
}

Matrix Matrix::at_common_order() const {
  if (backend_ == Backend::kFloat) return *this;
  std::uint32_t order = 1;
  for (const auto& e : exact_) order = common_order(order, e.order());
  Matrix m = *this;
  for (auto& e : m.exact_) e = e.lifted(order);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m = zeros(cols_, rows_, backend_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (backend_ == Backend::kExact) {
        m.exact(c, r) = exact(r, c);
      } else {
        m.number(c, r) = number(r, c);
      }
    }
  }
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (s.backend != backend_) throw BackendError("scalar backend mismatch");
  Matrix m = *this;
  if (backend_ == Backend::kExact) {
    for (auto& e : m.exact_) e = e * s.exact;
  } else {
    for (auto& e : m.float_) e *= s.value;
  }
  return m;
}

bool Matrix::is_zero(double tol) const {
  if (backend_ == Backend::kExact) {
    return std::all_of(exact_.begin(), exact_.end(),
                       [](const Cyclotomic& e) { return e.is_zero(); });
  }
  return std::all_of(float_.begin(), float_.end(),
                     [&](const std::complex<double>& e) {
                       return std::abs(e) <= tol;
                     });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_backend(a, b);
  if (a.cols() != b.rows()) {
    throw DomainError("matrix product shape mismatch: " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " * " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
  Matrix out = Matrix::zeros(a.rows(), b.cols(), a.backend());
  if (a.backend() == Backend::kExact) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Cyclotomic& aik = a.exact(i, k);
        if (aik.terms().empty()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const Cyclotomic& bkj = b.exact(k, j);
          if (bkj.terms().empty()) continue;
          out.exact(i, j) += aik * bkj;
        }
      }
    }
    return out.reduced();
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::complex<double> aik = a.number(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.number(i, j) += aik * b.number(k, j);
      }
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_backend(a, b);
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  Matrix out = Matrix::zeros(rows, cols, a.backend());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const std::size_t r = i * b.rows() + k;
          const std::size_t c = j * b.cols() + l;
          if (a.backend() == Backend::kExact) {
            const Cyclotomic& x = a.exact(i, j);
            const Cyclotomic& y = b.exact(k, l);
            if (!x.terms().empty() && !y.terms().empty()) out.exact(r, c) = x * y;
          } else {
            out.number(r, c) = a.number(i, j) * b.number(k, l);
          }
        }
      }
    }
  }
  return out;
}

bool equal_exact(const Matrix& a, const Matrix& b, double tol) {
  require_same_backend(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.backend() == Backend::kExact) {
    for (std::size_t i = 0; i < a.exact_entries().size(); ++i) {
      if (!(a.exact_entries()[i] - b.exact_entries()[i]).is_zero()) return false;
    }
    return true;
  }
  return max_deviation(a, b) <= tol;
}

double max_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      worst = std::max(worst, std::abs(a.value(r, c) - b.value(r, c)));
    }
  }
  return worst;
}

std::optional<Scalar> equal_up_to_scalar(const Matrix& a, const Matrix& b,
                                         double tol) {
  require_same_backend(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("shape mismatch in up-to-scalar comparison");
  }
  const std::size_t n = a.rows() * a.cols();
  Scalar lambda;
  lambda.backend = a.backend();
  if (a.backend() == Backend::kExact) {
    const auto& ea = a.exact_entries();
    const auto& eb = b.exact_entries();
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!ea[i].is_zero() || !eb[i].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      lambda.exact = Cyclotomic(1);
      lambda.value = 1.0;
      return lambda;
    }
    if (ea[pivot].is_zero() || eb[pivot].is_zero()) return std::nullopt;
    for (std::size_t i = pivot + 1; i < n; ++i) {
      if (!(ea[i] * eb[pivot] - eb[i] * ea[pivot]).is_zero()) return std::nullopt;
    }
    lambda.exact = (ea[pivot] / eb[pivot]).reduced();
    lambda.value = lambda.exact.to_complex();
    return lambda;
  }
  const auto& fa = a.float_entries();
  const auto& fb = b.float_entries();
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(fa[i]) > tol || std::abs(fb[i]) > tol) {
      pivot = i;
      break;
    }
  }
  if (pivot == n) {
    lambda.value = 1.0;
    return lambda;
  }
  if (std::abs(fa[pivot]) <= tol || std::abs(fb[pivot]) <= tol) {
    return std::nullopt;
  }
  lambda.value = fa[pivot] / fb[pivot];
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(fa[i] - lambda.value * fb[i]) > tol) return std::nullopt;
  }
  return lambda;
}

}  // namespace zxverify
