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

#include "zxverify/interpret.hpp"

#include <bit>
#include <cmath>
#include <complex>

#include "zxverify/cyclotomic_order.hpp"
#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

Angle concrete_angle(const Generator& g) {
  if (!g.angle.is_concrete()) throw UnboundVariableError(*g.angle.variables().begin());
  return g.angle.constant();
}

Matrix z_spider(int n, int m, const Angle& alpha, Backend backend,
                std::uint32_t order) {
  const std::size_t rows = std::size_t{1} << m;
  const std::size_t cols = std::size_t{1} << n;
  Matrix out = Matrix::zeros(rows, cols, backend);
  if (backend == Backend::kExact) {
    const Cyclotomic one = Cyclotomic(1).lifted(order);
    const Cyclotomic phase = Cyclotomic::root_of_unity(alpha.rational()).lifted(order);
    if (rows == 1 && cols == 1) {
      out.exact(0, 0) = one + phase;
    } else {
      out.exact(0, 0) = one;
      out.exact(rows - 1, cols - 1) = phase;
    }
    return out;
  }
  const std::complex<double> phase = std::polar(1.0, alpha.radians());
  if (rows == 1 && cols == 1) {
    out.number(0, 0) = 1.0 + phase;
  } else {
    out.number(0, 0) = 1.0;
    out.number(rows - 1, cols - 1) = phase;
  }
  return out;
}

// X_{n->m}(alpha)[j][i] = (1/sqrt2)^{n+m} (1 + e^{i alpha} (-1)^{|i|+|j|}),
// which is H^{(x)m} Z_{n->m}(alpha) H^{(x)n} written out.
Matrix x_spider(int n, int m, const Angle& alpha, Backend backend,
                std::uint32_t order) {
  const std::size_t rows = std::size_t{1} << m;
  const std::size_t cols = std::size_t{1} << n;
  Matrix out = Matrix::zeros(rows, cols, backend);
  if (backend == Backend::kExact) {
    const Cyclotomic scale = inv_sqrt2_power(n + m).lifted(order);
    const Cyclotomic phase = Cyclotomic::root_of_unity(alpha.rational()).lifted(order);
    const Cyclotomic one = Cyclotomic(1).lifted(order);
    const Cyclotomic even = ((one + phase) * scale).reduced();
    const Cyclotomic odd = ((one - phase) * scale).reduced();
    for (std::size_t j = 0; j < rows; ++j) {
      for (std::size_t i = 0; i < cols; ++i) {
        const bool parity = (std::popcount(i) + std::popcount(j)) % 2 != 0;
        out.exact(j, i) = parity ? odd : even;
      }
    }
    return out;
  }
  const double scale = std::pow(std::sqrt(0.5), n + m);
  const std::complex<double> phase = std::polar(1.0, alpha.radians());
  const std::complex<double> even = scale * (1.0 + phase);
  const std::complex<double> odd = scale * (1.0 - phase);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < cols; ++i) {
      const bool parity = (std::popcount(i) + std::popcount(j)) % 2 != 0;
      out.number(j, i) = parity ? odd : even;
    }
  }
  return out;
}

Matrix from_integers(std::size_t rows, std::size_t cols,
                     std::initializer_list<int> values, Backend backend,
                     std::uint32_t order) {
  Matrix out = Matrix::zeros(rows, cols, backend);
  std::size_t k = 0;
  for (int v : values) {
    const std::size_t r = k / cols;
    const std::size_t c = k % cols;
    if (backend == Backend::kExact) {
      if (v != 0) out.exact(r, c) = Cyclotomic(v).lifted(order);
    } else {
      out.number(r, c) = static_cast<double>(v);
    }
    ++k;
  }
  return out;
}

Matrix fold(const Diagram& d, Backend backend, std::uint32_t order,
            int wire_cap) {
  if (d.inputs() > wire_cap || d.outputs() > wire_cap) {
    throw CapacityError("subdiagram with " + std::to_string(d.inputs()) + " inputs and " +
                        std::to_string(d.outputs()) + " outputs exceeds the cap of " +
                        std::to_string(wire_cap) + " wires");
  }
  switch (d.node()) {
    case Diagram::Node::kLeaf:
      return generator_matrix(d.generator(), backend, order);
    case Diagram::Node::kSeq: {
      Matrix top = fold(d.first(), backend, order, wire_cap);
      Matrix bottom = fold(d.second(), backend, order, wire_cap);
      return bottom * top;
    }
    case Diagram::Node::kPar: {
      Matrix left = fold(d.first(), backend, order, wire_cap);
      Matrix right = fold(d.second(), backend, order, wire_cap);
      return kron(left, right);
    }
  }
  return {};
}

}  // namespace

Cyclotomic inv_sqrt2_power(int k) {
  // (1/sqrt2)^{2q} = 2^-q and (1/sqrt2)^{2q+1} = sqrt2 * 2^-(q+1).
  mpz_class pow2 = 1;
  const int q = k / 2;
  if (k % 2 == 0) {
    pow2 <<= q;
    return Cyclotomic(Rational(1, pow2));
  }
  pow2 <<= q + 1;
  return Cyclotomic::sqrt2() * Cyclotomic(Rational(1, pow2));
}

std::uint32_t working_order(const Diagram& d) {
  std::uint32_t order = 8;
  for_each_generator(d, [&](const Generator& g) {
    if (!g.is_spider()) return;
    const Angle a = concrete_angle(g);
    order = common_order(order, Cyclotomic::root_of_unity(a.rational()).order());
  });
  return order;
}

Matrix generator_matrix(const Generator& g, Backend backend,
                        std::uint32_t order) {
  switch (g.kind) {
    case GeneratorKind::kZ:
      return z_spider(g.inputs, g.outputs, concrete_angle(g), backend, order);
    case GeneratorKind::kX:
      return x_spider(g.inputs, g.outputs, concrete_angle(g), backend, order);
    case GeneratorKind::kHadamard: {
      if (backend == Backend::kFloat) {
        const double s = std::sqrt(0.5);
        return Matrix::from_float(2, 2, {s, s, s, -s});
      }
      const Cyclotomic s = inv_sqrt2_power(1).lifted(order);
      return Matrix::from_exact(2, 2, {s, s, s, -s});
    }
    case GeneratorKind::kIdentity:
      return from_integers(2, 2, {1, 0, 0, 1}, backend, order);
    case GeneratorKind::kSwap:
      return from_integers(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1},
                           backend, order);
    case GeneratorKind::kCup:
      return from_integers(1, 4, {1, 0, 0, 1}, backend, order);
    case GeneratorKind::kCap:
      return from_integers(4, 1, {1, 0, 0, 1}, backend, order);
    case GeneratorKind::kEmpty:
      return from_integers(1, 1, {1}, backend, order);
    case GeneratorKind::kTriangle:
      return from_integers(2, 2, {1, 1, 0, 1}, backend, order);
  }
  throw DomainError("unknown generator");
}

Matrix interpret(const Diagram& d, Backend backend, int wire_cap) {
  validate(d);
  std::uint32_t order = 8;
  if (backend == Backend::kExact) {
    order = working_order(d);
  } else {
    for_each_generator(d, [](const Generator& g) {
      if (g.is_spider()) concrete_angle(g);
    });
  }
  return fold(d, backend, order, wire_cap);
}

}  // namespace zxverify
