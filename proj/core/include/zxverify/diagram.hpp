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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "zxverify/angle.hpp"

namespace zxverify {

enum class GeneratorKind {
  kZ,
  kX,
  kHadamard,
  kIdentity,
  kSwap,
  kCup,
  kCap,
  kEmpty,
  kTriangle,
};

struct Generator {
  GeneratorKind kind = GeneratorKind::kEmpty;
  int inputs = 0;
  int outputs = 0;
  AngleExpr angle;  // spiders only

  bool is_spider() const {
    return kind == GeneratorKind::kZ || kind == GeneratorKind::kX;
  }
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Arity {
  int inputs = 0;
  int outputs = 0;
  friend bool operator==(const Arity&, const Arity&) = default;
};

/// Immutable term tree: leaf | seq(top, bottom) | par(left, right).
///
/// seq(top, bottom) plugs the outputs of `top` into the inputs of
/// `bottom`, so its matrix is M(bottom) * M(top). par(left, right) puts
/// `left` on the more significant wires. Construction never fails;
/// arity discipline is checked by validate().
class Diagram {
 public:
  enum class Node { kLeaf, kSeq, kPar };

  /// The empty diagram E.
  Diagram();

  static Diagram leaf(Generator g);
  static Diagram z(int inputs, int outputs, AngleExpr angle = {});
  static Diagram x(int inputs, int outputs, AngleExpr angle = {});
  static Diagram hadamard();
  static Diagram identity();
  static Diagram swap();
  static Diagram cup();
  static Diagram cap();
  static Diagram empty();
  static Diagram triangle();

  static Diagram seq(Diagram top, Diagram bottom);
  static Diagram par(Diagram left, Diagram right);
  /// Left-folded n-ary forms; a single element is returned unchanged.
  static Diagram seq(const std::vector<Diagram>& parts);
  static Diagram par(const std::vector<Diagram>& parts);

  Node node() const { return impl_->node; }
  /// Leaf only.
  const Generator& generator() const { return impl_->generator; }
  /// seq: top; par: left.
  const Diagram& first() const { return *impl_->first; }
  /// seq: bottom; par: right.
  const Diagram& second() const { return *impl_->second; }

  /// Structural arity without checking seq boundaries.
  int inputs() const { return impl_->inputs; }
  int outputs() const { return impl_->outputs; }

  /// Number of generator leaves.
  std::size_t size() const { return impl_->size; }
  std::set<std::string> variables() const;

  /// Text in the diagram format (round-trips through the parser).
  std::string to_string() const;

  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  struct Impl {
    Node node = Node::kLeaf;
    Generator generator;
    std::shared_ptr<const Diagram> first;
    std::shared_ptr<const Diagram> second;
    int inputs = 0;
    int outputs = 0;
    std::size_t size = 1;
  };
  explicit Diagram(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Returns the arity or throws ValidationError with the path of the first
/// ill-typed node ("term.bottom.left", ...).
Arity validate(const Diagram& d);

/// Evaluates every angle under `assignment`. Throws UnboundVariableError.
Diagram substitute(const Diagram& d, const Assignment& assignment);

/// Replaces every angle x of a fully substituted diagram by k*x mod 2*pi.
/// Throws UnboundVariableError if a variable is still free.
Diagram scale_variables(const Diagram& d, std::int64_t k);

/// True when the diagram is concrete and every angle is rational.
bool is_rational(const Diagram& d);

/// Calls f on each generator leaf, left to right.
template <typename F>
void for_each_generator(const Diagram& d, F&& f) {
  if (d.node() == Diagram::Node::kLeaf) {
    f(d.generator());
    return;
  }
  for_each_generator(d.first(), f);
  for_each_generator(d.second(), f);
}

}  // namespace zxverify
