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

#include "zxverify/diagram.hpp"

#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

Generator fixed(GeneratorKind kind, int inputs, int outputs) {
  Generator g;
  g.kind = kind;
  g.inputs = inputs;
  g.outputs = outputs;
  return g;
}

template <typename F>
Diagram map_angles(const Diagram& d, const F& f) {
  switch (d.node()) {
    case Diagram::Node::kLeaf: {
      if (!d.generator().is_spider()) return d;
      Generator g = d.generator();
      g.angle = f(g.angle);
      return Diagram::leaf(std::move(g));
    }
    case Diagram::Node::kSeq:
      return Diagram::seq(map_angles(d.first(), f), map_angles(d.second(), f));
    case Diagram::Node::kPar:
      return Diagram::par(map_angles(d.first(), f), map_angles(d.second(), f));
  }
  return d;
}

Arity validate_at(const Diagram& d, const std::string& path) {
  switch (d.node()) {
    case Diagram::Node::kLeaf: {
      const Generator& g = d.generator();
      if (g.inputs < 0 || g.outputs < 0) {
        throw ValidationError("negative wire count", path);
      }
      return {g.inputs, g.outputs};
    }
    case Diagram::Node::kSeq: {
      Arity top = validate_at(d.first(), path + ".top");
      Arity bottom = validate_at(d.second(), path + ".bottom");
      if (top.outputs != bottom.inputs) {
        throw ValidationError("arity mismatch in seq: " +
                                  std::to_string(top.outputs) +
                                  " != " + std::to_string(bottom.inputs),
                              path);
      }
      return {top.inputs, bottom.outputs};
    }
    case Diagram::Node::kPar: {
      Arity left = validate_at(d.first(), path + ".left");
      Arity right = validate_at(d.second(), path + ".right");
      return {left.inputs + right.inputs, left.outputs + right.outputs};
    }
  }
  return {};
}

void print(const Diagram& d, std::string& out) {
  switch (d.node()) {
    case Diagram::Node::kLeaf: {
      const Generator& g = d.generator();
      switch (g.kind) {
        case GeneratorKind::kZ:
        case GeneratorKind::kX:
          out += g.kind == GeneratorKind::kZ ? "Z(" : "X(";
          out += std::to_string(g.inputs) + "," + std::to_string(g.outputs) +
                 "," + g.angle.to_string() + ")";
          return;
        case GeneratorKind::kHadamard: out += "H"; return;
        case GeneratorKind::kIdentity: out += "I"; return;
        case GeneratorKind::kSwap: out += "SWAP"; return;
        case GeneratorKind::kCup: out += "CUP"; return;
        case GeneratorKind::kCap: out += "CAP"; return;
        case GeneratorKind::kEmpty: out += "E"; return;
        case GeneratorKind::kTriangle: out += "TRI"; return;
      }
      return;
    }
    case Diagram::Node::kSeq:
    case Diagram::Node::kPar:
      out += d.node() == Diagram::Node::kSeq ? "seq(" : "par(";
      print(d.first(), out);
      out += ",";
      print(d.second(), out);
      out += ")";
      return;
  }
}

}  // namespace

Diagram::Diagram() : Diagram(empty()) {}

Diagram Diagram::leaf(Generator g) {
  auto impl = std::make_shared<Impl>();
  impl->inputs = g.inputs;
  impl->outputs = g.outputs;
  impl->generator = std::move(g);
  return Diagram(std::move(impl));
}

Diagram Diagram::z(int inputs, int outputs, AngleExpr angle) {
  Generator g = fixed(GeneratorKind::kZ, inputs, outputs);
  g.angle = std::move(angle);
  return leaf(std::move(g));
}

Diagram Diagram::x(int inputs, int outputs, AngleExpr angle) {
  Generator g = fixed(GeneratorKind::kX, inputs, outputs);
  g.angle = std::move(angle);
  return leaf(std::move(g));
}

Diagram Diagram::hadamard() { return leaf(fixed(GeneratorKind::kHadamard, 1, 1)); }
Diagram Diagram::identity() { return leaf(fixed(GeneratorKind::kIdentity, 1, 1)); }
Diagram Diagram::swap() { return leaf(fixed(GeneratorKind::kSwap, 2, 2)); }
Diagram Diagram::cup() { return leaf(fixed(GeneratorKind::kCup, 2, 0)); }
Diagram Diagram::cap() { return leaf(fixed(GeneratorKind::kCap, 0, 2)); }
Diagram Diagram::empty() { return leaf(fixed(GeneratorKind::kEmpty, 0, 0)); }
Diagram Diagram::triangle() { return leaf(fixed(GeneratorKind::kTriangle, 1, 1)); }

Diagram Diagram::seq(Diagram top, Diagram bottom) {
  auto impl = std::make_shared<Impl>();
  impl->node = Node::kSeq;
  impl->inputs = top.inputs();
  impl->outputs = bottom.outputs();
  impl->size = top.size() + bottom.size();
  impl->first = std::make_shared<const Diagram>(std::move(top));
  impl->second = std::make_shared<const Diagram>(std::move(bottom));
  return Diagram(std::move(impl));
}

Diagram Diagram::par(Diagram left, Diagram right) {
  auto impl = std::make_shared<Impl>();
  impl->node = Node::kPar;
  impl->inputs = left.inputs() + right.inputs();
  impl->outputs = left.outputs() + right.outputs();
  impl->size = left.size() + right.size();
  impl->first = std::make_shared<const Diagram>(std::move(left));
  impl->second = std::make_shared<const Diagram>(std::move(right));
  return Diagram(std::move(impl));
}

Diagram Diagram::seq(const std::vector<Diagram>& parts) {
  if (parts.empty()) throw ValidationError("seq of no diagrams", "");
  Diagram out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = seq(out, parts[i]);
  return out;
}

Diagram Diagram::par(const std::vector<Diagram>& parts) {
  if (parts.empty()) return empty();
  Diagram out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = par(out, parts[i]);
  return out;
}

std::set<std::string> Diagram::variables() const {
  std::set<std::string> out;
  for_each_generator(*this, [&](const Generator& g) {
    if (g.is_spider()) out.merge(g.angle.variables());
  });
  return out;
}

std::string Diagram::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.node() != b.node()) return false;
  if (a.node() == Diagram::Node::kLeaf) return a.generator() == b.generator();
  return a.first() == b.first() && a.second() == b.second();
}

Arity validate(const Diagram& d) { return validate_at(d, "term"); }

Diagram substitute(const Diagram& d, const Assignment& assignment) {
  return map_angles(d, [&](const AngleExpr& e) {
    return AngleExpr(e.evaluate(assignment));
  });
}

Diagram scale_variables(const Diagram& d, std::int64_t k) {
  return map_angles(d, [&](const AngleExpr& e) {
    if (!e.is_concrete()) throw UnboundVariableError(*e.variables().begin());
    return AngleExpr(e.constant().scaled(k));
  });
}

bool is_rational(const Diagram& d) {
  bool ok = true;
  for_each_generator(d, [&](const Generator& g) {
    if (g.is_spider() && (!g.angle.is_concrete() || !g.angle.is_rational())) {
      ok = false;
    }
  });
  return ok;
}

}  // namespace zxverify
