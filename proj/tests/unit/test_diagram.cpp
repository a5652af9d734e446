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

#include <gtest/gtest.h>

#include "zxverify/diagram.hpp"
#include "zxverify/diagram_parser.hpp"
#include "zxverify/errors.hpp"

namespace zxverify {
namespace {

const AngleExpr kAlpha = AngleExpr::variable("alpha");

TEST(Validate, Examples) {
  EXPECT_EQ(validate(Diagram::hadamard()), (Arity{1, 1}));
  EXPECT_EQ(validate(Diagram::seq(Diagram::cap(), Diagram::cup())), (Arity{0, 0}));
  try {
    validate(Diagram::seq(Diagram::hadamard(), Diagram::swap()));
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("1 != 2"), std::string::npos) << e.what();
  }
}

TEST(Validate, ReportsPathToNode) {
  const Diagram bad = Diagram::par(Diagram::identity(),
                                   Diagram::seq(Diagram::z(1, 2), Diagram::hadamard()));
  try {
    validate(bad);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.path(), "term.right");
  }
}

TEST(Validate, GeneratorArities) {
  EXPECT_EQ(validate(Diagram::swap()), (Arity{2, 2}));
  EXPECT_EQ(validate(Diagram::cup()), (Arity{2, 0}));
  EXPECT_EQ(validate(Diagram::cap()), (Arity{0, 2}));
  EXPECT_EQ(validate(Diagram::empty()), (Arity{0, 0}));
  EXPECT_EQ(validate(Diagram::triangle()), (Arity{1, 1}));
  EXPECT_EQ(validate(Diagram::z(0, 0)), (Arity{0, 0}));
  EXPECT_EQ(validate(Diagram::par(Diagram::z(2, 3), Diagram::x(1, 0))), (Arity{3, 3}));
}

TEST(Substitute, Examples) {
  const auto half = RationalAngle::pi_times(1, 2);
  Diagram d = substitute(Diagram::z(1, 1, kAlpha + AngleExpr(half)), {{"alpha", Angle(half)}});
  EXPECT_EQ(d, Diagram::z(1, 1, RationalAngle::pi_times(1)));
  d = substitute(Diagram::z(1, 1, kAlpha.scaled(2)),
                 {{"alpha", Angle(RationalAngle::pi_times(1, 3))}});
  EXPECT_EQ(d, Diagram::z(1, 1, RationalAngle::pi_times(2, 3)));
  EXPECT_TRUE(is_rational(d));
  EXPECT_THROW(substitute(Diagram::z(1, 1, kAlpha), {}), UnboundVariableError);
}

TEST(Substitute, CommutesWithComposition) {
  const Diagram a = Diagram::z(1, 2, kAlpha);
  const Diagram b = Diagram::par(Diagram::x(1, 1, kAlpha.scaled(3)), Diagram::hadamard());
  const Assignment s = {{"alpha", Angle::real(0.25)}};
  EXPECT_EQ(substitute(Diagram::seq(a, b), s), Diagram::seq(substitute(a, s), substitute(b, s)));
  EXPECT_EQ(substitute(Diagram::par(a, b), s), Diagram::par(substitute(a, s), substitute(b, s)));
}

TEST(ScaleVariables, Examples) {
  EXPECT_EQ(scale_variables(Diagram::z(1, 1, RationalAngle::pi_times(1, 3)), 7),
            Diagram::z(1, 1, RationalAngle::pi_times(1, 3)));
  const Diagram r = scale_variables(Diagram::z(1, 1, Angle::real(1.0)), 3);
  EXPECT_NEAR(r.generator().angle.evaluate({}).radians(), 3.0, 1e-15);
  EXPECT_EQ(scale_variables(Diagram::x(1, 1, RationalAngle::pi_times(1)), 2), Diagram::x(1, 1));
  EXPECT_THROW(scale_variables(Diagram::z(1, 1, kAlpha), 2), UnboundVariableError);
}

TEST(ScaleVariables, Composes) {
  const Diagram d = Diagram::seq(Diagram::z(1, 1, RationalAngle::pi_times(3, 7)),
                                 Diagram::x(1, 1, RationalAngle::pi_times(5, 12)));
  for (int j : {2, 3, 5}) {
    for (int k : {3, 7, 11}) {
      EXPECT_EQ(scale_variables(scale_variables(d, j), k), scale_variables(d, j * k));
    }
  }
}

TEST(Parser, AngleGrammar) {
  EXPECT_EQ(parse_angle("3*pi/4").evaluate({}), Angle(RationalAngle::pi_times(3, 4)));
  EXPECT_EQ(parse_angle("-pi/2").evaluate({}), Angle(RationalAngle::pi_times(3, 2)));
  EXPECT_EQ(parse_angle("pi").evaluate({}), Angle(RationalAngle::pi_times(1)));
  EXPECT_EQ(parse_angle("0").evaluate({}), Angle());
  EXPECT_NEAR(parse_angle("1.25r").evaluate({}).radians(), 1.25, 1e-15);
  const AngleExpr e = parse_angle("2*x + pi/4", {"x"});
  EXPECT_EQ(e, AngleExpr::variable("x", 2) + AngleExpr(RationalAngle::pi_times(1, 4)));
  EXPECT_THROW(parse_angle("y", {"x"}), ParseError);
  EXPECT_THROW(parse_angle("3"), ParseError);
}

TEST(Parser, TermsRoundTrip) {
  const Diagram d = parse_diagram(
      "seq(par(Z(1,2,pi/3), TRI), par(I, SWAP), par(X(1,0,0), CUP), E)");
  EXPECT_EQ(parse_diagram(d.to_string()), d);
  EXPECT_EQ(validate(d), (Arity{2, 0}));
}

TEST(Parser, NaryCompositionFoldsLeft) {
  EXPECT_EQ(parse_diagram("seq(H, H, H)"),
            Diagram::seq(Diagram::seq(Diagram::hadamard(), Diagram::hadamard()),
                         Diagram::hadamard()));
}

TEST(Parser, DocumentSections) {
  const DiagramDocument doc = parse_document(R"(# a rule
name: fusion
vars: a, b
mode: exact
let s = Z(1,1,a)
lhs: seq(s,
         Z(1,1,b))
rhs: Z(1,1,a+b)
)");
  EXPECT_EQ(doc.name, "fusion");
  EXPECT_EQ(doc.variables, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(doc.mode, "exact");
  EXPECT_EQ(doc.term("lhs").node(), Diagram::Node::kSeq);
  EXPECT_THROW(doc.term("term"), ValidationError);
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_document("term: seq(H,\n  Q)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Parser, AssignAndSideCondition) {
  const DiagramDocument doc = parse_document(
      "vars: x, y\nassign: x = pi/3, y = 0.5r\nside_condition: ruleA\nterm: Z(1,1,x+y)\n");
  ASSERT_EQ(doc.assignment.size(), 2u);
  EXPECT_EQ(doc.assignment.at("x"), Angle(RationalAngle::pi_times(1, 3)));
  ASSERT_TRUE(doc.side_condition);
  EXPECT_EQ(doc.side_condition->name, "ruleA");
}

}  // namespace
}  // namespace zxverify
