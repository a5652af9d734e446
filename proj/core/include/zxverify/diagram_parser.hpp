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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zxverify/angle.hpp"
#include "zxverify/diagram.hpp"

namespace zxverify {

struct SideConditionSpec {
  std::string name;               // e.g. "ruleA"
  std::vector<std::string> args;  // variable names, possibly empty
};

/// A parsed diagram or rule file.
///
///   # comment
///   name: fusion
///   vars: a, b
///   mode: exact
///   let s = seq(Z(0,1,0), X(1,0,0))
///   lhs: seq(par(Z(2,2,a), I), par(I, Z(2,1,b)))
///   rhs: Z(3,2,a+b)
///
/// Headers start in column 0; a section body continues on the following
/// lines up to the next header. See docs/format.md for the grammar.
struct DiagramDocument {
  std::string name;
  std::string description;
  std::vector<std::string> variables;
  std::string mode;  // empty when absent
  std::optional<SideConditionSpec> side_condition;
  Assignment assignment;
  std::map<std::string, Diagram> terms;  // keys: term, lhs, rhs

  bool has(const std::string& key) const { return terms.count(key) != 0; }
  /// Throws ValidationError when the section is missing.
  const Diagram& term(const std::string& key) const;
};

/// Throws ParseError with line and column.
DiagramDocument parse_document(std::string_view text);

/// Reads and parses a file. Unreadable files raise Error.
DiagramDocument load_document(const std::filesystem::path& path);

/// Parses a single term expression; identifiers other than `vars` and the
/// constructor names are rejected.
Diagram parse_diagram(std::string_view text,
                      const std::vector<std::string>& vars = {});

/// Parses an angle expression such as "3*pi/4", "-pi/2", "1.25r",
/// "2*x + pi/4".
AngleExpr parse_angle(std::string_view text,
                      const std::vector<std::string>& vars = {});

}  // namespace zxverify
