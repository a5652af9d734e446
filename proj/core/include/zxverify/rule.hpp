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
#include <optional>
#include <string>
#include <vector>

#include "zxverify/diagram.hpp"
#include "zxverify/diagram_parser.hpp"

namespace zxverify {

enum class CompareMode { kExact, kUpToScalar };

struct RuleSchema {
  std::string name;
  std::vector<std::string> variables;
  Diagram lhs;
  Diagram rhs;
  std::optional<SideConditionSpec> side_condition;
  CompareMode mode = CompareMode::kExact;
  std::string source;  // file path, or "builtin"
};

/// Checks arity agreement, declared variables and the side condition.
/// Throws ValidationError.
void validate_rule(const RuleSchema& rule);

/// Builds a rule from a parsed document with `lhs:` and `rhs:` sections.
/// A missing `name:` falls back to `fallback_name`.
RuleSchema rule_from_document(const DiagramDocument& doc,
                              const std::string& fallback_name,
                              const std::string& source);

/// Reads and validates one rule file.
RuleSchema load_rule(const std::filesystem::path& path);

/// Every `*.zxr` file directly inside `dir`, sorted by file name.
/// Throws Error when the directory cannot be read.
std::vector<RuleSchema> load_catalog(const std::filesystem::path& dir);

/// The rule in the text format accepted by load_rule.
std::string format_rule(const RuleSchema& rule);

}  // namespace zxverify
