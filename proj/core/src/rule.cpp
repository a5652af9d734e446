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

#include "zxverify/rule.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zxverify/errors.hpp"

namespace zxverify {

void validate_rule(const RuleSchema& rule) {
  Arity lhs;
  Arity rhs;
  try {
    lhs = validate(rule.lhs);
  } catch (const ValidationError& e) {
    throw ValidationError(rule.name + ": lhs: " + e.what(), "lhs");
  }
  try {
    rhs = validate(rule.rhs);
  } catch (const ValidationError& e) {
    throw ValidationError(rule.name + ": rhs: " + e.what(), "rhs");
  }
  if (lhs != rhs) {
    throw ValidationError(rule.name + ": sides have different arity (" +
                              std::to_string(lhs.inputs) + "->" +
                              std::to_string(lhs.outputs) + " vs " +
                              std::to_string(rhs.inputs) + "->" +
                              std::to_string(rhs.outputs) + ")",
                          "rule");
  }
  const std::set<std::string> declared(rule.variables.begin(),
                                       rule.variables.end());
  for (const Diagram* side : {&rule.lhs, &rule.rhs}) {
    for (const auto& v : side->variables()) {
      if (!declared.count(v)) {
        throw ValidationError(rule.name + ": undeclared variable '" + v + "'",
                              side == &rule.lhs ? "lhs" : "rhs");
      }
    }
  }
  if (rule.side_condition) {
    const auto& sc = *rule.side_condition;
    if (sc.name != "ruleA") {
      throw ValidationError(rule.name + ": unknown side condition '" + sc.name + "'",
                            "side_condition");
    }
    const std::size_t arity = sc.args.empty() ? rule.variables.size() : sc.args.size();
    if (arity != 6) {
      throw ValidationError(rule.name + ": ruleA needs six angles", "side_condition");
    }
  }
}

RuleSchema rule_from_document(const DiagramDocument& doc,
                              const std::string& fallback_name,
                              const std::string& source) {
  RuleSchema rule;
  rule.name = doc.name.empty() ? fallback_name : doc.name;
  rule.variables = doc.variables;
  rule.lhs = doc.term("lhs");
  rule.rhs = doc.term("rhs");
  rule.side_condition = doc.side_condition;
  rule.mode = doc.mode == "scalar" ? CompareMode::kUpToScalar : CompareMode::kExact;
  rule.source = source;
  validate_rule(rule);
  return rule;
}

RuleSchema load_rule(const std::filesystem::path& path) {
  return rule_from_document(load_document(path), path.stem().string(),
                            path.string());
}

std::vector<RuleSchema> load_catalog(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error("cannot read catalog directory " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".zxr") {
      files.push_back(entry.path());
    }
  }
  if (ec) throw Error("cannot read catalog directory " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<RuleSchema> rules;
  rules.reserve(files.size());
  for (const auto& f : files) rules.push_back(load_rule(f));
  return rules;
}

std::string format_rule(const RuleSchema& rule) {
  std::ostringstream out;
  out << "name: " << rule.name << '\n';
  out << "vars:";
  for (std::size_t i = 0; i < rule.variables.size(); ++i) {
    out << (i ? ", " : " ") << rule.variables[i];
  }
  out << '\n';
  out << "mode: " << (rule.mode == CompareMode::kExact ? "exact" : "scalar") << '\n';
  if (rule.side_condition) {
    out << "side_condition: " << rule.side_condition->name;
    if (!rule.side_condition->args.empty()) {
      out << '(';
      for (std::size_t i = 0; i < rule.side_condition->args.size(); ++i) {
        out << (i ? ", " : "") << rule.side_condition->args[i];
      }
      out << ')';
    }
    out << '\n';
  }
  out << "lhs: " << rule.lhs.to_string() << '\n';
  out << "rhs: " << rule.rhs.to_string() << '\n';
  return out.str();
}

}  // namespace zxverify
