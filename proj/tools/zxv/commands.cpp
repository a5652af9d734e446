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

#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "zxverify/diagram_parser.hpp"
#include "zxverify/errors.hpp"
#include "zxverify/euler.hpp"
#include "zxverify/interpret.hpp"
#include "zxverify/matrix_io.hpp"
#include "zxverify/radin_sadun.hpp"
#include "zxverify/rule.hpp"
#include "zxverify/soundness.hpp"
#include "zxverify/sup_cyc.hpp"

namespace zxv {

using nlohmann::ordered_json;
using namespace zxverify;

namespace {

ordered_json envelope(const std::string& command) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// k*pi/q forms go through the diagram angle grammar; bare numbers are radians.
Angle parse_literal(const std::string& text) {
  try {
    return parse_angle(text).evaluate({});
  } catch (const ParseError&) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw ParseError("bad angle literal '" + text + "'", 1, 1);
    }
    if (used != text.size()) throw ParseError("bad angle literal '" + text + "'", 1, used + 1);
    return Angle::real(v);
  }
}

std::vector<Angle> parse_list(const std::string& text) {
  std::vector<Angle> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(parse_literal(item));
  return out;
}

Triple parse_triple(const std::string& text) {
  auto v = parse_list(text);
  if (v.size() != 3) throw ParseError("expected three angles in '" + text + "'", 1, 1);
  return {v[0], v[1], v[2]};
}

ordered_json triple_json(const Triple& t) {
  return ordered_json::array({t[0].to_string(), t[1].to_string(), t[2].to_string()});
}

std::string triple_text(const Triple& t) {
  return "(" + t[0].to_string() + ", " + t[1].to_string() + ", " + t[2].to_string() + ")";
}

ordered_json assignment_json(const Assignment& a) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : a) j[k] = v.to_string();
  return j;
}

std::string assignment_text(const Assignment& a) {
  std::string s;
  for (const auto& [k, v] : a) {
    if (!s.empty()) s += ", ";
    s += k + "=" + v.to_string();
  }
  return s;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(m.backend() == Backend::kExact ? format_entry(m.exact(r, c))
                                                   : format_entry(m.number(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sci(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << std::scientific << v;
  return s.str();
}

}  // namespace

int cmd_eval(const RunConfig& cfg, const std::string& file,
             const std::string& backend, std::ostream& out) {
  const DiagramDocument doc = parse_document(read_file(file));
  Diagram d = doc.term("term");
  if (!doc.assignment.empty()) d = substitute(d, doc.assignment);
  const Backend b = backend == "float" ? Backend::kFloat : Backend::kExact;
  const Matrix m = interpret(d, b, cfg.wire_cap);
  if (cfg.json) {
    ordered_json j = envelope("eval");
    j["file"] = file;
    j["backend"] = backend_name(b);
    j["inputs"] = d.inputs();
    j["outputs"] = d.outputs();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["matrix"] = matrix_json(m);
    emit(out, j);
  } else {
    out << "# arity " << d.inputs() << " -> " << d.outputs() << '\n';
    write_matrix(out, m);
  }
  return kExitOk;
}

int cmd_verify_axioms(const RunConfig& cfg, const AxiomOptions& opts,
                      std::ostream& out, std::ostream& err) {
  std::vector<RuleSchema> rules;
  for (const auto& dir : opts.catalogs) {
    auto part = load_catalog(dir);
    if (part.empty()) err << "warning: no rules in " << dir << '\n';
    rules.insert(rules.end(), part.begin(), part.end());
  }
  SoundnessOptions so;
  so.exact_samples = opts.exact_samples;
  so.float_samples = opts.float_samples;
  so.seed = cfg.seed;
  so.tolerance = cfg.tolerance;
  so.max_denominator = opts.max_denominator;
  so.wire_cap = cfg.wire_cap;
  so.threads = cfg.threads;

  bool all_ok = true;
  ordered_json list = ordered_json::array();
  for (const auto& rule : rules) {
    const SoundnessReport r = check_soundness(rule, so);
    all_ok = all_ok && r.ok();
    if (cfg.json) {
      ordered_json j;
      j["name"] = r.rule;
      j["source"] = rule.source;
      j["passed"] = r.ok();
      j["samples"] = r.samples_tested;
      j["exact_passed"] = r.exact_passed;
      j["exact_failed"] = r.exact_failed;
      j["float_passed"] = r.float_passed;
      j["float_failed"] = r.float_failed;
      j["skipped"] = r.skipped;
      j["max_float_deviation"] = r.max_float_deviation;
      j["counterexample"] = r.counterexample ? assignment_json(*r.counterexample)
                                             : ordered_json(nullptr);
      if (r.counterexample) j["counterexample_backend"] = r.counterexample_backend;
      if (!r.error.empty()) j["error"] = r.error;
      list.push_back(std::move(j));
    } else {
      out << (r.ok() ? "PASS " : "FAIL ") << std::left << std::setw(12) << r.rule
          << " exact " << r.exact_passed << "/" << r.exact_passed + r.exact_failed
          << "  float " << r.float_passed << "/" << r.float_passed + r.float_failed
          << "  max dev " << sci(r.max_float_deviation);
      if (r.skipped) out << "  skipped " << r.skipped;
      out << '\n';
      if (r.counterexample) {
        out << "  counterexample (" << r.counterexample_backend
            << "): " << assignment_text(*r.counterexample) << '\n';
      }
      if (!r.error.empty()) out << "  error: " << r.error << '\n';
    }
  }
  if (cfg.json) {
    ordered_json j = envelope("verify-axioms");
    j["seed"] = cfg.seed;
    j["rules"] = std::move(list);
    j["passed"] = all_ok;
    emit(out, j);
  } else {
    out << rules.size() << " rule(s), " << (all_ok ? "all sound" : "FAILURES") << '\n';
  }
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_sup_to_cyc(const RunConfig& cfg, int p, std::ostream& out) {
  const SupCycReport r = verify_sup_to_cyc(p, cfg.seed);
  if (cfg.json) {
    ordered_json j = envelope("sup-to-cyc");
    j["p"] = r.p;
    j["extraction_level"] = r.extraction_level;
    j["extraction_width"] = r.extraction_width;
    ordered_json steps = ordered_json::array();
    for (const auto& s : r.steps) {
      steps.push_back({{"id", s.id}, {"description", s.description}, {"passed", s.passed},
                       {"checks", s.checks}, {"detail", s.detail}});
    }
    j["steps"] = std::move(steps);
    j["passed"] = r.passed();
    emit(out, j);
  } else {
    out << "SUP -> CYC for p = " << r.p << ", extraction width 2^" << r.extraction_level
        << " = " << r.extraction_width << '\n';
    for (const auto& s : r.steps) {
      out << "  (" << s.id << ") " << (s.passed ? "pass" : "FAIL") << "  " << s.description
          << "  [" << s.checks << " checks]\n";
      if (!s.detail.empty()) out << "      " << s.detail << '\n';
    }
    out << (r.passed() ? "all steps pass" : "FAILED") << '\n';
  }
  return r.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_euler_solve(const RunConfig& cfg, const std::string& matrix_file,
                    const std::string& order, std::ostream& out) {
  const Matrix m = parse_matrix(read_file(matrix_file));
  const EulerOrder o = order == "xzx" ? EulerOrder::kXZX : EulerOrder::kZXZ;
  const auto d = euler_decompose(m, o, std::max(cfg.tolerance, 1e-7));
  if (cfg.json) {
    ordered_json j = envelope("euler solve");
    j["order"] = order;
    j["found"] = d.has_value();
    if (d) {
      j["angles"] = triple_json(d->angles);
      j["exact"] = d->exact;
      j["scalar"] = format_entry(d->scalar);
    }
    emit(out, j);
  } else if (d) {
    out << order << " " << triple_text(d->angles) << (d->exact ? "  exact" : "  float")
        << "  scalar " << format_entry(d->scalar) << '\n';
  } else {
    out << "no " << order << " decomposition\n";
  }
  return d ? kExitOk : kExitVerificationFailed;
}

int cmd_euler_classify(const RunConfig& cfg, const std::string& lhs,
                       const std::string& rhs, bool color_swapped,
                       std::ostream& out) {
  EulerEquality eq{parse_triple(lhs), parse_triple(rhs), color_swapped};
  const EulerClassification c = classify_euler(eq, cfg.tolerance);
  if (cfg.json) {
    ordered_json j = envelope("euler classify");
    j["lhs"] = triple_json(eq.lhs);
    j["rhs"] = triple_json(eq.rhs);
    j["color_swapped"] = color_swapped;
    j["matrices_equal"] = c.matrices_equal;
    if (c.match) {
      j["family"] = c.match->family;
      j["family_color_swapped"] = c.match->color_swapped;
      j["n"] = c.match->n;
      j["m"] = c.match->m;
      j["parameters"] = assignment_json(c.match->parameters);
    } else {
      j["family"] = nullptr;
    }
    j["completeness_violation"] = c.completeness_violation;
    emit(out, j);
  } else {
    if (c.match) {
      out << "family " << c.match->family << (c.match->color_swapped ? " (color swapped)" : "")
          << "  n=" << c.match->n << " m=" << c.match->m << "  "
          << assignment_text(c.match->parameters) << '\n';
    } else {
      out << "no family\n";
    }
    out << "matrices " << (c.matrices_equal ? "equal" : "differ") << " up to scalar\n";
    if (c.completeness_violation) out << "COMPLETENESS VIOLATION\n";
  }
  return c.completeness_violation ? kExitVerificationFailed : kExitOk;
}

int cmd_euler_enumerate(const RunConfig& cfg, int max_denominator,
                        bool summary, std::ostream& out) {
  const EulerEnumeration e = enumerate_euler(max_denominator, cfg.threads);
  if (cfg.json) {
    ordered_json j = envelope("euler enumerate");
    j["max_denominator"] = e.max_denominator;
    j["grid"] = e.grid;
    j["triples_per_side"] = e.triples_per_side;
    j["equalities"] = e.equalities.size();
    j["unclassified"] = e.unclassified;
    j["per_family"] = e.per_family;
    j["per_family_color_swapped"] = e.per_family_swapped;
    if (!summary) {
      ordered_json table = ordered_json::array();
      for (const auto& item : e.equalities) {
        ordered_json row;
        row["lhs"] = triple_json(item.equality.lhs);
        row["rhs"] = triple_json(item.equality.rhs);
        if (item.match) {
          row["family"] = item.match->family;
          row["color_swapped"] = item.match->color_swapped;
          row["n"] = item.match->n;
          row["m"] = item.match->m;
        } else {
          row["family"] = nullptr;
        }
        table.push_back(std::move(row));
      }
      j["table"] = std::move(table);
    }
    emit(out, j);
  } else {
    if (!summary) {
      for (const auto& item : e.equalities) {
        out << "ZXZ" << triple_text(item.equality.lhs) << " = XZX"
            << triple_text(item.equality.rhs) << "  ";
        if (item.match) {
          out << "family " << item.match->family << (item.match->color_swapped ? "'" : "")
              << " n=" << item.match->n << " m=" << item.match->m << '\n';
        } else {
          out << "UNCLASSIFIED\n";
        }
      }
    }
    out << "grid pi/" << e.grid << ": " << e.triples_per_side << " triples per side, "
        << e.equalities.size() << " equalities, " << e.unclassified << " unclassified\n";
    for (int f = 0; f < kEulerFamilyCount; ++f) {
      out << "  family " << f + 1 << ": " << e.per_family[static_cast<std::size_t>(f)]
          << " plain, " << e.per_family_swapped[static_cast<std::size_t>(f)]
          << " color swapped\n";
    }
  }
  return e.unclassified == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_radin_sadun(const RunConfig& cfg, int length, int max_denominator,
                    const std::string& angles, std::ostream& out) {
  if (!angles.empty()) {
    const auto seq = parse_list(angles);
    const RadinSadunVerdict v = radin_sadun_check(seq);
    if (cfg.json) {
      ordered_json j = envelope("radin-sadun");
      ordered_json a = ordered_json::array();
      for (const auto& x : seq) a.push_back(x.to_string());
      j["angles"] = std::move(a);
      j["verdict"] = verdict_name(v);
      emit(out, j);
    } else {
      out << verdict_name(v) << '\n';
    }
    return v == RadinSadunVerdict::kCounterexample ? kExitVerificationFailed : kExitOk;
  }
  const RadinSadunReport r = radin_sadun_sweep(length, max_denominator);
  if (cfg.json) {
    ordered_json j = envelope("radin-sadun");
    j["max_length"] = r.max_length;
    j["max_denominator"] = r.max_denominator;
    j["angles"] = r.angle_count;
    j["sequences"] = r.sequences;
    j["identities"] = r.identities;
    j["identities_by_length"] = r.identities_by_length;
    ordered_json cex = ordered_json::array();
    for (const auto& seq : r.counterexamples) {
      ordered_json s = ordered_json::array();
      for (const auto& a : seq) s.push_back(a.to_string());
      cex.push_back(std::move(s));
    }
    j["counterexamples"] = std::move(cex);
    emit(out, j);
  } else {
    out << "length <= " << r.max_length << ", denominators <= " << r.max_denominator << ": "
        << r.angle_count << " angles, " << r.sequences << " sequences, " << r.identities
        << " scalar identities, " << r.counterexamples.size() << " counterexamples ("
        << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    for (const auto& seq : r.counterexamples) {
      out << "  COUNTEREXAMPLE";
      for (const auto& a : seq) out << ' ' << a.to_string();
      out << '\n';
    }
  }
  return r.counterexamples.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_scale_test(const RunConfig& cfg, const std::string& file,
                   std::int64_t n, std::int64_t k_max, const std::string& mode,
                   std::ostream& out) {
  const DiagramDocument doc = parse_document(read_file(file));
  CompareMode cm = CompareMode::kExact;
  const std::string m = mode.empty() ? doc.mode : mode;
  if (m == "scalar") cm = CompareMode::kUpToScalar;
  const ScaledReport r = scaled_equality_test(doc.term("lhs"), doc.term("rhs"), doc.assignment,
                                              n, k_max, cm, cfg.tolerance, cfg.wire_cap);
  if (cfg.json) {
    ordered_json j = envelope("scale-test");
    j["file"] = file;
    j["n"] = n;
    j["k_max"] = k_max;
    ordered_json steps = ordered_json::array();
    for (const auto& s : r.steps) {
      steps.push_back({{"k", s.k}, {"passed", s.passed}, {"deviation", s.deviation}});
    }
    j["steps"] = std::move(steps);
    j["first_failure"] = r.first_failure ? ordered_json(*r.first_failure) : ordered_json(nullptr);
    j["passed"] = r.passed();
    emit(out, j);
  } else {
    for (const auto& s : r.steps) {
      out << "k=" << s.k << "  " << (s.passed ? "pass" : "FAIL") << "  dev " << sci(s.deviation)
          << '\n';
    }
    out << (r.passed() ? "all pass" : "fails at k=" + std::to_string(*r.first_failure)) << '\n';
  }
  return r.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace zxv
