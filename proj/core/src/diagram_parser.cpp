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

#include "zxverify/diagram_parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <gmpxx.h>

#include "zxverify/cyclotomic.hpp"
#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

const std::set<std::string, std::less<>> kReserved = {
    "pi", "Z", "X", "H", "I", "SWAP", "CUP", "CAP", "E", "TRI", "seq", "par"};

enum class Tok { kIdent, kNumber, kReal, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t pos = 0;
};

class Source {
 public:
  explicit Source(std::string_view text) : text_(text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  std::string_view text() const { return text_; }

  [[noreturn]] void fail(std::size_t pos, const std::string& message) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), pos);
    const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    const std::size_t column = pos - *(it - 1) + 1;
    throw ParseError(message, line, column);
  }

 private:
  std::string_view text_;
  std::vector<std::size_t> line_starts_;
};

class Lexer {
 public:
  Lexer(const Source& src, std::size_t begin, std::size_t end)
      : src_(src), pos_(begin), end_(end) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(std::string_view punct) {
    if (current_.kind == Tok::kPunct && current_.text == punct) {
      advance();
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) {
      fail("expected '" + std::string(punct) + "'" + found());
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    src_.fail(current_.pos, message);
  }

  std::string found() const {
    if (current_.kind == Tok::kEnd) return " but found end of section";
    return " but found '" + current_.text + "'";
  }

  const Source& source() const { return src_; }

 private:
  void advance() {
    const std::string_view s = src_.text();
    while (pos_ < end_) {
      if (std::isspace(static_cast<unsigned char>(s[pos_]))) {
        ++pos_;
      } else if (s[pos_] == '#') {
        while (pos_ < end_ && s[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    current_ = Token{};
    current_.pos = pos_;
    if (pos_ >= end_) return;
    const char c = s[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = pos_;
      while (j < end_ && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                          s[j] == '_')) {
        ++j;
      }
      current_.kind = Tok::kIdent;
      current_.text = std::string(s.substr(pos_, j - pos_));
      pos_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = pos_;
      while (j < end_ && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < end_ && s[j] == '.') {
        ++j;
        while (j < end_ && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      if (j < end_ && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < end_ && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < end_ && std::isdigit(static_cast<unsigned char>(s[k]))) {
          while (k < end_ && std::isdigit(static_cast<unsigned char>(s[k]))) {
            ++k;
          }
          j = k;
        }
      }
      current_.text = std::string(s.substr(pos_, j - pos_));
      if (current_.text == ".") src_.fail(pos_, "malformed number");
      current_.kind = Tok::kNumber;
      if (j < end_ && s[j] == 'r' &&
          !(j + 1 < end_ && (std::isalnum(static_cast<unsigned char>(s[j + 1])) ||
                             s[j + 1] == '_'))) {
        current_.kind = Tok::kReal;
        ++j;
      }
      pos_ = j;
      return;
    }
    if (std::string_view("()+-*/,=;").find(c) != std::string_view::npos) {
      current_.kind = Tok::kPunct;
      current_.text = std::string(1, c);
      ++pos_;
      return;
    }
    src_.fail(pos_, std::string("unexpected character '") + c + "'");
  }

  const Source& src_;
  std::size_t pos_;
  std::size_t end_;
  Token current_;
};

Rational decimal_to_rational(const std::string& text) {
  // Handles "12", "1.25", "3e-2" exactly.
  std::string mantissa = text;
  long exponent = 0;
  if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stol(mantissa.substr(e + 1));
    mantissa = mantissa.substr(0, e);
  }
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  if (mantissa.empty()) mantissa = "0";
  Rational r(mpz_class(mantissa, 10));
  mpz_class ten(10);
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(),
             static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    r *= scale;
  } else {
    r /= scale;
  }
  r.canonicalize();
  return r;
}

// A linear value met while parsing an angle: number + pi*p + real + vars.
struct Linear {
  Rational number;
  Rational pi;
  double real = 0.0;
  bool has_real = false;
  std::map<std::string, Rational> vars;

  bool is_number() const { return pi == 0 && !has_real && vars.empty(); }

  Linear& operator+=(const Linear& o) {
    number += o.number;
    pi += o.pi;
    real += o.real;
    has_real = has_real || o.has_real;
    for (const auto& [k, v] : o.vars) vars[k] += v;
    return *this;
  }

  Linear scaled(const Rational& c) const {
    Linear out;
    out.number = number * c;
    out.pi = pi * c;
    out.real = real * c.get_d();
    out.has_real = has_real;
    for (const auto& [k, v] : vars) out.vars[k] = v * c;
    return out;
  }
};

class AngleParser {
 public:
  AngleParser(Lexer& lex, const std::set<std::string, std::less<>>& vars)
      : lex_(lex), vars_(vars) {}

  AngleExpr parse() {
    const std::size_t start = lex_.peek().pos;
    Linear v = sum();
    return finish(v, start);
  }

 private:
  Linear sum() {
    Linear acc;
    bool negate = false;
    if (lex_.accept("-")) {
      negate = true;
    } else {
      lex_.accept("+");
    }
    Linear first = product();
    acc += negate ? first.scaled(-1) : first;
    while (true) {
      if (lex_.accept("+")) {
        acc += product();
      } else if (lex_.accept("-")) {
        acc += product().scaled(-1);
      } else {
        return acc;
      }
    }
  }

  Linear product() {
    Linear acc = factor();
    while (true) {
      const std::size_t pos = lex_.peek().pos;
      if (lex_.accept("*")) {
        Linear rhs = factor();
        if (acc.is_number()) {
          acc = rhs.scaled(acc.number);
        } else if (rhs.is_number()) {
          acc = acc.scaled(rhs.number);
        } else {
          lex_.source().fail(pos, "angle expressions must stay linear");
        }
      } else if (lex_.accept("/")) {
        Linear rhs = factor();
        if (!rhs.is_number() || rhs.number == 0) {
          lex_.source().fail(pos, "division by a non-constant or zero");
        }
        acc = acc.scaled(Rational(1 / rhs.number));
      } else {
        return acc;
      }
    }
  }

  Linear factor() {
    Token t = lex_.peek();
    Linear out;
    switch (t.kind) {
      case Tok::kNumber:
        lex_.next();
        out.number = decimal_to_rational(t.text);
        return out;
      case Tok::kReal:
        lex_.next();
        out.real = std::stod(t.text);
        out.has_real = true;
        return out;
      case Tok::kIdent:
        lex_.next();
        if (t.text == "pi") {
          out.pi = 1;
          return out;
        }
        if (vars_.count(t.text) == 0) {
          lex_.source().fail(t.pos, "unknown variable '" + t.text + "'");
        }
        out.vars[t.text] = 1;
        return out;
      case Tok::kPunct:
        if (t.text == "(") {
          lex_.next();
          Linear inner = sum();
          lex_.expect(")");
          return inner;
        }
        if (t.text == "-") {
          lex_.next();
          return factor().scaled(-1);
        }
        break;
      case Tok::kEnd:
        break;
    }
    lex_.fail("expected an angle" + lex_.found());
  }

  AngleExpr finish(const Linear& v, std::size_t pos) {
    if (v.number != 0) {
      lex_.source().fail(pos,
                         "a bare number is not an angle; write k*pi/q or a "
                         "real such as 1.0r");
    }
    AngleExpr out;
    for (const auto& [name, c] : v.vars) {
      if (c == 0) continue;
      if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
        lex_.source().fail(pos, "coefficient of '" + name +
                                    "' must be a machine integer");
      }
      out = out + AngleExpr::variable(name, c.get_num().get_si());
    }
    if (v.has_real) {
      out = out + AngleExpr(Angle::real(v.real + v.pi.get_d() * std::numbers::pi));
      return out;
    }
    if (!v.pi.get_num().fits_slong_p() || !v.pi.get_den().fits_slong_p()) {
      lex_.source().fail(pos, "angle denominator too large");
    }
    out = out + AngleExpr(RationalAngle::normalize(v.pi.get_num().get_si(),
                                                   v.pi.get_den().get_si()));
    return out;
  }

  Lexer& lex_;
  const std::set<std::string, std::less<>>& vars_;
};

class TermParser {
 public:
  TermParser(Lexer& lex, const std::set<std::string, std::less<>>& vars,
             const std::map<std::string, Diagram>& lets)
      : lex_(lex), vars_(vars), lets_(lets) {}

  Diagram parse() {
    Token t = lex_.peek();
    if (t.kind != Tok::kIdent) lex_.fail("expected a diagram" + lex_.found());
    lex_.next();
    const std::string& name = t.text;
    if (name == "Z" || name == "X") {
      lex_.expect("(");
      int n = count();
      lex_.expect(",");
      int m = count();
      AngleExpr angle;
      if (lex_.accept(",")) angle = AngleParser(lex_, vars_).parse();
      lex_.expect(")");
      return name == "Z" ? Diagram::z(n, m, angle) : Diagram::x(n, m, angle);
    }
    if (name == "seq" || name == "par") {
      lex_.expect("(");
      std::vector<Diagram> parts;
      parts.push_back(parse());
      while (lex_.accept(",")) parts.push_back(parse());
      lex_.expect(")");
      return name == "seq" ? Diagram::seq(parts) : Diagram::par(parts);
    }
    Diagram d;
    if (name == "H") {
      d = Diagram::hadamard();
    } else if (name == "I") {
      d = Diagram::identity();
    } else if (name == "SWAP") {
      d = Diagram::swap();
    } else if (name == "CUP") {
      d = Diagram::cup();
    } else if (name == "CAP") {
      d = Diagram::cap();
    } else if (name == "E") {
      d = Diagram::empty();
    } else if (name == "TRI") {
      d = Diagram::triangle();
    } else if (auto it = lets_.find(name); it != lets_.end()) {
      return it->second;
    } else {
      lex_.source().fail(t.pos, "unknown diagram '" + name + "'");
    }
    if (lex_.accept("(")) lex_.expect(")");
    return d;
  }

 private:
  int count() {
    Token t = lex_.peek();
    if (t.kind != Tok::kNumber ||
        t.text.find_first_not_of("0123456789") != std::string::npos) {
      lex_.fail("expected a wire count" + lex_.found());
    }
    lex_.next();
    if (t.text.size() > 4) lex_.source().fail(t.pos, "wire count too large");
    return std::stoi(t.text);
  }

  Lexer& lex_;
  const std::set<std::string, std::less<>>& vars_;
  const std::map<std::string, Diagram>& lets_;
};

struct Section {
  std::string key;
  std::string let_name;  // for key == "let"
  std::size_t header_pos;
  std::size_t begin;
  std::size_t end;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Section> split_sections(const Source& src) {
  const std::string_view s = src.text();
  std::vector<Section> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t eol = s.find('\n', pos);
    if (eol == std::string_view::npos) eol = s.size();
    const std::string_view line = s.substr(pos, eol - pos);
    std::size_t j = 0;
    while (j < line.size() && is_ident_char(line[j])) ++j;
    const bool starts_ident =
        j > 0 && !std::isdigit(static_cast<unsigned char>(line[0]));
    if (starts_ident) {
      std::string word(line.substr(0, j));
      std::size_t k = j;
      while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
      if (word == "let" && k > j) {
        std::size_t n0 = k;
        while (k < line.size() && is_ident_char(line[k])) ++k;
        std::string let_name(line.substr(n0, k - n0));
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
        if (let_name.empty() || k >= line.size() || line[k] != '=') {
          src.fail(pos + k, "expected 'let NAME = term'");
        }
        out.push_back({"let", let_name, pos, pos + k + 1, 0});
      } else if (k < line.size() && line[k] == ':') {
        out.push_back({word, "", pos, pos + k + 1, 0});
      } else if (out.empty()) {
        src.fail(pos, "expected a header such as 'term:'");
      }
    } else if (out.empty()) {
      std::size_t k = 0;
      while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
        ++k;
      }
      if (k < line.size() && line[k] != '#') {
        src.fail(pos + k, "expected a header such as 'term:'");
      }
    }
    if (eol == s.size()) break;
    pos = eol + 1;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].end = i + 1 < out.size() ? out[i + 1].header_pos : s.size();
  }
  return out;
}

std::string raw_text(const Source& src, const Section& sec) {
  std::string_view body = src.text().substr(sec.begin, sec.end - sec.begin);
  std::string out;
  std::istringstream lines{std::string(body)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    if (!out.empty()) out += ' ';
    out += line.substr(b, e - b + 1);
  }
  return out;
}

void expect_end(Lexer& lex) {
  if (lex.peek().kind != Tok::kEnd) lex.fail("unexpected '" + lex.peek().text + "'");
}

std::string identifier(Lexer& lex, const char* what) {
  Token t = lex.next();
  if (t.kind != Tok::kIdent) {
    lex.source().fail(t.pos, std::string("expected ") + what);
  }
  return t.text;
}

}  // namespace

const Diagram& DiagramDocument::term(const std::string& key) const {
  auto it = terms.find(key);
  if (it == terms.end()) throw ValidationError("missing '" + key + ":' section", "");
  return it->second;
}

DiagramDocument parse_document(std::string_view text) {
  const Source src(text);
  const std::vector<Section> sections = split_sections(src);
  DiagramDocument doc;
  std::set<std::string> seen;
  std::set<std::string, std::less<>> vars;
  std::map<std::string, Diagram> lets;

  for (const Section& sec : sections) {
    if (sec.key == "let") continue;
    if (!seen.insert(sec.key).second) {
      src.fail(sec.header_pos, "duplicate '" + sec.key + ":' header");
    }
    if (sec.key == "vars") {
      Lexer lex(src, sec.begin, sec.end);
      while (lex.peek().kind != Tok::kEnd) {
        Token t = lex.next();
        if (t.kind != Tok::kIdent) src.fail(t.pos, "expected a variable name");
        if (kReserved.count(t.text)) {
          src.fail(t.pos, "'" + t.text + "' is reserved");
        }
        if (!vars.insert(t.text).second) {
          src.fail(t.pos, "duplicate variable '" + t.text + "'");
        }
        doc.variables.push_back(t.text);
        lex.accept(",");
      }
    }
  }

  for (const Section& sec : sections) {
    Lexer lex(src, sec.begin, sec.end);
    if (sec.key == "vars") continue;
    if (sec.key == "name") {
      doc.name = raw_text(src, sec);
    } else if (sec.key == "description") {
      doc.description = raw_text(src, sec);
    } else if (sec.key == "mode") {
      doc.mode = raw_text(src, sec);
      if (doc.mode != "exact" && doc.mode != "scalar") {
        src.fail(sec.begin, "mode must be 'exact' or 'scalar'");
      }
    } else if (sec.key == "side_condition") {
      SideConditionSpec spec;
      spec.name = identifier(lex, "a side condition name");
      if (lex.accept("(")) {
        if (!lex.accept(")")) {
          do {
            Token t = lex.peek();
            std::string v = identifier(lex, "a variable name");
            if (!vars.count(v)) src.fail(t.pos, "unknown variable '" + v + "'");
            spec.args.push_back(v);
          } while (lex.accept(","));
          lex.expect(")");
        }
      }
      expect_end(lex);
      if (spec.name != "none") doc.side_condition = spec;
    } else if (sec.key == "assign") {
      static const std::set<std::string, std::less<>> kNoVars;
      while (lex.peek().kind != Tok::kEnd) {
        Token t = lex.peek();
        std::string v = identifier(lex, "a variable name");
        if (!vars.count(v)) src.fail(t.pos, "unknown variable '" + v + "'");
        lex.expect("=");
        doc.assignment[v] = AngleParser(lex, kNoVars).parse().constant();
        if (!lex.accept(",")) lex.accept(";");
      }
    } else if (sec.key == "let") {
      if (kReserved.count(sec.let_name) || vars.count(sec.let_name)) {
        src.fail(sec.header_pos, "'" + sec.let_name + "' is reserved");
      }
      Diagram d = TermParser(lex, vars, lets).parse();
      expect_end(lex);
      lets.insert_or_assign(sec.let_name, d);
    } else if (sec.key == "term" || sec.key == "lhs" || sec.key == "rhs") {
      Diagram d = TermParser(lex, vars, lets).parse();
      expect_end(lex);
      doc.terms.emplace(sec.key, d);
    } else {
      src.fail(sec.header_pos, "unknown header '" + sec.key + ":'");
    }
  }
  return doc;
}

DiagramDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

Diagram parse_diagram(std::string_view text,
                      const std::vector<std::string>& vars) {
  const Source src(text);
  std::set<std::string, std::less<>> v(vars.begin(), vars.end());
  const std::map<std::string, Diagram> lets;
  Lexer lex(src, 0, text.size());
  Diagram d = TermParser(lex, v, lets).parse();
  expect_end(lex);
  return d;
}

AngleExpr parse_angle(std::string_view text,
                      const std::vector<std::string>& vars) {
  const Source src(text);
  std::set<std::string, std::less<>> v(vars.begin(), vars.end());
  Lexer lex(src, 0, text.size());
  AngleExpr e = AngleParser(lex, v).parse();
  expect_end(lex);
  return e;
}

}  // namespace zxverify
