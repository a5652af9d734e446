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

#include "zxverify/matrix_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <vector>

#include "zxverify/errors.hpp"

namespace zxverify {

namespace {

Cyclotomic parse_exact_entry(const std::string& text, std::uint32_t order,
                             std::size_t line, std::size_t column) {
  std::vector<Cyclotomic::Term> terms;
  std::size_t i = 0;
  if (text == "0") return Cyclotomic::from_terms(order, {});
  while (i < text.size()) {
    std::size_t j = i + 1;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    std::string term = text.substr(i, j - i);
    if (!term.empty() && term.front() == '+') term.erase(0, 1);
    std::uint32_t exponent = 0;
    if (auto star = term.find("*z^"); star != std::string::npos) {
      const std::string e = term.substr(star + 3);
      if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad exponent in '" + text + "'", line, column);
      }
      exponent = static_cast<std::uint32_t>(std::stoul(e));
      term.resize(star);
    }
    Rational c;
    if (c.set_str(term, 10) != 0) {
      throw ParseError("bad coefficient in '" + text + "'", line, column);
    }
    c.canonicalize();
    terms.push_back({exponent, c});
    i = j;
  }
  return Cyclotomic::from_terms(order, std::move(terms));
}

std::complex<double> parse_float_entry(const std::string& text,
                                       std::size_t line, std::size_t column) {
  const char* s = text.c_str();
  char* end = nullptr;
  const double re = std::strtod(s, &end);
  if (end == s) throw ParseError("bad float entry '" + text + "'", line, column);
  if (*end == '\0') return {re, 0.0};
  if (*end == 'j' && end[1] == '\0') return {0.0, re};
  const char* im_start = end;
  const double im = std::strtod(im_start, &end);
  if (end == im_start || *end != 'j' || end[1] != '\0') {
    throw ParseError("bad float entry '" + text + "'", line, column);
  }
  return {re, im};
}

}  // namespace

std::string format_entry(const Cyclotomic& value) { return value.to_string(); }

std::string format_entry(std::complex<double> value) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", value.real(), value.imag());
  return buf;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

void write_matrix(std::ostream& out, const Matrix& m) {
  const Matrix mm = m.at_common_order();
  out << "# rows " << mm.rows() << " cols " << mm.cols() << " backend "
      << backend_name(mm.backend());
  if (mm.backend() == Backend::kExact) {
    std::uint32_t order = 1;
    if (!mm.exact_entries().empty()) order = mm.exact_entries().front().order();
    out << " order " << order;
  }
  out << '\n';
  for (std::size_t r = 0; r < mm.rows(); ++r) {
    for (std::size_t c = 0; c < mm.cols(); ++c) {
      if (c) out << ' ';
      if (mm.backend() == Backend::kExact) {
        out << format_entry(mm.exact(r, c));
      } else {
        out << format_entry(mm.number(r, c));
      }
    }
    out << '\n';
  }
}

Matrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint32_t order = 1;
  Backend backend = Backend::kFloat;
  bool have_header = false;
  std::vector<Cyclotomic> exact;
  std::vector<std::complex<double>> floats;
  std::size_t rows_seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '#') {
      if (have_header) continue;
      std::istringstream h(line.substr(1));
      std::string key;
      while (h >> key) {
        std::string value;
        if (!(h >> value)) throw ParseError("header value missing", lineno, 1);
        if (key == "rows") {
          rows = std::stoul(value);
        } else if (key == "cols") {
          cols = std::stoul(value);
        } else if (key == "backend") {
          if (value != "exact" && value != "float") {
            throw ParseError("unknown backend '" + value + "'", lineno, 1);
          }
          backend = value == "exact" ? Backend::kExact : Backend::kFloat;
        } else if (key == "order") {
          order = static_cast<std::uint32_t>(std::stoul(value));
        }
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("missing '# rows R cols C' header", lineno, 1);
    std::istringstream row(line);
    std::string entry;
    std::size_t count = 0;
    while (row >> entry) {
      ++count;
      if (backend == Backend::kExact) {
        exact.push_back(parse_exact_entry(entry, order, lineno, count));
      } else {
        floats.push_back(parse_float_entry(entry, lineno, count));
      }
    }
    if (count != cols) {
      throw ParseError("expected " + std::to_string(cols) + " entries, found " +
                           std::to_string(count),
                       lineno, 1);
    }
    ++rows_seen;
  }
  if (!have_header) throw ParseError("empty matrix file", lineno, 1);
  if (rows_seen != rows) {
    throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(rows_seen),
                     lineno, 1);
  }
  if (backend == Backend::kExact) return Matrix::from_exact(rows, cols, std::move(exact));
  return Matrix::from_float(rows, cols, std::move(floats));
}

}  // namespace zxverify
