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
#include <stdexcept>
#include <string>

namespace zxverify {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to a mathematical operation (zero denominator, p not an
/// odd prime, polynomial degree too large for the chosen extraction level).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit was exceeded (cyclotomic order, matrix
/// dimension, enumeration cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The exact backend was asked to evaluate a real (non-rational) angle, or
/// two matrices of different backends were compared.
class BackendError : public Error {
 public:
  using Error::Error;
};

/// Ill-typed composition. `path()` locates the offending node, e.g.
/// "seq.bottom.par.left".
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, std::string path)
      : Error(message + (path.empty() ? std::string() : " at " + path)),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A free variable had no value in a substitution.
class UnboundVariableError : public Error {
 public:
  explicit UnboundVariableError(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Syntax error in the diagram or rule text formats. Line and column are
/// 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace zxverify
