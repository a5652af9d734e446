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

#include <iosfwd>
#include <string>
#include <string_view>

#include "zxverify/matrix.hpp"

namespace zxverify {

/// Plain-text matrix dump:
///
///   # rows 2 cols 2 backend exact order 8
///   1/2*z^1-1/2*z^3 1/2*z^1-1/2*z^3
///   1/2*z^1-1/2*z^3 -1/2*z^1+1/2*z^3
///
/// Exact entries are sums of `c*z^k` (z = zeta_N, N from the header) with
/// no spaces; float entries are `re+imj` with 17 significant digits.
std::string format_matrix(const Matrix& m);
void write_matrix(std::ostream& out, const Matrix& m);

/// Inverse of format_matrix. Throws ParseError.
Matrix parse_matrix(std::string_view text);

/// One entry in the dump syntax.
std::string format_entry(const Cyclotomic& value);
std::string format_entry(std::complex<double> value);

}  // namespace zxverify
