//
// Copyright (c) 2026 The lcasp authors
//
// This file is part of lcasp.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#pragma once

#include <lcasp/lcsem.hpp>

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace lcasp::cli {

namespace exit_code {
//! A model limit given with `--models` was reached.
constexpr int limit = 0;
constexpr int sat = 10;
constexpr int unsat = 20;
constexpr int usage = 64;
constexpr int data = 65;
constexpr int software = 70;
} // namespace exit_code

//! Runs the `lcasp` command line; `args` excludes the program name.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

//! Exact rational from `p/q` or a decimal such as `0.001`.
Rational parse_rational(std::string_view text);

//! Models as a JSON array of objects with `atoms` and `assignment` keys.
nlohmann::json to_json(GroundProgram const &prg, std::vector<LcModel> const &models);
//! Reads back the output of to_json().
std::vector<std::pair<std::vector<std::string>, Valuation>> from_json(nlohmann::json const &doc);

} // namespace lcasp::cli
