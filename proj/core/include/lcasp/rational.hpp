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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace lcasp {

using Integer = mpz_class;
using Rational = mpq_class;

//! Value domain of a theory variable.
enum class Domain { integer, real };

//! Relations of linear constraints and comparison literals.
enum class Relation { le, lt, ge, gt, eq, ne };

char const *to_string(Relation rel);
//! The relation that holds iff `rel` does not hold.
Relation complement(Relation rel);
//! The relation obtained when both sides of a comparison are swapped.
Relation mirror(Relation rel);
bool holds(Relation rel, Rational const &lhs, Rational const &rhs);

//! Parses an exact decimal such as `-12`, `1.5` or `.25`.
//! Throws std::invalid_argument on anything else.
Rational parse_decimal(std::string_view text);

//! Exact decimal expansion if the denominator has no prime factors besides 2 and 5.
std::optional<std::string> to_decimal(Rational const &value);
//! `p/q`, or `p` if the value is integral.
std::string to_fraction(Rational const &value);
//! Integers as `p`, finite decimals quoted (`"4.2"`), anything else as `p/q`.
std::string to_text(Rational const &value);

Integer floor(Rational const &value);
Integer ceil(Rational const &value);
inline bool is_integral(Rational const &value) { return value.get_den() == 1; }

} // namespace lcasp
