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
#include <lcasp/rational.hpp>

#include <stdexcept>

namespace lcasp {

char const *to_string(Relation rel) {
    switch (rel) {
        case Relation::le: return "<=";
        case Relation::lt: return "<";
        case Relation::ge: return ">=";
        case Relation::gt: return ">";
        case Relation::eq: return "=";
        case Relation::ne: return "!=";
    }
    return "?";
}

Relation complement(Relation rel) {
    switch (rel) {
        case Relation::le: return Relation::gt;
        case Relation::lt: return Relation::ge;
        case Relation::ge: return Relation::lt;
        case Relation::gt: return Relation::le;
        case Relation::eq: return Relation::ne;
        case Relation::ne: return Relation::eq;
    }
    return rel;
}

Relation mirror(Relation rel) {
    switch (rel) {
        case Relation::le: return Relation::ge;
        case Relation::lt: return Relation::gt;
        case Relation::ge: return Relation::le;
        case Relation::gt: return Relation::lt;
        default: return rel;
    }
}

bool holds(Relation rel, Rational const &lhs, Rational const &rhs) {
    switch (rel) {
        case Relation::le: return lhs <= rhs;
        case Relation::lt: return lhs < rhs;
        case Relation::ge: return lhs >= rhs;
        case Relation::gt: return lhs > rhs;
        case Relation::eq: return lhs == rhs;
        case Relation::ne: return lhs != rhs;
    }
    return false;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    auto digits = [](std::string_view d) {
        for (char c : d) {
            if (c < '0' || c > '9') { return false; }
        }
        return true;
    };
    if ((whole.empty() && frac.empty()) || !digits(whole) || !digits(frac) ||
        (dot != std::string_view::npos && frac.empty() && whole.empty())) {
        throw std::invalid_argument("not a decimal number: " + std::string(text));
    }
    Integer num(whole.empty() ? std::string("0") : std::string(whole), 10);
    Integer den = 1;
    for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational result(negative ? Integer(-num) : num, den);
    result.canonicalize();
    return result;
}

std::optional<std::string> to_decimal(Rational const &value) {
    Integer den = value.get_den();
    unsigned twos = 0;
    unsigned fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) { return std::nullopt; }
    unsigned places = std::max(twos, fives);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    Integer scaled = value.get_num() * (scale / value.get_den());
    bool negative = scaled < 0;
    if (negative) { scaled = -scaled; }
    std::string digits = scaled.get_str();
    if (places > 0) {
        if (digits.size() <= places) { digits.insert(0, places - digits.size() + 1, '0'); }
        digits.insert(digits.size() - places, ".");
    }
    return negative ? "-" + digits : digits;
}

std::string to_fraction(Rational const &value) {
    if (value.get_den() == 1) { return value.get_num().get_str(); }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_text(Rational const &value) {
    if (value.get_den() == 1) { return value.get_num().get_str(); }
    if (auto dec = to_decimal(value)) { return "\"" + *dec + "\""; }
    return to_fraction(value);
}

Integer floor(Rational const &value) {
    Integer res;
    mpz_fdiv_q(res.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return res;
}

Integer ceil(Rational const &value) {
    Integer res;
    mpz_cdiv_q(res.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return res;
}

} // namespace lcasp
