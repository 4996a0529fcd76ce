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
#include <lcasp/random_program.hpp>

#include <random>
#include <sstream>
#include <vector>

namespace lcasp {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return splitmix(splitmix(splitmix(a) ^ b) ^ c);
}

std::string random_program(std::uint64_t seed, RandomProgramOptions const &opts) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto chance = [&](int percent) { return uniform(1, 100) <= percent; };

    static char const *const var_names[] = {"x", "y", "z", "u", "v", "w"};
    static char const *const relations[] = {"<=", "<", ">=", ">", "=", "!="};
    int num_atoms = uniform(1, static_cast<int>(opts.max_atoms));
    int num_lc = uniform(0, static_cast<int>(opts.max_lc_atoms));
    int num_vars = uniform(1, static_cast<int>(std::min(opts.max_variables, 6U)));

    std::vector<std::string> atoms;
    for (int i = 0; i < num_atoms; ++i) { atoms.push_back("p" + std::to_string(i + 1)); }
    std::vector<std::string> lc_atoms;
    while (static_cast<int>(lc_atoms.size()) < num_lc) {
        std::ostringstream out;
        if (opts.difference_only) {
            int x = uniform(0, num_vars - 1);
            int y = uniform(0, num_vars - 1);
            out << "&diff{" << var_names[x] << "-" << (chance(25) ? "0" : var_names[y]) << "}"
                << relations[uniform(0, 3)] << uniform(-4, 4);
        }
        else {
            out << "&sum{";
            int terms = uniform(1, 2);
            for (int t = 0; t < terms; ++t) {
                if (t > 0) { out << ";"; }
                out << uniform(-opts.max_coefficient, opts.max_coefficient) << "*" << var_names[uniform(0, num_vars - 1)];
            }
            out << "}" << relations[uniform(0, 5)] << uniform(-4, 4);
        }
        std::string text = out.str();
        bool seen = false;
        for (auto const &other : lc_atoms) { seen = seen || other == text; }
        if (!seen) { lc_atoms.push_back(text); }
    }

    std::vector<bool> used(lc_atoms.size(), false);
    auto body = [&](int max_len) {
        std::ostringstream out;
        int len = uniform(0, max_len);
        for (int i = 0; i < len; ++i) {
            out << (i == 0 ? " :- " : "; ");
            if (chance(30)) { out << "not "; }
            if (!lc_atoms.empty() && chance(35)) {
                int idx = uniform(0, static_cast<int>(lc_atoms.size()) - 1);
                used[idx] = true;
                out << lc_atoms[idx];
            }
            else {
                out << atoms[uniform(0, static_cast<int>(atoms.size()) - 1)];
            }
        }
        return out.str();
    };

    std::ostringstream prg;
    if (chance(25)) {
        prg << "#real";
        for (int i = 0; i < num_vars; ++i) { prg << (i == 0 ? " " : ", ") << var_names[i]; }
        prg << ".\n";
    }
    int num_rules = uniform(1, static_cast<int>(opts.max_rules));
    std::vector<bool> in_head(lc_atoms.size(), false);
    for (int r = 0; r < num_rules; ++r) {
        int kind = uniform(1, 100);
        std::string b = body(3);
        if (kind <= 50) { prg << atoms[uniform(0, num_atoms - 1)] << b << ".\n"; }
        else if (kind <= 65) { prg << "{" << atoms[uniform(0, num_atoms - 1)] << "}" << b << ".\n"; }
        else if (kind <= 80 || !opts.defined || lc_atoms.empty()) {
            if (b.empty()) { b = body(3); }
            if (b.empty()) {
                prg << atoms[uniform(0, num_atoms - 1)] << ".\n";
                continue;
            }
            prg << b.substr(1) << ".\n";
        }
        else {
            int idx = uniform(0, static_cast<int>(lc_atoms.size()) - 1);
            in_head[idx] = true;
            prg << lc_atoms[idx] << b << ".\n";
        }
    }
    for (std::size_t i = 0; i < lc_atoms.size(); ++i) {
        if (opts.defined) {
            if (!in_head[i] || chance(50)) { prg << lc_atoms[i] << " :- not " << atoms[uniform(0, num_atoms - 1)] << ".\n"; }
        }
        else if (!opts.defined && !used[i]) {
            if (chance(50)) { prg << atoms[uniform(0, num_atoms - 1)] << " "; }
            prg << ":- " << (chance(50) ? "not " : "") << lc_atoms[i] << ".\n";
        }
    }
    return prg.str();
}

} // namespace lcasp
