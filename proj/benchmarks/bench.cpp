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
#include <lcasp/dl.hpp>
#include <lcasp/grounder.hpp>
#include <lcasp/lcsem.hpp>
#include <lcasp/lp.hpp>

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

namespace {

using namespace lcasp;

std::string slurp(std::string const &file) {
    std::ifstream in(std::string(LCASP_SOURCE_DIR) + "/" + file);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void dl_assert_chain(benchmark::State &state) {
    auto n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::vector<DiffConstraint> cs;
    for (int i = 0; i < n; ++i) {
        auto a = "v" + std::to_string(rng() % 16);
        auto b = "v" + std::to_string(rng() % 16);
        cs.push_back({a, b, Rational(static_cast<long>(rng() % 21) - 5)});
    }
    for (auto _ : state) {
        DlStore store;
        unsigned level = 0;
        for (auto const &c : cs) {
            if (!store.assert_constraint(c, ++level).sat) { store.backtrack(level - 1); }
        }
        benchmark::DoNotOptimize(store.witness());
    }
}
BENCHMARK(dl_assert_chain)->Arg(16)->Arg(64)->Arg(256);

void lp_check_sat(benchmark::State &state) {
    auto n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    LpProblem p;
    p.default_domain = Domain::real;
    for (int i = 0; i < n; ++i) {
        LinearSum sum;
        for (int v = 0; v < 4; ++v) { sum.emplace_back(static_cast<long>(rng() % 7) - 3, "x" + std::to_string(v)); }
        p.constraints.push_back({sum, Relation::le, Rational(static_cast<long>(rng() % 20))});
    }
    for (auto _ : state) { benchmark::DoNotOptimize(check_sat(p)); }
}
BENCHMARK(lp_check_sat)->Arg(4)->Arg(12);

void lazy_schedule(benchmark::State &state, char const *file) {
    auto prg = ground(syntax::parse_program(slurp(file)));
    auto setting = signature(prg, StrictPolicy{});
    LcOptions opts;
    opts.theory.theory = Theory::dl;
    opts.limit = 1;
    for (auto _ : state) { benchmark::DoNotOptimize(enumerate_lazy(prg, setting, opts)); }
}
BENCHMARK_CAPTURE(lazy_schedule, fs3x3_a, "benchmarks/instances/fs/fs3x3_a.lp");
BENCHMARK_CAPTURE(lazy_schedule, js3x3_a, "benchmarks/instances/js/js3x3_a.lp");

} // namespace

BENCHMARK_MAIN();
