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

#include <lcasp/dl.hpp>
#include <lcasp/ground_program.hpp>
#include <lcasp/lcsem.hpp>
#include <lcasp/lp.hpp>
#include <lcasp/stable.hpp>
#include <lcasp/syntax.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lcasp::test {

using AtomSets = std::set<std::vector<std::string>>;

std::string slurp(std::string const &path);
std::string data_path(std::string_view rel);

GroundProgram ground_text(std::string_view text);
AtomSets names(GroundProgram const &prg, std::vector<Interpretation> const &models);
AtomSets names(GroundProgram const &prg, std::vector<LcModel> const &models);

//! All stable models by checking every subset of the atom table against the
//! reduct, written independently of the library's reduct().
std::vector<Interpretation> brute_force_stable(GroundProgram const &prg);

//! From-scratch Bellman-Ford over the constraint graph.
bool bellman_ford_sat(std::vector<DiffConstraint> const &cs, Domain domain, Rational const &eps);
//! True iff `cs` forms one simple directed cycle.
bool is_simple_cycle(std::vector<DiffConstraint> const &cs);

//! Fourier-Motzkin elimination over the reals; relations `<=`, `>=`, `=` only.
bool fourier_motzkin_sat(std::vector<LinearConstraint> const &cs);
//! Exhaustive scan of the integer box [lo, hi]^n.
bool grid_sat(std::vector<LinearConstraint> const &cs, std::vector<std::string> const &vars, int lo, int hi);
//! Constraints plus box bounds of `p` as plain rows.
std::vector<LinearConstraint> with_bounds(LpProblem const &p);
bool satisfies_problem(LpProblem const &p, Valuation const &w);

//! Up to 6 real or 3 integer variables, up to 12 sparse rows with small
//! integer coefficients, every variable boxed to [-10, 10].
LpProblem random_system(std::mt19937_64 &rng, Domain domain);
//! Fourier-Motzkin for real systems, grid scan for integer ones.
bool lp_oracle(LpProblem const &p);

//! One random assert/backtrack sequence against a DlStore, compared with
//! Bellman-Ford at every step. Returns a description of the first mismatch,
//! or an empty string.
std::string dl_fuzz(std::uint64_t seed);
//! One random system: verdict against lp_oracle(), witness exactness and IIS
//! minimality. Returns a description of the first failure, or an empty string.
std::string lp_trial(std::uint64_t seed, Domain domain);

struct Shop {
    //! Per job the operations as (machine, duration) in processing order.
    std::vector<std::vector<std::pair<int, int>>> jobs;
    int bound = 0;
};
//! Reads `op(J,K,M,D).` and `bound(B).` facts.
Shop read_shop(std::string_view text);
//! Optimal makespan by enumerating all machine sequences.
int shop_optimum(Shop const &shop);


} // namespace lcasp::test
