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

#include <lcasp/error.hpp>
#include <lcasp/rational.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lcasp {

using Valuation = std::map<std::string, Rational>;
using LinearSum = std::vector<std::pair<Rational, std::string>>;

struct LinearConstraint {
    LinearSum terms;
    Relation relation = Relation::le;
    Rational rhs;

    //! Same constraint with coefficients of equal variables summed, zero
    //! coefficients dropped and terms ordered by variable.
    LinearConstraint merged() const;
    bool operator==(LinearConstraint const &other) const = default;
};

std::string to_string(LinearConstraint const &c);
Rational evaluate(LinearSum const &terms, Valuation const &values);
bool satisfied(LinearConstraint const &c, Valuation const &values);

//! Rewrites `c` into alternatives, each a conjunction over `<=`, `>=` and `=`.
//! Strict relations are shifted by `epsilon`; `!=` yields two alternatives.
std::vector<std::vector<LinearConstraint>> normalize(LinearConstraint const &c, Rational const &epsilon);

struct LpObjective {
    bool maximize = false;
    LinearSum terms;
};

struct LpProblem {
    //! Normalized constraints (relations `<=`, `>=` and `=` only).
    std::vector<LinearConstraint> constraints;
    std::map<std::string, Domain> domains;
    Domain default_domain = Domain::integer;
    std::map<std::string, std::pair<std::optional<Rational>, std::optional<Rational>>> bounds;
    std::optional<LpObjective> objective;
    Rational epsilon{1, 1000};
    //! Maximal number of branch-and-bound nodes per call.
    std::size_t node_limit = 10000;

    Domain domain(std::string const &var) const;
    std::set<std::string> variables() const;
};

enum class LpStatus { sat, unsat, unbounded };

struct LpResult {
    LpStatus status = LpStatus::unsat;
    //! Satisfying (and for optimize() optimal) values of all variables.
    Valuation witness;
    //! Objective value; only set by optimize().
    Rational value;
};

//! Exact feasibility check; integer variables are handled by branch and
//! bound, throwing LimitError once `node_limit` is exceeded.
LpResult check_sat(LpProblem const &problem);
//! Optimizes the objective; status `sat` means an optimum was found.
LpResult optimize(LpProblem const &problem);
//! Indices of an irreducible inconsistent subset of the constraints; bounds
//! are always kept. Throws std::invalid_argument if the problem is satisfiable.
std::vector<std::size_t> iis(LpProblem const &problem);

} // namespace lcasp
