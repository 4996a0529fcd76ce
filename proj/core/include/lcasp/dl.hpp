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

#include <lcasp/rational.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcasp {

//! Difference constraint `x - y <= k`, or `x - y < k` if strict.
struct DiffConstraint {
    std::string x;
    std::string y;
    Rational k;
    bool strict = false;
    bool operator==(DiffConstraint const &other) const = default;
};

std::string to_string(DiffConstraint const &c);
bool satisfied(DiffConstraint const &c, std::map<std::string, Rational> const &values);

//! Non-strict constraint whose solutions are those violating `c`. Over the
//! reals a violated non-strict constraint is approximated with `epsilon`.
DiffConstraint negate(DiffConstraint const &c, Domain domain, Rational const &epsilon);

//! Name of the vertex that stands for the constant 0.
inline constexpr char const *zero_vertex = "0";

//! Incremental difference-logic store with backtracking. Constraints are edges
//! `y -> x` of weight `k`; a potential function certifies consistency.
class DlStore {
public:
    struct Result {
        bool sat = true;
        //! On failure, the constraints of a simple negative cycle.
        std::vector<DiffConstraint> conflict;
        //! Tags of the conflicting constraints as given on assertion.
        std::vector<std::size_t> tags;
    };

    //! Strict constraints over the reals are only accepted if `epsilon` is given.
    explicit DlStore(Domain domain = Domain::integer, std::optional<Rational> epsilon = std::nullopt);

    //! Adds `c` at decision level `level`. On failure the store is unchanged.
    Result assert_constraint(DiffConstraint const &c, unsigned level, std::size_t tag = 0);
    //! Removes all constraints asserted above `level`.
    void backtrack(unsigned level);

    unsigned level() const { return level_; }
    Domain domain() const { return domain_; }
    std::size_t size() const { return trail_.size(); }
    std::vector<DiffConstraint> constraints() const;
    //! Edge weight used for `c`, after integer rounding or epsilon shifting.
    Rational weight(DiffConstraint const &c) const;

    //! Satisfying assignment for all variables of asserted constraints. Each
    //! weakly connected component is shifted by the median of its shortest
    //! path potentials (the upper median for even sizes), or so that the
    //! zero vertex gets 0.
    std::map<std::string, Rational> witness() const;

private:
    struct Record {
        unsigned level;
        std::size_t from;
        std::size_t to;
        Rational weight;
        DiffConstraint constraint;
        std::size_t tag;
        std::vector<std::pair<std::size_t, Rational>> old_potential;
    };

    std::size_t vertex(std::string const &name);

    Domain domain_;
    std::optional<Rational> epsilon_;
    unsigned level_ = 0;
    std::map<std::string, std::size_t> index_;
    std::vector<std::string> names_;
    std::vector<Rational> potential_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<Record> trail_;
};

} // namespace lcasp
