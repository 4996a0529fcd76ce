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
#include <lcasp/ground_program.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lcasp {

using Interpretation = std::set<AtomId>;
using Deadline = std::optional<std::chrono::steady_clock::time_point>;

//! Reduct of `prg` relative to `x`: negation-free, choice heads restricted to
//! `x`, aggregate lower bounds lowered by satisfied negative elements.
GroundProgram reduct(GroundProgram const &prg, Interpretation const &x);
//! Least model of a negation-free program; integrity constraints are ignored.
Interpretation least_model(GroundProgram const &prg);
//! True iff `x` classically satisfies every rule, constraint and bound.
bool satisfies(GroundProgram const &prg, Interpretation const &x);
bool is_stable_model(GroundProgram const &prg, Interpretation const &x);

//! Sorted names of the atoms in `x`.
std::vector<std::string> atom_names(GroundProgram const &prg, Interpretation const &x);
//! Orders models lexicographically by their sorted atom names.
void sort_models(GroundProgram const &prg, std::vector<Interpretation> &models);

enum class Value : std::uint8_t { unknown, true_, false_ };

class Assignment {
public:
    explicit Assignment(std::size_t size = 0)
        : values_(size, Value::unknown)
        , levels_(size, 0) {}

    std::size_t size() const { return values_.size(); }
    Value value(AtomId atom) const { return values_[atom]; }
    bool is_true(AtomId atom) const { return values_[atom] == Value::true_; }
    bool is_false(AtomId atom) const { return values_[atom] == Value::false_; }
    bool assigned(AtomId atom) const { return values_[atom] != Value::unknown; }
    //! Decision level at which an assigned atom received its value.
    unsigned level(AtomId atom) const { return levels_[atom]; }
    unsigned decision_level() const { return level_; }
    bool total() const { return trail_.size() == values_.size(); }
    std::vector<AtomId> const &trail() const { return trail_; }

private:
    friend class Solver;

    std::vector<Value> values_;
    std::vector<unsigned> levels_;
    std::vector<AtomId> trail_;
    unsigned level_ = 0;
};

//! Consulted by the solver after every propagation fixpoint.
class TheoryHook {
public:
    virtual ~TheoryHook() = default;
    //! Returns a set of assigned atoms whose values are jointly inconsistent
    //! with the theory, or nothing if no inconsistency was found.
    virtual std::optional<std::vector<AtomId>> check(Assignment const &assignment, bool total) = 0;
    //! Discards everything derived at decision levels above `level`.
    virtual void undo(unsigned level) = 0;
};

//! Backtracking search with propagation over rule completion and a stability
//! check on total assignments. Branches on the lowest unassigned atom, false first.
class Solver {
public:
    explicit Solver(GroundProgram const &prg, TheoryHook *hook = nullptr);

    void set_deadline(Deadline deadline) { deadline_ = deadline; }
    //! Calls `on_model` for each stable model; stops early if it returns false.
    void solve(std::function<bool(Interpretation const &)> const &on_model);

private:
    bool assign(AtomId atom, bool value);
    bool propagate();
    Value body_value(GroundRule const &rule) const;
    bool falsify_body(GroundRule const &rule);
    bool backtrack(unsigned level);
    void undo_to(unsigned level);
    Interpretation true_atoms() const;

    struct Decision {
        AtomId atom;
        bool flipped;
    };

    GroundProgram prg_;
    TheoryHook *hook_;
    Deadline deadline_;
    Assignment assignment_;
    std::vector<Decision> decisions_;
    std::vector<std::vector<std::size_t>> supports_;
};

struct EnumerateOptions {
    //! Maximal number of models; 0 means all.
    std::size_t limit = 0;
    //! Check every subset of the atom table instead of searching.
    bool exhaustive = false;
    std::size_t atom_cap = 20;
    Deadline deadline;
};

//! Stable models of `prg` (externals taken at their current values), sorted.
std::vector<Interpretation> enumerate_stable_models(GroundProgram const &prg, EnumerateOptions const &opts = {});

} // namespace lcasp
