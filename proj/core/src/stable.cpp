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
#include <lcasp/stable.hpp>

#include <algorithm>

namespace lcasp {

namespace {

bool literal_holds(Literal lit, Interpretation const &x) { return (x.count(lit.atom) > 0) != lit.negated; }

std::size_t count_true(CardinalityAggregate const &agg, Interpretation const &x) {
    return static_cast<std::size_t>(
        std::count_if(agg.elements.begin(), agg.elements.end(), [&](Literal lit) { return literal_holds(lit, x); }));
}

bool body_holds(GroundRule const &rule, Interpretation const &x) {
    for (auto lit : rule.body) {
        if (!literal_holds(lit, x)) { return false; }
    }
    for (auto const &agg : rule.aggregates) {
        auto n = count_true(agg, x);
        if (n < agg.lower || (agg.upper && n > *agg.upper)) { return false; }
    }
    return true;
}

} // namespace

// {{{1 reduct and stability

GroundProgram reduct(GroundProgram const &prg, Interpretation const &x) {
    GroundProgram res = prg.empty_copy();
    for (auto const &rule : prg.rules()) {
        bool removed = std::any_of(rule.body.begin(), rule.body.end(),
                                   [&](Literal lit) { return lit.negated && x.count(lit.atom) > 0; });
        std::vector<CardinalityAggregate> aggregates;
        for (auto const &agg : rule.aggregates) {
            if (agg.upper && count_true(agg, x) > *agg.upper) { removed = true; }
            CardinalityAggregate red;
            unsigned satisfied = 0;
            for (auto lit : agg.elements) {
                if (!lit.negated) { red.elements.push_back(lit); }
                else if (!x.count(lit.atom)) { ++satisfied; }
            }
            red.lower = agg.lower > satisfied ? agg.lower - satisfied : 0;
            aggregates.push_back(std::move(red));
        }
        if (removed) { continue; }
        std::vector<Literal> body;
        std::copy_if(rule.body.begin(), rule.body.end(), std::back_inserter(body),
                     [](Literal lit) { return !lit.negated; });
        auto make = [&](HeadType type, std::vector<AtomId> head) {
            GroundRule red;
            red.type = type;
            red.head = std::move(head);
            red.body = body;
            red.aggregates = aggregates;
            res.add_rule(std::move(red));
        };
        switch (rule.type) {
            case HeadType::normal: make(HeadType::normal, rule.head); break;
            case HeadType::integrity: make(HeadType::integrity, {}); break;
            case HeadType::choice:
                for (AtomId atom : rule.head) {
                    if (x.count(atom)) { make(HeadType::normal, {atom}); }
                }
                break;
        }
    }
    return res;
}

Interpretation least_model(GroundProgram const &prg) {
    Interpretation model;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto const &rule : prg.rules()) {
            if (rule.type != HeadType::normal || model.count(rule.head.front())) { continue; }
            bool fires = std::all_of(rule.body.begin(), rule.body.end(),
                                     [&](Literal lit) { return lit.negated || model.count(lit.atom) > 0; });
            for (auto const &agg : rule.aggregates) {
                auto n = std::count_if(agg.elements.begin(), agg.elements.end(),
                                       [&](Literal lit) { return !lit.negated && model.count(lit.atom) > 0; });
                fires = fires && static_cast<std::size_t>(n) >= agg.lower;
            }
            if (fires) {
                model.insert(rule.head.front());
                changed = true;
            }
        }
    }
    return model;
}

bool satisfies(GroundProgram const &prg, Interpretation const &x) {
    for (auto const &rule : prg.rules()) {
        if (!body_holds(rule, x)) { continue; }
        switch (rule.type) {
            case HeadType::normal:
                if (!x.count(rule.head.front())) { return false; }
                break;
            case HeadType::integrity: return false;
            case HeadType::choice: {
                auto n = static_cast<std::size_t>(
                    std::count_if(rule.head.begin(), rule.head.end(), [&](AtomId a) { return x.count(a) > 0; }));
                if (n < rule.lower || (rule.upper && n > *rule.upper)) { return false; }
                break;
            }
        }
    }
    return true;
}

bool is_stable_model(GroundProgram const &prg, Interpretation const &x) {
    return satisfies(prg, x) && least_model(reduct(prg, x)) == x;
}

std::vector<std::string> atom_names(GroundProgram const &prg, Interpretation const &x) {
    std::vector<std::string> names;
    for (AtomId atom : x) { names.push_back(prg.name(atom)); }
    std::sort(names.begin(), names.end());
    return names;
}

void sort_models(GroundProgram const &prg, std::vector<Interpretation> &models) {
    std::vector<std::pair<std::vector<std::string>, Interpretation>> keyed;
    for (auto &model : models) { keyed.emplace_back(atom_names(prg, model), std::move(model)); }
    std::sort(keyed.begin(), keyed.end(), [](auto const &a, auto const &b) { return a.first < b.first; });
    models.clear();
    for (auto &entry : keyed) { models.push_back(std::move(entry.second)); }
}

// {{{1 search

Solver::Solver(GroundProgram const &prg, TheoryHook *hook)
    : prg_(prg.externals.empty() ? prg : prg.with_externals())
    , hook_(hook)
    , assignment_(prg_.num_atoms())
    , supports_(prg_.num_atoms()) {
    for (std::size_t i = 0; i < prg_.rules().size(); ++i) {
        for (AtomId atom : prg_.rules()[i].head) { supports_[atom].push_back(i); }
    }
}

bool Solver::assign(AtomId atom, bool value) {
    Value val = value ? Value::true_ : Value::false_;
    if (assignment_.values_[atom] != Value::unknown) { return assignment_.values_[atom] == val; }
    assignment_.values_[atom] = val;
    assignment_.levels_[atom] = assignment_.level_;
    assignment_.trail_.push_back(atom);
    return true;
}

Value Solver::body_value(GroundRule const &rule) const {
    bool unknown = false;
    for (auto lit : rule.body) {
        Value v = assignment_.value(lit.atom);
        if (v == Value::unknown) { unknown = true; }
        else if ((v == Value::true_) == lit.negated) { return Value::false_; }
    }
    for (auto const &agg : rule.aggregates) {
        std::size_t t = 0;
        std::size_t p = 0;
        for (auto lit : agg.elements) {
            Value v = assignment_.value(lit.atom);
            if (v == Value::unknown) { ++p; }
            else if ((v == Value::true_) != lit.negated) {
                ++t;
                ++p;
            }
        }
        if (p < agg.lower || (agg.upper && t > *agg.upper)) { return Value::false_; }
        if (t < agg.lower || (agg.upper && p > *agg.upper)) { unknown = true; }
    }
    return unknown ? Value::unknown : Value::true_;
}

bool Solver::falsify_body(GroundRule const &rule) {
    // Only called on bodies that are not false; a single open literal with
    // everything else true must be made false.
    std::optional<Literal> open;
    for (auto lit : rule.body) {
        if (assignment_.value(lit.atom) == Value::unknown) {
            if (open) { return true; }
            open = lit;
        }
    }
    if (!open) { return true; }
    for (auto const &agg : rule.aggregates) {
        std::size_t t = 0;
        std::size_t p = 0;
        for (auto lit : agg.elements) {
            Value v = assignment_.value(lit.atom);
            if (v == Value::unknown) { ++p; }
            else if ((v == Value::true_) != lit.negated) {
                ++t;
                ++p;
            }
        }
        if (t < agg.lower || (agg.upper && p > *agg.upper)) { return true; }
    }
    return assign(open->atom, open->negated);
}

bool Solver::propagate() {
    auto const &rules = prg_.rules();
    for (std::size_t before = ~std::size_t(0); before != assignment_.trail_.size();) {
        before = assignment_.trail_.size();
        for (auto const &rule : rules) {
            Value body = body_value(rule);
            if (body == Value::false_) { continue; }
            switch (rule.type) {
                case HeadType::normal:
                    if (body == Value::true_) {
                        if (!assign(rule.head.front(), true)) { return false; }
                    }
                    else if (assignment_.is_false(rule.head.front()) && !falsify_body(rule)) {
                        return false;
                    }
                    break;
                case HeadType::integrity:
                    if (body == Value::true_) { return false; }
                    if (!falsify_body(rule)) { return false; }
                    break;
                case HeadType::choice: {
                    std::size_t t = 0;
                    std::size_t p = 0;
                    for (AtomId atom : rule.head) {
                        if (assignment_.is_true(atom)) { ++t; }
                        if (!assignment_.is_false(atom)) { ++p; }
                    }
                    bool violated = (rule.upper && t > *rule.upper) || p < rule.lower;
                    if (body == Value::unknown) {
                        if (violated && !falsify_body(rule)) { return false; }
                        break;
                    }
                    if (violated) { return false; }
                    if (rule.upper && t == *rule.upper) {
                        for (AtomId atom : rule.head) {
                            if (!assignment_.assigned(atom)) { assign(atom, false); }
                        }
                    }
                    if (p == rule.lower) {
                        for (AtomId atom : rule.head) {
                            if (!assignment_.assigned(atom)) { assign(atom, true); }
                        }
                    }
                    break;
                }
            }
        }
        for (AtomId atom = 0; atom < assignment_.size(); ++atom) {
            if (assignment_.is_false(atom)) { continue; }
            std::size_t count = 0;
            GroundRule const *support = nullptr;
            for (auto idx : supports_[atom]) {
                if (body_value(rules[idx]) != Value::false_) {
                    ++count;
                    support = &rules[idx];
                }
            }
            if (count == 0) {
                if (!assign(atom, false)) { return false; }
            }
            else if (count == 1 && assignment_.is_true(atom)) {
                for (auto lit : support->body) {
                    if (!assign(lit.atom, !lit.negated)) { return false; }
                }
            }
        }
    }
    return true;
}

void Solver::undo_to(unsigned level) {
    auto &trail = assignment_.trail_;
    while (!trail.empty() && assignment_.levels_[trail.back()] > level) {
        assignment_.values_[trail.back()] = Value::unknown;
        trail.pop_back();
    }
    assignment_.level_ = level;
}

bool Solver::backtrack(unsigned level) {
    while (decisions_.size() > level) { decisions_.pop_back(); }
    while (!decisions_.empty() && decisions_.back().flipped) { decisions_.pop_back(); }
    if (decisions_.empty()) { return false; }
    auto level_of_flip = static_cast<unsigned>(decisions_.size());
    undo_to(level_of_flip - 1);
    if (hook_ != nullptr) { hook_->undo(level_of_flip - 1); }
    decisions_.back().flipped = true;
    assignment_.level_ = level_of_flip;
    assign(decisions_.back().atom, true);
    return true;
}

Interpretation Solver::true_atoms() const {
    Interpretation x;
    for (AtomId atom = 0; atom < assignment_.size(); ++atom) {
        if (assignment_.is_true(atom)) { x.insert(atom); }
    }
    return x;
}

void Solver::solve(std::function<bool(Interpretation const &)> const &on_model) {
    assignment_ = Assignment(prg_.num_atoms());
    decisions_.clear();
    if (hook_ != nullptr) { hook_->undo(0); }
    while (true) {
        if (deadline_ && std::chrono::steady_clock::now() > *deadline_) { throw TimeoutError(); }
        bool conflict = !propagate();
        unsigned jump = assignment_.level_;
        if (!conflict && hook_ != nullptr) {
            if (auto atoms = hook_->check(assignment_, assignment_.total())) {
                conflict = true;
                jump = 0;
                for (AtomId atom : *atoms) { jump = std::max(jump, assignment_.level(atom)); }
            }
        }
        if (!conflict) {
            if (assignment_.total()) {
                Interpretation x = true_atoms();
                if (is_stable_model(prg_, x) && !on_model(x)) { return; }
            }
            else {
                AtomId atom = 0;
                while (assignment_.assigned(atom)) { ++atom; }
                decisions_.push_back(Decision{atom, false});
                assignment_.level_ = static_cast<unsigned>(decisions_.size());
                assign(atom, false);
                continue;
            }
        }
        if (!backtrack(jump)) { return; }
    }
}

std::vector<Interpretation> enumerate_stable_models(GroundProgram const &prg, EnumerateOptions const &opts) {
    std::vector<Interpretation> models;
    if (opts.exhaustive) {
        GroundProgram full = prg.externals.empty() ? prg : prg.with_externals();
        std::size_t n = full.num_atoms();
        if (n > opts.atom_cap) {
            throw LimitError("exhaustive enumeration is limited to " + std::to_string(opts.atom_cap) + " atoms");
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) { throw TimeoutError(); }
            Interpretation x;
            for (AtomId atom = 0; atom < n; ++atom) {
                if (mask >> atom & 1U) { x.insert(atom); }
            }
            if (is_stable_model(full, x)) {
                models.push_back(std::move(x));
                if (opts.limit != 0 && models.size() >= opts.limit) { break; }
            }
        }
    }
    else {
        Solver solver(prg);
        solver.set_deadline(opts.deadline);
        solver.solve([&](Interpretation const &x) {
            models.push_back(x);
            return opts.limit == 0 || models.size() < opts.limit;
        });
    }
    sort_models(prg, models);
    return models;
}

} // namespace lcasp
