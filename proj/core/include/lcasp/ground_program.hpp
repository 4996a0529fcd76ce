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
#include <lcasp/syntax.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lcasp {

using AtomId = std::uint32_t;

struct Literal {
    AtomId atom = 0;
    bool negated = false;
    bool operator==(Literal const &other) const = default;
};

//! Cardinality constraint `lower{elements}upper` over ground literals.
struct CardinalityAggregate {
    unsigned lower = 0;
    std::optional<unsigned> upper;
    std::vector<Literal> elements;
    bool operator==(CardinalityAggregate const &other) const = default;
};

enum class HeadType { normal, choice, integrity };

struct GroundRule {
    HeadType type = HeadType::normal;
    std::vector<AtomId> head;
    //! Choice bounds; `lower` is 0 and `upper` empty for unbounded choices.
    unsigned lower = 0;
    std::optional<unsigned> upper;
    std::vector<Literal> body;
    std::vector<CardinalityAggregate> aggregates;
    bool operator==(GroundRule const &other) const = default;

    static GroundRule fact(AtomId atom);
    static GroundRule normal(AtomId head, std::vector<Literal> body);
    static GroundRule choice(std::vector<AtomId> head, std::vector<Literal> body = {});
    static GroundRule integrity(std::vector<Literal> body);
};

//! Summand `coefficient * variable`; a constant when `variable` is empty.
//! The summand only contributes if every literal of `condition` holds.
struct LinearTerm {
    Rational coefficient;
    std::string variable;
    std::vector<Literal> condition;
    bool operator==(LinearTerm const &other) const = default;
};

//! Linear constraint `sum(terms) relation rhs` carried by an lc-atom.
struct TheoryAtom {
    syntax::LcKind kind = syntax::LcKind::sum;
    std::vector<LinearTerm> terms;
    Relation relation = Relation::le;
    Rational rhs;

    bool conditional() const;
    bool operator==(TheoryAtom const &other) const = default;
};

struct AtomInfo {
    std::string name;
    std::string predicate;
    unsigned arity = 0;
    std::optional<TheoryAtom> theory;
};

struct DomBound {
    std::string variable;
    Rational lower;
    Rational upper;
};

struct Objective {
    bool maximize = false;
    std::vector<LinearTerm> terms;
};

class GroundProgram {
public:
    //! Returns the existing id if an atom with this name is present.
    AtomId add_atom(std::string const &name, std::string predicate = {}, unsigned arity = 0);
    AtomId add_theory_atom(std::string const &name, TheoryAtom atom);
    std::optional<AtomId> find(std::string_view name) const;

    std::size_t num_atoms() const { return atoms_.size(); }
    AtomInfo const &atom(AtomId id) const { return atoms_[id]; }
    std::string const &name(AtomId id) const { return atoms_[id].name; }
    bool is_theory(AtomId id) const { return atoms_[id].theory.has_value(); }
    //! Lc-atoms in id order.
    std::vector<AtomId> theory_atoms() const;
    //! True iff the atom occurs in the head of some rule.
    bool in_head(AtomId id) const;

    void add_rule(GroundRule rule);
    std::vector<GroundRule> const &rules() const { return rules_; }

    //! Declared `#external` atoms and their current truth value.
    std::map<AtomId, bool> externals;
    std::vector<DomBound> domains;
    std::vector<Objective> objectives;
    std::vector<std::pair<std::string, unsigned>> shows;
    //! Theory variables declared real; all others are integers.
    std::map<std::string, bool> variable_domains;

    bool is_real(std::string const &variable) const;
    bool any_real() const;
    //! Copy with the same atoms and metadata but without rules.
    GroundProgram empty_copy() const;
    //! Copy in which externals are replaced by facts (true) or nothing (false).
    GroundProgram with_externals() const;
    //! True iff `show` directives are present and the atom is not covered by one.
    bool hidden(AtomId id) const;

private:
    std::vector<AtomInfo> atoms_;
    std::unordered_map<std::string, AtomId> index_;
    std::vector<GroundRule> rules_;
    std::vector<bool> in_head_;
};

std::string to_string(GroundProgram const &prg, GroundRule const &rule);
//! Ground program as re-parseable text, one rule per line.
std::string print_ground(GroundProgram const &prg);

} // namespace lcasp
