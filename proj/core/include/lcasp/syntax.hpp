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

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lcasp::syntax {

// {{{1 terms

struct Term {
    enum class Kind { integer, string, symbol, function, variable, unary_minus, binary };

    Kind kind = Kind::integer;
    //! Identifier, variable name, string contents, or operator (`+ - * /`).
    std::string name;
    Integer value;
    std::vector<Term> args;

    static Term integer(Integer value);
    static Term string(std::string text);
    static Term symbol(std::string name);
    static Term function(std::string name, std::vector<Term> args);
    static Term variable(std::string name);
    static Term negate(Term arg);
    static Term binary(char op, Term lhs, Term rhs);

    bool is_ground() const;
    bool operator==(Term const &other) const;
};

std::string to_string(Term const &term);
void collect_variables(Term const &term, std::set<std::string> &out);

// {{{1 atoms and literals

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool is_ground() const;
    bool operator==(Atom const &other) const = default;
};

struct AtomLiteral {
    bool negated = false;
    Atom atom;
    bool operator==(AtomLiteral const &other) const = default;
};

struct Comparison {
    Relation relation = Relation::eq;
    Term lhs;
    Term rhs;
    bool operator==(Comparison const &other) const = default;
};

//! Literals admissible inside conditions.
using ConditionLiteral = std::variant<AtomLiteral, Comparison>;
using Condition = std::vector<ConditionLiteral>;

enum class LcKind { sum, diff, dom, minimize, maximize };
char const *to_string(LcKind kind);

//! Element of an lc-atom; the product of `factors` is `coefficient * variable`
//! once ground. An element without symbolic factor is a constant summand.
struct LcElement {
    std::vector<Term> factors;
    Condition condition;
    bool operator==(LcElement const &other) const = default;
};

//! Linear constraint atom. For `diff` the two elements are the minuend and the
//! subtrahend. For `dom` the only element names the variable and `lower`/`upper`
//! hold the bounds. Objectives carry neither relation nor right-hand side.
struct LcAtom {
    LcKind kind = LcKind::sum;
    std::vector<LcElement> elements;
    Relation relation = Relation::le;
    Term rhs;
    Term lower;
    Term upper;

    bool is_objective() const { return kind == LcKind::minimize || kind == LcKind::maximize; }
    bool has_relation() const { return kind == LcKind::sum || kind == LcKind::diff; }
    bool operator==(LcAtom const &other) const = default;
};

//! Canonical form; two lc-atoms are the same atom iff these strings are equal.
std::string to_string(LcAtom const &atom);
std::string to_string(Atom const &atom);

struct LcLiteral {
    bool negated = false;
    LcAtom atom;
    bool operator==(LcLiteral const &other) const = default;
};

struct AggregateElement {
    AtomLiteral literal;
    Condition condition;
    bool operator==(AggregateElement const &other) const = default;
};

//! Cardinality aggregate `s{...}t`; also used for choice heads.
struct Aggregate {
    std::optional<Term> lower;
    std::optional<Term> upper;
    std::vector<AggregateElement> elements;
    bool operator==(Aggregate const &other) const = default;
};

using BodyLiteral = std::variant<AtomLiteral, LcLiteral, Comparison, Aggregate>;

//! `std::monostate` marks an integrity constraint.
using Head = std::variant<std::monostate, Atom, LcAtom, Aggregate>;

struct Rule {
    Head head;
    std::vector<BodyLiteral> body;
    bool operator==(Rule const &other) const = default;
};

// {{{1 directives and programs

struct ProgramDirective {
    std::string name;
    std::vector<std::string> params;
    bool operator==(ProgramDirective const &other) const = default;
};

struct ExternalDirective {
    Atom atom;
    std::vector<BodyLiteral> body;
    bool operator==(ExternalDirective const &other) const = default;
};

struct ShowDirective {
    std::string predicate;
    unsigned arity = 0;
    bool operator==(ShowDirective const &other) const = default;
};

//! `#real x, y.` or `#integer x.`; theory variables default to integers.
struct DomainDirective {
    bool real = true;
    std::vector<Term> variables;
    bool operator==(DomainDirective const &other) const = default;
};

using Statement = std::variant<Rule, ProgramDirective, ExternalDirective, ShowDirective, DomainDirective>;

struct Part {
    std::string name;
    std::vector<std::string> params;
};

class Program {
public:
    std::vector<Statement> statements;

    //! Statements of the named part; statements before the first `#program`
    //! directive belong to `base`.
    std::vector<Statement> part(std::string_view name) const;
    //! Parts in order of first declaration; `base` is always present.
    std::vector<Part> parts() const;
    std::vector<Rule> rules() const;

    bool operator==(Program const &other) const = default;
};

std::string to_string(Rule const &rule);
std::string to_string(BodyLiteral const &lit);
std::string to_string(Statement const &stm);
//! Canonical text, one statement per line.
std::string print_program(Program const &prg);

// {{{1 parsing

class ParseError : public std::runtime_error {
public:
    ParseError(unsigned line, unsigned column, std::string message, std::vector<std::string> expected = {});
    unsigned line() const { return line_; }
    unsigned column() const { return column_; }
    std::vector<std::string> const &expected() const { return expected_; }

private:
    unsigned line_;
    unsigned column_;
    std::vector<std::string> expected_;
};

Program parse_program(std::string_view text);
//! Parses a single (regular or lc) atom, e.g. for strictness policy files.
std::variant<Atom, LcAtom> parse_atom(std::string_view text);

} // namespace lcasp::syntax
