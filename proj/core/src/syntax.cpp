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
#include <lcasp/syntax.hpp>

#include <sstream>

namespace lcasp::syntax {

// {{{1 terms

Term Term::integer(Integer value) {
    Term t;
    t.kind = Kind::integer;
    t.value = std::move(value);
    return t;
}

Term Term::string(std::string text) {
    Term t;
    t.kind = Kind::string;
    t.name = std::move(text);
    return t;
}

Term Term::symbol(std::string name) {
    Term t;
    t.kind = Kind::symbol;
    t.name = std::move(name);
    return t;
}

Term Term::function(std::string name, std::vector<Term> args) {
    if (args.empty()) { return symbol(std::move(name)); }
    Term t;
    t.kind = Kind::function;
    t.name = std::move(name);
    t.args = std::move(args);
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind = Kind::variable;
    t.name = std::move(name);
    return t;
}

Term Term::negate(Term arg) {
    Term t;
    t.kind = Kind::unary_minus;
    t.args.push_back(std::move(arg));
    return t;
}

Term Term::binary(char op, Term lhs, Term rhs) {
    Term t;
    t.kind = Kind::binary;
    t.name = std::string(1, op);
    t.args.push_back(std::move(lhs));
    t.args.push_back(std::move(rhs));
    return t;
}

bool Term::is_ground() const {
    if (kind == Kind::variable) { return false; }
    for (auto const &arg : args) {
        if (!arg.is_ground()) { return false; }
    }
    return true;
}

bool Term::operator==(Term const &other) const {
    return kind == other.kind && name == other.name && value == other.value && args == other.args;
}

namespace {

int precedence(Term const &term) {
    if (term.kind == Term::Kind::binary) { return term.name == "+" || term.name == "-" ? 1 : 2; }
    if (term.kind == Term::Kind::unary_minus) { return 3; }
    return 4;
}

void print(std::ostream &out, Term const &term);

void print_parens(std::ostream &out, Term const &term, bool parens) {
    if (parens) { out << "("; }
    print(out, term);
    if (parens) { out << ")"; }
}

void print_string(std::ostream &out, std::string const &text) {
    out << '"';
    for (char c : text) {
        switch (c) {
            case '"': out << "\\\""; break;
            case '\\': out << "\\\\"; break;
            case '\n': out << "\\n"; break;
            default: out << c; break;
        }
    }
    out << '"';
}

void print(std::ostream &out, Term const &term) {
    switch (term.kind) {
        case Term::Kind::integer: out << term.value.get_str(); break;
        case Term::Kind::string: print_string(out, term.name); break;
        case Term::Kind::symbol:
        case Term::Kind::variable: out << term.name; break;
        case Term::Kind::function: {
            out << term.name << "(";
            bool sep = false;
            for (auto const &arg : term.args) {
                if (sep) { out << ","; }
                sep = true;
                print(out, arg);
            }
            out << ")";
            break;
        }
        case Term::Kind::unary_minus:
            out << "-";
            print_parens(out, term.args[0], precedence(term.args[0]) < 3 || term.args[0].kind == Term::Kind::integer);
            break;
        case Term::Kind::binary: {
            int prec = precedence(term);
            print_parens(out, term.args[0], precedence(term.args[0]) < prec);
            out << term.name;
            print_parens(out, term.args[1], precedence(term.args[1]) <= prec);
            break;
        }
    }
}

void print(std::ostream &out, Atom const &atom) {
    out << atom.predicate;
    if (!atom.args.empty()) {
        out << "(";
        bool sep = false;
        for (auto const &arg : atom.args) {
            if (sep) { out << ","; }
            sep = true;
            print(out, arg);
        }
        out << ")";
    }
}

void print(std::ostream &out, AtomLiteral const &lit) {
    if (lit.negated) { out << "not "; }
    print(out, lit.atom);
}

void print(std::ostream &out, Comparison const &cmp) {
    print(out, cmp.lhs);
    out << to_string(cmp.relation);
    print(out, cmp.rhs);
}

void print(std::ostream &out, Condition const &cond) {
    bool sep = false;
    for (auto const &lit : cond) {
        if (sep) { out << ","; }
        sep = true;
        std::visit([&](auto const &x) { print(out, x); }, lit);
    }
}

void print(std::ostream &out, LcElement const &elem) {
    bool sep = false;
    for (auto const &factor : elem.factors) {
        if (sep) { out << "*"; }
        sep = true;
        print_parens(out, factor, factor.kind == Term::Kind::binary);
    }
    if (!elem.condition.empty()) {
        out << ":";
        print(out, elem.condition);
    }
}

void print(std::ostream &out, LcAtom const &atom) {
    out << "&" << to_string(atom.kind) << "{";
    switch (atom.kind) {
        case LcKind::diff:
            print(out, atom.elements[0].factors[0]);
            out << "-";
            print_parens(out, atom.elements[1].factors[0], precedence(atom.elements[1].factors[0]) <= 1);
            break;
        case LcKind::dom:
            print(out, atom.lower);
            out << "..";
            print(out, atom.upper);
            break;
        default: {
            bool sep = false;
            for (auto const &elem : atom.elements) {
                if (sep) { out << ";"; }
                sep = true;
                print(out, elem);
            }
            break;
        }
    }
    out << "}";
    if (atom.kind == LcKind::dom) {
        out << "=";
        print(out, atom.elements[0].factors[0]);
    }
    else if (atom.has_relation()) {
        out << to_string(atom.relation);
        print(out, atom.rhs);
    }
}

void print(std::ostream &out, LcLiteral const &lit) {
    if (lit.negated) { out << "not "; }
    print(out, lit.atom);
}

void print(std::ostream &out, Aggregate const &agg) {
    if (agg.lower) { print(out, *agg.lower); }
    out << "{";
    bool sep = false;
    for (auto const &elem : agg.elements) {
        if (sep) { out << "; "; }
        sep = true;
        print(out, elem.literal);
        if (!elem.condition.empty()) {
            out << ":";
            print(out, elem.condition);
        }
    }
    out << "}";
    if (agg.upper) { print(out, *agg.upper); }
}

void print(std::ostream &out, BodyLiteral const &lit) {
    std::visit([&](auto const &x) { print(out, x); }, lit);
}

void print_body(std::ostream &out, std::vector<BodyLiteral> const &body) {
    bool sep = false;
    for (auto const &lit : body) {
        if (sep) { out << "; "; }
        sep = true;
        print(out, lit);
    }
}

void print(std::ostream &out, Rule const &rule) {
    bool has_head = true;
    std::visit(
        [&](auto const &head) {
            using T = std::decay_t<decltype(head)>;
            if constexpr (std::is_same_v<T, std::monostate>) { has_head = false; }
            else { print(out, head); }
        },
        rule.head);
    if (!has_head) {
        out << ":- ";
        print_body(out, rule.body);
    }
    else if (!rule.body.empty()) {
        out << " :- ";
        print_body(out, rule.body);
    }
    out << ".";
}

void print(std::ostream &out, Statement const &stm) {
    std::visit(
        [&](auto const &x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rule>) { print(out, x); }
            else if constexpr (std::is_same_v<T, ProgramDirective>) {
                out << "#program " << x.name;
                if (!x.params.empty()) {
                    out << "(";
                    for (std::size_t i = 0; i < x.params.size(); ++i) { out << (i > 0 ? "," : "") << x.params[i]; }
                    out << ")";
                }
                out << ".";
            }
            else if constexpr (std::is_same_v<T, ExternalDirective>) {
                out << "#external ";
                print(out, x.atom);
                if (!x.body.empty()) {
                    out << " : ";
                    print_body(out, x.body);
                }
                out << ".";
            }
            else if constexpr (std::is_same_v<T, ShowDirective>) {
                out << "#show " << x.predicate << "/" << x.arity << ".";
            }
            else {
                out << (x.real ? "#real " : "#integer ");
                for (std::size_t i = 0; i < x.variables.size(); ++i) {
                    if (i > 0) { out << ", "; }
                    print(out, x.variables[i]);
                }
                out << ".";
            }
        },
        stm);
}

template <class T>
std::string stringify(T const &x) {
    std::ostringstream out;
    print(out, x);
    return out.str();
}

} // namespace

std::string to_string(Term const &term) { return stringify(term); }
std::string to_string(Atom const &atom) { return stringify(atom); }
std::string to_string(LcAtom const &atom) { return stringify(atom); }
std::string to_string(Rule const &rule) { return stringify(rule); }
std::string to_string(BodyLiteral const &lit) { return stringify(lit); }
std::string to_string(Statement const &stm) { return stringify(stm); }

char const *to_string(LcKind kind) {
    switch (kind) {
        case LcKind::sum: return "sum";
        case LcKind::diff: return "diff";
        case LcKind::dom: return "dom";
        case LcKind::minimize: return "minimize";
        case LcKind::maximize: return "maximize";
    }
    return "?";
}

void collect_variables(Term const &term, std::set<std::string> &out) {
    if (term.kind == Term::Kind::variable) { out.insert(term.name); }
    for (auto const &arg : term.args) { collect_variables(arg, out); }
}

bool Atom::is_ground() const {
    for (auto const &arg : args) {
        if (!arg.is_ground()) { return false; }
    }
    return true;
}

// {{{1 programs

std::vector<Statement> Program::part(std::string_view name) const {
    std::vector<Statement> result;
    std::string current = "base";
    for (auto const &stm : statements) {
        if (auto const *dir = std::get_if<ProgramDirective>(&stm)) {
            current = dir->name;
            continue;
        }
        if (current == name) { result.push_back(stm); }
    }
    return result;
}

std::vector<Part> Program::parts() const {
    std::vector<Part> result{{"base", {}}};
    for (auto const &stm : statements) {
        if (auto const *dir = std::get_if<ProgramDirective>(&stm)) {
            bool seen = false;
            for (auto const &part : result) { seen = seen || part.name == dir->name; }
            if (!seen) { result.push_back({dir->name, dir->params}); }
        }
    }
    return result;
}

std::vector<Rule> Program::rules() const {
    std::vector<Rule> result;
    for (auto const &stm : statements) {
        if (auto const *rule = std::get_if<Rule>(&stm)) { result.push_back(*rule); }
    }
    return result;
}

std::string print_program(Program const &prg) {
    std::ostringstream out;
    for (auto const &stm : prg.statements) {
        print(out, stm);
        out << "\n";
    }
    return out.str();
}

ParseError::ParseError(unsigned line, unsigned column, std::string message, std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::ostringstream out;
        out << line << ":" << column << ": " << message;
        if (!expected.empty()) {
            out << " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                out << (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") << expected[i];
            }
            out << ")";
        }
        return out.str();
    }())
    , line_(line)
    , column_(column)
    , expected_(std::move(expected)) {}

} // namespace lcasp::syntax
