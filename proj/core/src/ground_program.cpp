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
#include <lcasp/ground_program.hpp>

#include <sstream>

namespace lcasp {

GroundRule GroundRule::fact(AtomId atom) { return normal(atom, {}); }

GroundRule GroundRule::normal(AtomId head, std::vector<Literal> body) {
    GroundRule rule;
    rule.type = HeadType::normal;
    rule.head.push_back(head);
    rule.body = std::move(body);
    return rule;
}

GroundRule GroundRule::choice(std::vector<AtomId> head, std::vector<Literal> body) {
    GroundRule rule;
    rule.type = HeadType::choice;
    rule.head = std::move(head);
    rule.body = std::move(body);
    return rule;
}

GroundRule GroundRule::integrity(std::vector<Literal> body) {
    GroundRule rule;
    rule.type = HeadType::integrity;
    rule.body = std::move(body);
    return rule;
}

bool TheoryAtom::conditional() const {
    for (auto const &term : terms) {
        if (!term.condition.empty()) { return true; }
    }
    return false;
}

AtomId GroundProgram::add_atom(std::string const &name, std::string predicate, unsigned arity) {
    auto it = index_.find(name);
    if (it != index_.end()) { return it->second; }
    auto id = static_cast<AtomId>(atoms_.size());
    atoms_.push_back(AtomInfo{name, std::move(predicate), arity, std::nullopt});
    in_head_.push_back(false);
    index_.emplace(name, id);
    return id;
}

AtomId GroundProgram::add_theory_atom(std::string const &name, TheoryAtom atom) {
    AtomId id = add_atom(name);
    if (!atoms_[id].theory) { atoms_[id].theory = std::move(atom); }
    return id;
}

std::optional<AtomId> GroundProgram::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) { return std::nullopt; }
    return it->second;
}

std::vector<AtomId> GroundProgram::theory_atoms() const {
    std::vector<AtomId> res;
    for (AtomId id = 0; id < atoms_.size(); ++id) {
        if (atoms_[id].theory) { res.push_back(id); }
    }
    return res;
}

bool GroundProgram::in_head(AtomId id) const { return in_head_[id]; }

void GroundProgram::add_rule(GroundRule rule) {
    for (AtomId id : rule.head) { in_head_[id] = true; }
    rules_.push_back(std::move(rule));
}

bool GroundProgram::is_real(std::string const &variable) const {
    auto it = variable_domains.find(variable);
    return it != variable_domains.end() && it->second;
}

bool GroundProgram::any_real() const {
    for (auto const &[var, real] : variable_domains) {
        if (real) { return true; }
    }
    return false;
}

GroundProgram GroundProgram::empty_copy() const {
    GroundProgram res = *this;
    res.rules_.clear();
    res.in_head_.assign(atoms_.size(), false);
    return res;
}

GroundProgram GroundProgram::with_externals() const {
    GroundProgram res = *this;
    res.externals.clear();
    for (auto const &[atom, value] : externals) {
        if (value) { res.add_rule(GroundRule::fact(atom)); }
    }
    return res;
}

bool GroundProgram::hidden(AtomId id) const {
    if (shows.empty()) { return false; }
    auto const &info = atoms_[id];
    if (info.theory) { return true; }
    for (auto const &[pred, arity] : shows) {
        if (pred == info.predicate && arity == info.arity) { return false; }
    }
    return true;
}

namespace {

void print_literal(std::ostream &out, GroundProgram const &prg, Literal lit) {
    if (lit.negated) { out << "not "; }
    out << prg.name(lit.atom);
}

void print_coefficient(std::ostream &out, LinearTerm const &term) {
    if (term.variable.empty()) {
        out << to_text(term.coefficient);
        return;
    }
    if (term.coefficient != 1) { out << to_text(term.coefficient) << "*"; }
    out << term.variable;
}

} // namespace

std::string to_string(GroundProgram const &prg, GroundRule const &rule) {
    std::ostringstream out;
    switch (rule.type) {
        case HeadType::normal: out << prg.name(rule.head.front()); break;
        case HeadType::choice: {
            if (rule.lower > 0) { out << rule.lower; }
            out << "{";
            char const *sep = "";
            for (AtomId id : rule.head) {
                out << sep << prg.name(id);
                sep = "; ";
            }
            out << "}";
            if (rule.upper) { out << *rule.upper; }
            break;
        }
        case HeadType::integrity: break;
    }
    if (!rule.body.empty() || !rule.aggregates.empty()) {
        out << (rule.type == HeadType::integrity ? ":- " : " :- ");
        char const *sep = "";
        for (auto const &lit : rule.body) {
            out << sep;
            print_literal(out, prg, lit);
            sep = "; ";
        }
        for (auto const &agg : rule.aggregates) {
            out << sep;
            if (agg.lower > 0) { out << agg.lower; }
            out << "{";
            char const *esep = "";
            for (auto const &lit : agg.elements) {
                out << esep;
                print_literal(out, prg, lit);
                esep = "; ";
            }
            out << "}";
            if (agg.upper) { out << *agg.upper; }
            sep = "; ";
        }
    }
    else if (rule.type == HeadType::integrity) {
        // An empty integrity constraint has no textual form; use a contradiction.
        out << ":- 0 = 0";
    }
    out << ".";
    return out.str();
}

std::string print_ground(GroundProgram const &prg) {
    std::ostringstream out;
    for (auto const &[var, real] : prg.variable_domains) {
        out << (real ? "#real " : "#integer ") << var << ".\n";
    }
    for (auto const &[atom, value] : prg.externals) { out << "#external " << prg.name(atom) << ".\n"; }
    for (auto const &rule : prg.rules()) { out << to_string(prg, rule) << "\n"; }
    for (auto const &dom : prg.domains) {
        out << "&dom{" << to_text(dom.lower) << ".." << to_text(dom.upper) << "}=" << dom.variable << ".\n";
    }
    for (auto const &obj : prg.objectives) {
        out << (obj.maximize ? "&maximize{" : "&minimize{");
        char const *sep = "";
        for (auto const &term : obj.terms) {
            out << sep;
            print_coefficient(out, term);
            sep = "; ";
        }
        out << "}.\n";
    }
    for (auto const &[pred, arity] : prg.shows) { out << "#show " << pred << "/" << arity << ".\n"; }
    return out.str();
}

} // namespace lcasp
