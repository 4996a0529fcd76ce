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
#include <lcasp/grounder.hpp>

#include <algorithm>

namespace lcasp {

using syntax::Aggregate;
using syntax::AtomLiteral;
using syntax::BodyLiteral;
using syntax::Comparison;
using syntax::Condition;
using syntax::ConditionLiteral;
using syntax::LcAtom;
using syntax::LcKind;
using syntax::Rule;
using syntax::Term;

namespace {

int rank(Term const &term) {
    switch (term.kind) {
        case Term::Kind::integer: return 0;
        case Term::Kind::string: return 2;
        default: return 1;
    }
}

int compare(Term const &a, Term const &b) {
    if (rank(a) != rank(b)) { return rank(a) < rank(b) ? -1 : 1; }
    if (a.kind == Term::Kind::integer) { return cmp(a.value, b.value) < 0 ? -1 : cmp(a.value, b.value) > 0 ? 1 : 0; }
    if (a.kind == Term::Kind::string) { return a.name.compare(b.name) < 0 ? -1 : a.name == b.name ? 0 : 1; }
    if (a.args.size() != b.args.size()) { return a.args.size() < b.args.size() ? -1 : 1; }
    if (a.name != b.name) { return a.name < b.name ? -1 : 1; }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (int c = compare(a.args[i], b.args[i]); c != 0) { return c; }
    }
    return 0;
}

bool compare_holds(Relation rel, Term const &lhs, Term const &rhs) {
    int c = compare(lhs, rhs);
    switch (rel) {
        case Relation::le: return c <= 0;
        case Relation::lt: return c < 0;
        case Relation::ge: return c >= 0;
        case Relation::gt: return c > 0;
        case Relation::eq: return c == 0;
        case Relation::ne: return c != 0;
    }
    return false;
}

void variables(syntax::Atom const &atom, std::set<std::string> &out) {
    for (auto const &arg : atom.args) { syntax::collect_variables(arg, out); }
}

void variables(Comparison const &cmp, std::set<std::string> &out) {
    syntax::collect_variables(cmp.lhs, out);
    syntax::collect_variables(cmp.rhs, out);
}

void variables(Condition const &cond, std::set<std::string> &out) {
    for (auto const &lit : cond) {
        if (auto const *atom = std::get_if<AtomLiteral>(&lit)) { variables(atom->atom, out); }
        else { variables(std::get<Comparison>(lit), out); }
    }
}

std::string rule_context(Rule const &rule) { return " in rule '" + syntax::to_string(rule) + "'"; }

} // namespace

// {{{1 instantiation of one statement

class Grounder::Instantiator {
public:
    Instantiator(Grounder &g, Binding const &params, std::string context)
        : g_(g)
        , params_(params)
        , context_(std::move(context)) {}

    // {{{2 terms

    std::optional<Term> eval(Term const &term, Binding const &b) const {
        switch (term.kind) {
            case Term::Kind::integer:
            case Term::Kind::string: return term;
            case Term::Kind::symbol: {
                auto it = params_.find(term.name);
                return it != params_.end() ? it->second : term;
            }
            case Term::Kind::variable: {
                auto it = b.find(term.name);
                if (it == b.end()) { return std::nullopt; }
                return it->second;
            }
            case Term::Kind::function: {
                std::vector<Term> args;
                for (auto const &arg : term.args) {
                    auto val = eval(arg, b);
                    if (!val) { return std::nullopt; }
                    args.push_back(std::move(*val));
                }
                return Term::function(term.name, std::move(args));
            }
            case Term::Kind::unary_minus: {
                auto val = eval(term.args[0], b);
                if (!val) { return std::nullopt; }
                if (val->kind != Term::Kind::integer) {
                    throw GroundError("cannot negate non-integer term '" + syntax::to_string(*val) + "'" + context_);
                }
                return Term::integer(-val->value);
            }
            case Term::Kind::binary: {
                auto lhs = eval(term.args[0], b);
                auto rhs = eval(term.args[1], b);
                if (!lhs || !rhs) { return std::nullopt; }
                return arithmetic(term.name[0], *lhs, *rhs);
            }
        }
        return std::nullopt;
    }

    Term arithmetic(char op, Term const &lhs, Term const &rhs) const {
        if (lhs.kind != Term::Kind::integer || rhs.kind != Term::Kind::integer) {
            throw GroundError("arithmetic on non-integer terms '" + syntax::to_string(lhs) + "' and '" +
                              syntax::to_string(rhs) + "'" + context_);
        }
        Integer res;
        switch (op) {
            case '+': res = lhs.value + rhs.value; break;
            case '-': res = lhs.value - rhs.value; break;
            case '*': res = lhs.value * rhs.value; break;
            default:
                if (rhs.value == 0) { throw GroundError("division by zero" + context_); }
                mpz_tdiv_q(res.get_mpz_t(), lhs.value.get_mpz_t(), rhs.value.get_mpz_t());
                break;
        }
        return Term::integer(res);
    }

    Term ground(Term const &term, Binding const &b) const {
        auto val = eval(term, b);
        if (!val) {
            std::set<std::string> vars;
            syntax::collect_variables(term, vars);
            throw GroundError("unsafe variable '" + (vars.empty() ? std::string("?") : *vars.begin()) + "'" + context_);
        }
        return *val;
    }

    syntax::Atom ground(syntax::Atom const &atom, Binding const &b) const {
        syntax::Atom res{atom.predicate, {}};
        for (auto const &arg : atom.args) { res.args.push_back(ground(arg, b)); }
        return res;
    }

    //! Evaluates a factor of an lc-atom element; symbolic factors stay
    //! symbolic and unary minus is kept on them.
    Term factor(Term const &term, Binding const &b) const {
        if (term.kind == Term::Kind::unary_minus) {
            Term arg = factor(term.args[0], b);
            if (arg.kind == Term::Kind::integer) { return Term::integer(-arg.value); }
            return Term::negate(std::move(arg));
        }
        if (term.kind == Term::Kind::binary) {
            Term lhs = ground(term.args[0], b);
            Term rhs = ground(term.args[1], b);
            return arithmetic(term.name[0], lhs, rhs);
        }
        return ground(term, b);
    }

    //! Splits an evaluated factor into a numeric value or a theory variable.
    std::variant<Rational, std::pair<Rational, std::string>> numeric(Term const &term) const {
        switch (term.kind) {
            case Term::Kind::integer: return Rational(term.value);
            case Term::Kind::string:
                try {
                    return parse_decimal(term.name);
                }
                catch (std::invalid_argument const &) {
                    throw GroundError("invalid numeric constant \"" + term.name + "\"" + context_);
                }
            case Term::Kind::unary_minus: {
                auto inner = numeric(term.args[0]);
                if (auto *num = std::get_if<Rational>(&inner)) { return Rational(-*num); }
                auto var = std::get<std::pair<Rational, std::string>>(inner);
                return std::pair{Rational(-var.first), var.second};
            }
            default: return std::pair{Rational(1), syntax::to_string(term)};
        }
    }

    Rational constant(Term const &term) const {
        auto val = numeric(term);
        if (auto *num = std::get_if<Rational>(&val)) { return *num; }
        throw GroundError("expected a numeric constant but found '" + syntax::to_string(term) + "'" + context_);
    }

    // {{{2 joins

    bool matchable(Term const &term, Binding const &b) const {
        switch (term.kind) {
            case Term::Kind::function:
                return std::all_of(term.args.begin(), term.args.end(), [&](Term const &arg) { return matchable(arg, b); });
            case Term::Kind::unary_minus:
            case Term::Kind::binary: return eval(term, b).has_value();
            default: return true;
        }
    }

    bool match(Term const &pattern, Term const &value, Binding &b) const {
        switch (pattern.kind) {
            case Term::Kind::variable: {
                auto it = b.find(pattern.name);
                if (it != b.end()) { return it->second == value; }
                b.emplace(pattern.name, value);
                return true;
            }
            case Term::Kind::function: {
                if (value.kind != Term::Kind::function || value.name != pattern.name ||
                    value.args.size() != pattern.args.size()) {
                    return false;
                }
                for (std::size_t i = 0; i < pattern.args.size(); ++i) {
                    if (!match(pattern.args[i], value.args[i], b)) { return false; }
                }
                return true;
            }
            default: return *eval(pattern, b) == value;
        }
    }

    template <class F>
    void join(std::vector<syntax::Atom const *> atoms, std::vector<Comparison const *> cmps, Binding &b, F const &f) const {
        for (std::size_t i = 0; i < cmps.size();) {
            auto const &cmp = *cmps[i];
            auto lhs = eval(cmp.lhs, b);
            auto rhs = eval(cmp.rhs, b);
            if (lhs && rhs) {
                if (!compare_holds(cmp.relation, *lhs, *rhs)) { return; }
                cmps.erase(cmps.begin() + static_cast<std::ptrdiff_t>(i));
                i = 0;
                continue;
            }
            if (cmp.relation == Relation::eq && !lhs && rhs && cmp.lhs.kind == Term::Kind::variable) {
                b.emplace(cmp.lhs.name, *rhs);
                cmps.erase(cmps.begin() + static_cast<std::ptrdiff_t>(i));
                i = 0;
                continue;
            }
            if (cmp.relation == Relation::eq && lhs && !rhs && cmp.rhs.kind == Term::Kind::variable) {
                b.emplace(cmp.rhs.name, *lhs);
                cmps.erase(cmps.begin() + static_cast<std::ptrdiff_t>(i));
                i = 0;
                continue;
            }
            ++i;
        }
        if (atoms.empty()) {
            if (!cmps.empty()) {
                std::set<std::string> vars;
                variables(*cmps.front(), vars);
                for (auto const &var : vars) {
                    if (!b.count(var)) { throw GroundError("unsafe variable '" + var + "'" + context_); }
                }
            }
            f(b);
            return;
        }
        auto pick = std::find_if(atoms.begin(), atoms.end(), [&](syntax::Atom const *atom) {
            return std::all_of(atom->args.begin(), atom->args.end(), [&](Term const &arg) { return matchable(arg, b); });
        });
        if (pick == atoms.end()) {
            throw GroundError("unbound arithmetic in '" + syntax::to_string(*atoms.front()) + "'" + context_);
        }
        syntax::Atom const &atom = **pick;
        atoms.erase(pick);
        auto it = g_.domain_.find({atom.predicate, static_cast<unsigned>(atom.args.size())});
        if (it == g_.domain_.end()) { return; }
        std::size_t size = it->second.size();
        for (std::size_t k = 0; k < size; ++k) {
            Binding next = b;
            auto const &tuple = g_.domain_.at({atom.predicate, static_cast<unsigned>(atom.args.size())})[k];
            bool ok = true;
            for (std::size_t i = 0; ok && i < tuple.size(); ++i) { ok = match(atom.args[i], tuple[i], next); }
            if (ok) { join(atoms, cmps, next, f); }
        }
    }

    bool is_static(syntax::Atom const &atom) const {
        return !g_.dynamic_.count({atom.predicate, static_cast<unsigned>(atom.args.size())});
    }

    //! Enumerates the instances of a condition. The callback receives the
    //! extended binding and the remaining non-static literals.
    template <class F>
    void expand(Condition const &cond, Binding const &b, F const &f) const {
        std::vector<syntax::Atom const *> atoms;
        std::vector<Comparison const *> cmps;
        for (auto const &lit : cond) {
            if (auto const *atom = std::get_if<AtomLiteral>(&lit)) {
                if (!atom->negated) { atoms.push_back(&atom->atom); }
            }
            else {
                cmps.push_back(&std::get<Comparison>(lit));
            }
        }
        Binding start = b;
        join(atoms, cmps, start, [&](Binding const &eb) {
            std::vector<AtomLiteral> dynamic;
            for (auto const &lit : cond) {
                auto const *atom = std::get_if<AtomLiteral>(&lit);
                if (atom == nullptr) { continue; }
                syntax::Atom ga = ground(atom->atom, eb);
                if (is_static(ga)) {
                    if (g_.possible_.count(syntax::to_string(ga)) == (atom->negated ? 1U : 0U)) { return; }
                }
                else {
                    dynamic.push_back(AtomLiteral{atom->negated, std::move(ga)});
                }
            }
            f(eb, dynamic);
        });
    }

    // {{{2 ground rules

    AtomId atom_id(syntax::Atom const &atom) {
        return g_.program_.add_atom(syntax::to_string(atom), atom.predicate, static_cast<unsigned>(atom.args.size()));
    }

    std::vector<AtomId> choice_elements(Aggregate const &agg, Binding const &b) {
        std::vector<AtomId> res;
        for (auto const &elem : agg.elements) {
            expand(elem.condition, b, [&](Binding const &eb, std::vector<AtomLiteral> const &dynamic) {
                if (!dynamic.empty()) { throw GroundError("dynamic condition in choice element" + context_); }
                AtomId id = atom_id(ground(elem.literal.atom, eb));
                if (std::find(res.begin(), res.end(), id) == res.end()) { res.push_back(id); }
            });
        }
        return res;
    }

    std::optional<unsigned> bound(std::optional<Term> const &term, Binding const &b) const {
        if (!term) { return std::nullopt; }
        Term val = ground(*term, b);
        if (val.kind != Term::Kind::integer || val.value < 0 || !val.value.fits_uint_p()) {
            throw GroundError("invalid cardinality bound '" + syntax::to_string(val) + "'" + context_);
        }
        return static_cast<unsigned>(val.value.get_ui());
    }

    CardinalityAggregate aggregate(Aggregate const &agg, Binding const &b) {
        CardinalityAggregate res;
        res.lower = bound(agg.lower, b).value_or(0);
        res.upper = bound(agg.upper, b);
        for (auto const &elem : agg.elements) {
            expand(elem.condition, b, [&](Binding const &eb, std::vector<AtomLiteral> const &dynamic) {
                if (!dynamic.empty()) { throw GroundError("dynamic condition in aggregate element" + context_); }
                Literal lit{atom_id(ground(elem.literal.atom, eb)), elem.literal.negated};
                if (std::find(res.elements.begin(), res.elements.end(), lit) == res.elements.end()) {
                    res.elements.push_back(lit);
                }
            });
        }
        return res;
    }

    AtomId theory_atom(LcAtom const &lc, Binding const &b) {
        LcAtom gl;
        gl.kind = lc.kind;
        gl.relation = lc.relation;
        gl.rhs = ground(lc.rhs, b);
        TheoryAtom ta;
        ta.kind = lc.kind;
        ta.relation = lc.relation;
        ta.rhs = constant(gl.rhs);
        if (lc.kind == LcKind::diff) {
            for (std::size_t i = 0; i < 2; ++i) {
                Term val = factor(lc.elements[i].factors.front(), b);
                auto num = numeric(val);
                Rational sign = i == 0 ? 1 : -1;
                if (auto *c = std::get_if<Rational>(&num)) { ta.rhs -= sign * *c; }
                else {
                    auto const &[coef, var] = std::get<std::pair<Rational, std::string>>(num);
                    ta.terms.push_back(LinearTerm{sign * coef, var, {}});
                }
                gl.elements.push_back(syntax::LcElement{{std::move(val)}, {}});
            }
        }
        else {
            for (auto const &elem : lc.elements) { linear_element(elem, b, gl, ta.terms, &ta.rhs); }
        }
        std::string name = syntax::to_string(gl);
        return g_.program_.add_theory_atom(name, std::move(ta));
    }

    //! Grounds one element into `gl`'s elements and linear terms. Unconditional
    //! constants are moved into `rhs` if given.
    void linear_element(syntax::LcElement const &elem, Binding const &b, LcAtom &gl, std::vector<LinearTerm> &terms,
                        Rational *rhs) {
        expand(elem.condition, b, [&](Binding const &eb, std::vector<AtomLiteral> const &dynamic) {
            syntax::LcElement ge;
            Rational coef = 1;
            std::string var;
            for (auto const &f : elem.factors) {
                Term val = factor(f, eb);
                auto num = numeric(val);
                if (auto *c = std::get_if<Rational>(&num)) { coef *= *c; }
                else {
                    auto const &[c2, v] = std::get<std::pair<Rational, std::string>>(num);
                    if (!var.empty()) {
                        throw GroundError("non-linear term '" + var + "*" + v + "'" + context_);
                    }
                    coef *= c2;
                    var = v;
                }
                ge.factors.push_back(std::move(val));
            }
            LinearTerm term{coef, var, {}};
            for (auto const &lit : dynamic) {
                term.condition.push_back(Literal{atom_id(lit.atom), lit.negated});
                ge.condition.emplace_back(lit);
            }
            gl.elements.push_back(std::move(ge));
            if (var.empty() && term.condition.empty() && rhs != nullptr) { *rhs -= coef; }
            else { terms.push_back(std::move(term)); }
        });
    }

    void objective(LcAtom const &lc, Binding const &b) {
        Objective obj;
        obj.maximize = lc.kind == LcKind::maximize;
        LcAtom gl;
        gl.kind = lc.kind;
        for (auto const &elem : lc.elements) { linear_element(elem, b, gl, obj.terms, nullptr); }
        for (auto const &term : obj.terms) {
            if (!term.condition.empty()) { throw GroundError("dynamic condition in objective" + context_); }
        }
        std::erase_if(obj.terms, [](LinearTerm const &term) { return term.variable.empty(); });
        if (g_.rule_texts_.insert(syntax::to_string(gl)).second) { g_.program_.objectives.push_back(std::move(obj)); }
    }

    void domain(LcAtom const &lc, Binding const &b) {
        DomBound dom;
        Term lower = ground(lc.lower, b);
        Term upper = ground(lc.upper, b);
        dom.lower = constant(lower);
        dom.upper = constant(upper);
        Term var = factor(lc.elements.front().factors.front(), b);
        auto num = numeric(var);
        auto const *named = std::get_if<std::pair<Rational, std::string>>(&num);
        if (named == nullptr || named->first != 1) {
            throw GroundError("&dom expects a theory variable but found '" + syntax::to_string(var) + "'" + context_);
        }
        if (dom.lower > dom.upper) { throw GroundError("&dom with empty range" + context_); }
        dom.variable = named->second;
        std::string text = "&dom{" + syntax::to_string(lower) + ".." + syntax::to_string(upper) + "}=" + dom.variable;
        if (g_.rule_texts_.insert(text).second) { g_.program_.domains.push_back(std::move(dom)); }
    }

    // {{{2 rules

    struct Parts {
        std::vector<syntax::Atom const *> atoms;
        std::vector<Comparison const *> cmps;
    };

    static Parts binders(std::vector<BodyLiteral> const &body) {
        Parts res;
        for (auto const &lit : body) {
            if (auto const *atom = std::get_if<AtomLiteral>(&lit)) {
                if (!atom->negated) { res.atoms.push_back(&atom->atom); }
            }
            else if (auto const *cmp = std::get_if<Comparison>(&lit)) {
                res.cmps.push_back(cmp);
            }
        }
        return res;
    }

    void check_safety(Rule const &rule) const {
        std::set<std::string> global;
        std::set<std::string> bindable;
        auto add_lc = [&](LcAtom const &lc) {
            if (lc.has_relation()) { syntax::collect_variables(lc.rhs, global); }
            if (lc.kind == LcKind::dom) {
                syntax::collect_variables(lc.lower, global);
                syntax::collect_variables(lc.upper, global);
            }
        };
        auto add_agg = [&](Aggregate const &agg) {
            if (agg.lower) { syntax::collect_variables(*agg.lower, global); }
            if (agg.upper) { syntax::collect_variables(*agg.upper, global); }
        };
        if (auto const *atom = std::get_if<syntax::Atom>(&rule.head)) { variables(*atom, global); }
        else if (auto const *lc = std::get_if<LcAtom>(&rule.head)) { add_lc(*lc); }
        else if (auto const *agg = std::get_if<Aggregate>(&rule.head)) { add_agg(*agg); }
        std::vector<std::pair<std::string, std::set<std::string>>> equations;
        for (auto const &lit : rule.body) {
            if (auto const *atom = std::get_if<AtomLiteral>(&lit)) {
                variables(atom->atom, global);
                if (!atom->negated) { variables(atom->atom, bindable); }
            }
            else if (auto const *cmp = std::get_if<Comparison>(&lit)) {
                variables(*cmp, global);
                if (cmp->relation == Relation::eq) {
                    if (cmp->lhs.kind == Term::Kind::variable) {
                        std::set<std::string> deps;
                        syntax::collect_variables(cmp->rhs, deps);
                        equations.emplace_back(cmp->lhs.name, deps);
                    }
                    if (cmp->rhs.kind == Term::Kind::variable) {
                        std::set<std::string> deps;
                        syntax::collect_variables(cmp->lhs, deps);
                        equations.emplace_back(cmp->rhs.name, deps);
                    }
                }
            }
            else if (auto const *lc = std::get_if<syntax::LcLiteral>(&lit)) { add_lc(lc->atom); }
            else { add_agg(std::get<Aggregate>(lit)); }
        }
        close_equations(bindable, equations);
        for (auto const &var : global) {
            if (!bindable.count(var)) { throw GroundError("unsafe variable '" + var + "'" + context_); }
        }
        auto check_element = [&](std::set<std::string> vars, Condition const &cond) {
            variables(cond, vars);
            std::set<std::string> local_bound = bindable;
            std::vector<std::pair<std::string, std::set<std::string>>> local_eqs;
            for (auto const &lit : cond) {
                if (auto const *atom = std::get_if<AtomLiteral>(&lit)) {
                    if (!atom->negated) { variables(atom->atom, local_bound); }
                }
                else {
                    auto const &cmp = std::get<Comparison>(lit);
                    if (cmp.relation == Relation::eq && cmp.lhs.kind == Term::Kind::variable) {
                        std::set<std::string> deps;
                        syntax::collect_variables(cmp.rhs, deps);
                        local_eqs.emplace_back(cmp.lhs.name, deps);
                    }
                }
            }
            close_equations(local_bound, local_eqs);
            for (auto const &var : vars) {
                if (!local_bound.count(var)) { throw GroundError("unsafe variable '" + var + "'" + context_); }
            }
        };
        auto check_lc = [&](LcAtom const &lc) {
            for (auto const &elem : lc.elements) {
                std::set<std::string> vars;
                for (auto const &f : elem.factors) { syntax::collect_variables(f, vars); }
                check_element(vars, elem.condition);
            }
        };
        auto check_agg = [&](Aggregate const &agg) {
            for (auto const &elem : agg.elements) {
                std::set<std::string> vars;
                variables(elem.literal.atom, vars);
                check_element(vars, elem.condition);
            }
        };
        if (auto const *lc = std::get_if<LcAtom>(&rule.head)) { check_lc(*lc); }
        else if (auto const *agg = std::get_if<Aggregate>(&rule.head)) { check_agg(*agg); }
        for (auto const &lit : rule.body) {
            if (auto const *lc = std::get_if<syntax::LcLiteral>(&lit)) { check_lc(lc->atom); }
            else if (auto const *agg = std::get_if<Aggregate>(&lit)) { check_agg(*agg); }
        }
    }

    static void close_equations(std::set<std::string> &bound,
                                std::vector<std::pair<std::string, std::set<std::string>>> const &eqs) {
        for (bool changed = true; changed;) {
            changed = false;
            for (auto const &[var, deps] : eqs) {
                if (bound.count(var)) { continue; }
                if (std::all_of(deps.begin(), deps.end(), [&](std::string const &d) { return bound.count(d) > 0; })) {
                    bound.insert(var);
                    changed = true;
                }
            }
        }
    }

    //! Adds the head atoms derivable by the rule to the possible atoms.
    bool derive(Rule const &rule) {
        bool changed = false;
        Parts parts = binders(rule.body);
        Binding b;
        std::vector<syntax::Atom> found;
        join(parts.atoms, parts.cmps, b, [&](Binding const &gb) {
            if (auto const *atom = std::get_if<syntax::Atom>(&rule.head)) { found.push_back(ground(*atom, gb)); }
            else if (auto const *agg = std::get_if<Aggregate>(&rule.head)) {
                for (auto const &elem : agg->elements) {
                    expand(elem.condition, gb, [&](Binding const &eb, std::vector<AtomLiteral> const &) {
                        found.push_back(ground(elem.literal.atom, eb));
                    });
                }
            }
        });
        for (auto const &atom : found) { changed = g_.add_possible(atom) || changed; }
        return changed;
    }

    bool derive(syntax::ExternalDirective const &ext) {
        Parts parts = binders(ext.body);
        Binding b;
        std::vector<syntax::Atom> found;
        join(parts.atoms, parts.cmps, b, [&](Binding const &gb) { found.push_back(ground(ext.atom, gb)); });
        bool changed = false;
        for (auto const &atom : found) { changed = g_.add_possible(atom) || changed; }
        return changed;
    }

    void instantiate(Rule const &rule) {
        Parts parts = binders(rule.body);
        Binding b;
        join(parts.atoms, parts.cmps, b, [&](Binding const &gb) { instance(rule, gb); });
    }

    void instance(Rule const &rule, Binding const &b) {
        for (auto const &lit : rule.body) {
            if (auto const *cmp = std::get_if<Comparison>(&lit)) {
                if (!compare_holds(cmp->relation, ground(cmp->lhs, b), ground(cmp->rhs, b))) { return; }
            }
        }
        GroundRule gr;
        if (std::holds_alternative<std::monostate>(rule.head)) { gr.type = HeadType::integrity; }
        else if (auto const *atom = std::get_if<syntax::Atom>(&rule.head)) {
            gr.head.push_back(atom_id(ground(*atom, b)));
        }
        else if (auto const *lc = std::get_if<LcAtom>(&rule.head)) {
            if (lc->kind == LcKind::dom || lc->is_objective()) {
                if (!rule.body.empty()) {
                    throw GroundError(std::string("&") + syntax::to_string(lc->kind) + " must be a fact" + context_);
                }
                if (lc->kind == LcKind::dom) { domain(*lc, b); }
                else { objective(*lc, b); }
                return;
            }
            gr.head.push_back(theory_atom(*lc, b));
        }
        else {
            auto const &agg = std::get<Aggregate>(rule.head);
            gr.type = HeadType::choice;
            gr.head = choice_elements(agg, b);
            gr.lower = bound(agg.lower, b).value_or(0);
            gr.upper = bound(agg.upper, b);
            auto count = static_cast<unsigned>(gr.head.size());
            if (gr.lower > count || (gr.upper && gr.lower > *gr.upper)) {
                gr = GroundRule{};
                gr.type = HeadType::integrity;
            }
            else if (gr.upper && *gr.upper > count) {
                gr.upper = count;
            }
        }
        for (auto const &lit : rule.body) {
            if (auto const *atom = std::get_if<AtomLiteral>(&lit)) {
                gr.body.push_back(Literal{atom_id(ground(atom->atom, b)), atom->negated});
            }
            else if (auto const *lc = std::get_if<syntax::LcLiteral>(&lit)) {
                gr.body.push_back(Literal{theory_atom(lc->atom, b), lc->negated});
            }
            else if (auto const *agg = std::get_if<Aggregate>(&lit)) {
                gr.aggregates.push_back(aggregate(*agg, b));
            }
        }
        std::string text = to_string(g_.program_, gr);
        if (g_.rule_texts_.insert(text).second) { g_.program_.add_rule(std::move(gr)); }
    }

    void instantiate(syntax::ExternalDirective const &ext) {
        Parts parts = binders(ext.body);
        Binding b;
        join(parts.atoms, parts.cmps, b, [&](Binding const &gb) {
            AtomId id = atom_id(ground(ext.atom, gb));
            g_.program_.externals.emplace(id, false);
        });
    }

    void instantiate(syntax::DomainDirective const &dir) {
        for (auto const &var : dir.variables) {
            Binding b;
            Term val = factor(var, b);
            auto num = numeric(val);
            auto const *named = std::get_if<std::pair<Rational, std::string>>(&num);
            if (named == nullptr || named->first != 1) {
                throw GroundError("expected a theory variable but found '" + syntax::to_string(val) + "'" + context_);
            }
            g_.program_.variable_domains[named->second] = dir.real;
        }
    }

private:
    Grounder &g_;
    Binding const &params_;
    std::string context_;
};

// {{{1 grounder

bool Grounder::add_possible(syntax::Atom const &atom) {
    if (!possible_.insert(syntax::to_string(atom)).second) { return false; }
    domain_[{atom.predicate, static_cast<unsigned>(atom.args.size())}].push_back(atom.args);
    return true;
}

void Grounder::update_static(std::vector<Scoped> const &stms) {
    auto sig = [](syntax::Atom const &atom) { return Signature{atom.predicate, static_cast<unsigned>(atom.args.size())}; };
    for (auto const &scoped : stms) {
        if (auto const *rule = std::get_if<Rule>(scoped.stm)) {
            if (auto const *atom = std::get_if<syntax::Atom>(&rule->head)) { defined_.insert(sig(*atom)); }
            else if (auto const *agg = std::get_if<Aggregate>(&rule->head)) {
                for (auto const &elem : agg->elements) { dynamic_.insert(sig(elem.literal.atom)); }
            }
        }
        else if (auto const *ext = std::get_if<syntax::ExternalDirective>(scoped.stm)) {
            dynamic_.insert(sig(ext->atom));
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (auto const &scoped : stms) {
            auto const *rule = std::get_if<Rule>(scoped.stm);
            if (rule == nullptr) { continue; }
            auto const *atom = std::get_if<syntax::Atom>(&rule->head);
            if (atom == nullptr || dynamic_.count(sig(*atom))) { continue; }
            bool dynamic = false;
            for (auto const &lit : rule->body) {
                if (auto const *alit = std::get_if<AtomLiteral>(&lit)) {
                    dynamic = dynamic || alit->negated || dynamic_.count(sig(alit->atom)) > 0;
                }
                else if (!std::holds_alternative<Comparison>(lit)) {
                    dynamic = true;
                }
            }
            if (dynamic) {
                dynamic_.insert(sig(*atom));
                changed = true;
            }
        }
    }
}

void Grounder::ground(syntax::Program const &prg, std::vector<PartInstance> const &parts) {
    auto declared = prg.parts();
    std::vector<std::vector<syntax::Statement>> storage;
    std::vector<Binding> params;
    for (auto const &inst : parts) {
        auto it = std::find_if(declared.begin(), declared.end(), [&](syntax::Part const &p) { return p.name == inst.name; });
        if (it == declared.end()) { throw GroundError("unknown program part '" + inst.name + "'"); }
        if (it->params.size() != inst.args.size()) {
            throw GroundError("program part '" + inst.name + "' expects " + std::to_string(it->params.size()) +
                              " parameter(s)");
        }
        Binding b;
        for (std::size_t i = 0; i < inst.args.size(); ++i) { b.emplace(it->params[i], inst.args[i]); }
        storage.push_back(prg.part(inst.name));
        params.push_back(std::move(b));
    }
    std::vector<Scoped> stms;
    for (std::size_t i = 0; i < storage.size(); ++i) {
        for (auto const &stm : storage[i]) { stms.push_back(Scoped{&stm, params[i]}); }
    }
    update_static(stms);

    auto context = [](syntax::Statement const &stm) { return " in '" + syntax::to_string(stm) + "'"; };
    for (auto const &scoped : stms) {
        if (auto const *rule = std::get_if<Rule>(scoped.stm)) {
            Instantiator(*this, scoped.params, rule_context(*rule)).check_safety(*rule);
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (auto const &scoped : stms) {
            Instantiator inst(*this, scoped.params, context(*scoped.stm));
            if (auto const *rule = std::get_if<Rule>(scoped.stm)) { changed = inst.derive(*rule) || changed; }
            else if (auto const *ext = std::get_if<syntax::ExternalDirective>(scoped.stm)) {
                changed = inst.derive(*ext) || changed;
            }
        }
    }
    for (auto const &scoped : stms) {
        Instantiator inst(*this, scoped.params, context(*scoped.stm));
        std::visit(
            [&](auto const &stm) {
                using T = std::decay_t<decltype(stm)>;
                if constexpr (std::is_same_v<T, syntax::ShowDirective>) {
                    std::pair<std::string, unsigned> show{stm.predicate, stm.arity};
                    auto &shows = program_.shows;
                    if (std::find(shows.begin(), shows.end(), show) == shows.end()) { shows.push_back(show); }
                }
                else if constexpr (!std::is_same_v<T, syntax::ProgramDirective>) {
                    inst.instantiate(stm);
                }
            },
            *scoped.stm);
    }
    for (auto const &[atom, value] : program_.externals) {
        if (program_.in_head(atom)) {
            throw GroundError("external atom '" + program_.name(atom) + "' occurs in a rule head");
        }
    }
}

GroundProgram ground(syntax::Program const &prg) { return ground(prg, "base", {}); }

GroundProgram ground(syntax::Program const &prg, std::string const &part, std::vector<syntax::Term> const &params) {
    Grounder g;
    g.ground(prg, {PartInstance{part, params}});
    return g.program();
}

} // namespace lcasp
