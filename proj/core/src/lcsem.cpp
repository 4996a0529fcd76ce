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
#include <lcasp/lcsem.hpp>

#include <lcasp/grounder.hpp>
#include <lcasp/random_program.hpp>

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>

namespace lcasp {

// {{{1 settings

StrictPolicy StrictPolicy::parse(std::string_view text) {
    StrictPolicy policy;
    std::istringstream in{std::string(text)};
    std::string line;
    for (unsigned lineno = 1; std::getline(in, line); ++lineno) {
        if (auto pos = line.find('%'); pos != std::string::npos) { line.erase(pos); }
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) { continue; }
        auto end = line.find_first_of(" \t", begin);
        std::string keyword = line.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
        if (keyword != "strict" && keyword != "nonstrict") {
            throw SemanticError("line " + std::to_string(lineno) + ": expected 'strict' or 'nonstrict'");
        }
        if (end == std::string::npos) { throw SemanticError("line " + std::to_string(lineno) + ": missing atom"); }
        auto atom = syntax::parse_atom(std::string_view(line).substr(end));
        std::string name = std::visit([](auto const &a) { return syntax::to_string(a); }, atom);
        policy.overrides[name] = keyword == "strict";
    }
    return policy;
}

SemanticSetting signature(GroundProgram const &prg, StrictPolicy const &policy) {
    SemanticSetting setting;
    setting.atoms = prg.theory_atoms();
    for (AtomId atom : setting.atoms) {
        bool defined = prg.in_head(atom);
        bool strict = policy.base == StrictPolicy::Base::all_strict ||
                      (policy.base == StrictPolicy::Base::default_ && !defined);
        auto it = policy.overrides.find(prg.name(atom));
        if (it != policy.overrides.end()) { strict = it->second; }
        setting.defined[atom] = defined;
        setting.strict[atom] = strict;
    }
    for (auto const &[name, strict] : policy.overrides) {
        auto id = prg.find(name);
        if (!id || !prg.is_theory(*id)) {
            throw SemanticError("strictness policy mentions unknown lc-atom '" + name + "'");
        }
    }
    return setting;
}

// {{{1 constraints

namespace {

using Holds = std::function<bool(AtomId)>;

bool condition_holds(std::vector<Literal> const &cond, Holds const &holds) {
    return std::all_of(cond.begin(), cond.end(), [&](Literal lit) { return holds(lit.atom) != lit.negated; });
}

LinearConstraint constraint_with(GroundProgram const &prg, AtomId atom, Holds const &holds) {
    auto const &ta = *prg.atom(atom).theory;
    LinearConstraint c{{}, ta.relation, ta.rhs};
    for (auto const &term : ta.terms) {
        if (!condition_holds(term.condition, holds)) { continue; }
        if (term.variable.empty()) { c.rhs -= term.coefficient; }
        else { c.terms.emplace_back(term.coefficient, term.variable); }
    }
    return c.merged();
}

std::vector<AtomId> condition_atoms(GroundProgram const &prg, AtomId atom) {
    std::vector<AtomId> res;
    for (auto const &term : prg.atom(atom).theory->terms) {
        for (auto lit : term.condition) { res.push_back(lit.atom); }
    }
    std::sort(res.begin(), res.end());
    res.erase(std::unique(res.begin(), res.end()), res.end());
    return res;
}

LinearConstraint complemented(LinearConstraint c) {
    c.relation = complement(c.relation);
    return c;
}

} // namespace

LinearConstraint constraint_of(GroundProgram const &prg, AtomId atom, Interpretation const &x) {
    return constraint_with(prg, atom, [&](AtomId a) { return x.count(a) > 0; });
}

std::optional<DiffConstraint> to_diff(LinearConstraint const &c) {
    LinearConstraint m = c.merged();
    bool strict = false;
    switch (m.relation) {
        case Relation::le: break;
        case Relation::lt: strict = true; break;
        case Relation::ge:
        case Relation::gt:
            strict = m.relation == Relation::gt;
            for (auto &term : m.terms) { term.first = -term.first; }
            m.rhs = -m.rhs;
            break;
        default: return std::nullopt;
    }
    DiffConstraint dc{zero_vertex, zero_vertex, m.rhs, strict};
    if (m.terms.size() > 2) { return std::nullopt; }
    bool pos = false;
    bool neg = false;
    for (auto const &[coef, var] : m.terms) {
        if (coef == 1 && !pos) {
            dc.x = var;
            pos = true;
        }
        else if (coef == -1 && !neg) {
            dc.y = var;
            neg = true;
        }
        else {
            return std::nullopt;
        }
    }
    return dc;
}

Theory resolve_theory(GroundProgram const &prg, Theory theory) {
    if (theory != Theory::automatic) { return theory; }
    if (!prg.objectives.empty()) { return Theory::lp; }
    for (AtomId atom : prg.theory_atoms()) {
        auto const &ta = *prg.atom(atom).theory;
        if (ta.conditional() || !to_diff(constraint_of(prg, atom))) { return Theory::lp; }
    }
    return Theory::dl;
}

std::set<std::string> theory_variables(GroundProgram const &prg) {
    std::set<std::string> vars;
    for (AtomId atom : prg.theory_atoms()) {
        for (auto const &term : prg.atom(atom).theory->terms) {
            if (!term.variable.empty()) { vars.insert(term.variable); }
        }
    }
    for (auto const &dom : prg.domains) { vars.insert(dom.variable); }
    for (auto const &obj : prg.objectives) {
        for (auto const &term : obj.terms) { vars.insert(term.variable); }
    }
    return vars;
}

// {{{1 theory checks

namespace {

//! A constraint to be satisfied, or falsified if `negated`, with the atoms it stems from.
struct Active {
    LinearConstraint constraint;
    bool negated = false;
    std::vector<AtomId> reason;
};

Valuation complete(GroundProgram const &prg, Valuation witness) {
    for (auto const &var : theory_variables(prg)) { witness.emplace(var, Rational(0)); }
    return witness;
}

Domain dl_domain(GroundProgram const &prg) { return prg.any_real() ? Domain::real : Domain::integer; }

void check_dl_epsilon(GroundProgram const &prg, SemanticSetting const &setting, TheoryOptions const &opts) {
    if (dl_domain(prg) != Domain::real || opts.epsilon_explicit) { return; }
    for (AtomId atom : setting.atoms) {
        auto rel = prg.atom(atom).theory->relation;
        if (setting.is_strict(atom) || rel == Relation::lt || rel == Relation::gt) {
            throw SemanticError("lc-atom '" + prg.name(atom) +
                                "' needs an explicit epsilon for difference constraints over the reals");
        }
    }
}

DiffConstraint diff_of(GroundProgram const &prg, LinearConstraint const &c, std::vector<AtomId> const &reason) {
    auto dc = to_diff(c);
    if (!dc) {
        throw SemanticError("lc-atom '" + (reason.empty() ? to_string(c) : prg.name(reason.front())) +
                            "' is not a difference constraint");
    }
    return *dc;
}

std::vector<DiffConstraint> dom_constraints(GroundProgram const &prg) {
    std::vector<DiffConstraint> res;
    for (auto const &dom : prg.domains) {
        res.push_back(DiffConstraint{dom.variable, zero_vertex, dom.upper, false});
        res.push_back(DiffConstraint{zero_vertex, dom.variable, Rational(-dom.lower), false});
    }
    return res;
}

LpProblem base_problem(GroundProgram const &prg, TheoryOptions const &opts) {
    LpProblem problem;
    problem.epsilon = opts.epsilon;
    problem.node_limit = opts.node_limit;
    for (auto const &[var, real] : prg.variable_domains) { problem.domains[var] = real ? Domain::real : Domain::integer; }
    for (auto const &dom : prg.domains) {
        auto &[lower, upper] = problem.bounds[dom.variable];
        if (!lower || *lower < dom.lower) { lower = dom.lower; }
        if (!upper || *upper > dom.upper) { upper = dom.upper; }
    }
    return problem;
}

std::optional<LpObjective> combined_objective(GroundProgram const &prg) {
    if (prg.objectives.empty()) { return std::nullopt; }
    LpObjective obj;
    obj.maximize = std::all_of(prg.objectives.begin(), prg.objectives.end(), [](Objective const &o) { return o.maximize; });
    for (auto const &o : prg.objectives) {
        Rational sign = o.maximize == obj.maximize ? 1 : -1;
        for (auto const &term : o.terms) { obj.terms.emplace_back(sign * term.coefficient, term.variable); }
    }
    return obj;
}

//! Case splits of a set of active constraints: each entry lists, per
//! alternative, the normalized constraints and the index of their origin.
using Alternatives = std::vector<std::vector<std::pair<LinearConstraint, std::size_t>>>;

std::vector<Alternatives> alternatives(std::vector<Active> const &active, TheoryOptions const &opts, bool &split) {
    std::vector<Alternatives> res;
    std::size_t splits = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
        auto c = active[i].negated ? complemented(active[i].constraint) : active[i].constraint;
        Alternatives alts;
        for (auto &conj : normalize(c, opts.epsilon)) {
            std::vector<std::pair<LinearConstraint, std::size_t>> entry;
            for (auto &nc : conj) { entry.emplace_back(std::move(nc), i); }
            alts.push_back(std::move(entry));
        }
        if (alts.size() > 1) { ++splits; }
        res.push_back(std::move(alts));
    }
    if (splits > opts.split_cap) {
        throw LimitError("more than " + std::to_string(opts.split_cap) + " simultaneous != case splits");
    }
    split = splits > 0;
    return res;
}

//! Calls `f` on each combination of alternatives until it returns true.
template <class F>
bool for_each_case(std::vector<Alternatives> const &alts, F const &f) {
    std::vector<std::size_t> choice(alts.size(), 0);
    while (true) {
        std::vector<std::pair<LinearConstraint, std::size_t>> conj;
        for (std::size_t i = 0; i < alts.size(); ++i) {
            for (auto const &entry : alts[i][choice[i]]) { conj.push_back(entry); }
        }
        if (f(conj)) { return true; }
        std::size_t i = 0;
        while (i < alts.size() && ++choice[i] == alts[i].size()) { choice[i++] = 0; }
        if (i == alts.size()) { return false; }
    }
}

struct CheckResult {
    bool sat = false;
    Valuation witness;
    //! Indices into the active list forming a conflict, if sat is false.
    std::vector<std::size_t> conflict;
};

CheckResult check_lp(GroundProgram const &prg, std::vector<Active> const &active, TheoryOptions const &opts) {
    bool split = false;
    auto alts = alternatives(active, opts, split);
    CheckResult res;
    LpProblem base = base_problem(prg, opts);
    std::vector<std::pair<LinearConstraint, std::size_t>> last;
    res.sat = for_each_case(alts, [&](auto const &conj) {
        LpProblem problem = base;
        for (auto const &entry : conj) { problem.constraints.push_back(entry.first); }
        auto out = check_sat(problem);
        if (out.status == LpStatus::sat) {
            res.witness = std::move(out.witness);
            return true;
        }
        last = conj;
        return false;
    });
    if (res.sat) { return res; }
    if (split) {
        for (std::size_t i = 0; i < active.size(); ++i) { res.conflict.push_back(i); }
        return res;
    }
    LpProblem problem = base;
    for (auto const &entry : last) { problem.constraints.push_back(entry.first); }
    for (auto idx : iis(problem)) { res.conflict.push_back(last[idx].second); }
    std::sort(res.conflict.begin(), res.conflict.end());
    res.conflict.erase(std::unique(res.conflict.begin(), res.conflict.end()), res.conflict.end());
    return res;
}

CheckResult check_dl(GroundProgram const &prg, std::vector<Active> const &active, TheoryOptions const &opts) {
    Domain domain = dl_domain(prg);
    DlStore store(domain, opts.epsilon_explicit ? std::optional<Rational>(opts.epsilon) : std::nullopt);
    CheckResult res;
    for (auto const &dc : dom_constraints(prg)) {
        if (!store.assert_constraint(dc, 0, active.size()).sat) { return res; }
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
        auto dc = diff_of(prg, active[i].constraint, active[i].reason);
        if (active[i].negated) { dc = negate(dc, domain, opts.epsilon); }
        auto out = store.assert_constraint(dc, 0, i);
        if (!out.sat) {
            for (auto tag : out.tags) {
                if (tag < active.size()) { res.conflict.push_back(tag); }
            }
            return res;
        }
    }
    res.sat = true;
    res.witness = store.witness();
    return res;
}

CheckResult check(GroundProgram const &prg, Theory theory, std::vector<Active> const &active, TheoryOptions const &opts) {
    return theory == Theory::dl ? check_dl(prg, active, opts) : check_lp(prg, active, opts);
}

std::vector<Active> solution_constraints(GroundProgram const &prg, SemanticSetting const &setting,
                                         std::set<AtomId> const &s, Holds const &holds) {
    std::vector<Active> active;
    for (AtomId atom : setting.atoms) {
        bool in = s.count(atom) > 0;
        if (!in && !setting.is_strict(atom)) { continue; }
        active.push_back(Active{constraint_with(prg, atom, holds), !in, {atom}});
    }
    return active;
}

void require_unconditional(GroundProgram const &prg, SemanticSetting const &setting) {
    for (AtomId atom : setting.atoms) {
        if (prg.atom(atom).theory->conditional()) {
            throw SemanticError("lc-atom '" + prg.name(atom) + "' has a dynamic condition; use lazy mode");
        }
    }
}

void optimize_model(GroundProgram const &prg, SemanticSetting const &setting, LcModel &model, TheoryOptions const &opts) {
    auto objective = combined_objective(prg);
    if (!objective) { return; }
    std::set<AtomId> s;
    for (AtomId atom : setting.atoms) {
        if (model.atoms.count(atom)) { s.insert(atom); }
    }
    auto active = solution_constraints(prg, setting, s, [&](AtomId a) { return model.atoms.count(a) > 0; });
    bool split = false;
    auto alts = alternatives(active, opts, split);
    LpProblem base = base_problem(prg, opts);
    base.objective = objective;
    std::optional<LpResult> best;
    for_each_case(alts, [&](auto const &conj) {
        LpProblem problem = base;
        for (auto const &entry : conj) { problem.constraints.push_back(entry.first); }
        auto out = optimize(problem);
        if (out.status == LpStatus::unbounded) {
            best = out;
            return true;
        }
        if (out.status == LpStatus::sat) {
            bool better = !best || (objective->maximize ? out.value > best->value : out.value < best->value);
            if (better) { best = std::move(out); }
        }
        return false;
    });
    if (!best) { return; }
    if (best->status == LpStatus::unbounded) {
        model.unbounded = true;
        return;
    }
    model.objective = best->value;
    model.witness = complete(prg, best->witness);
}

void sort_lc_models(GroundProgram const &prg, std::vector<LcModel> &models) {
    std::stable_sort(models.begin(), models.end(), [&](LcModel const &a, LcModel const &b) {
        return atom_names(prg, a.atoms) < atom_names(prg, b.atoms);
    });
}

} // namespace

std::optional<Valuation> is_lc_solution(GroundProgram const &prg, std::set<AtomId> const &s,
                                        SemanticSetting const &setting, TheoryOptions const &opts) {
    require_unconditional(prg, setting);
    Theory theory = resolve_theory(prg, opts.theory);
    if (theory == Theory::dl) { check_dl_epsilon(prg, setting, opts); }
    auto active = solution_constraints(prg, setting, s, [](AtomId) { return false; });
    auto res = check(prg, theory, active, opts);
    if (!res.sat) { return std::nullopt; }
    return complete(prg, std::move(res.witness));
}

GroundProgram extend_program(GroundProgram const &prg, std::set<AtomId> const &s, SemanticSetting const &setting) {
    GroundProgram res = prg;
    for (AtomId atom : setting.atoms) {
        bool in = s.count(atom) > 0;
        bool defined = setting.is_defined(atom);
        bool strict = setting.is_strict(atom);
        if (in && strict && !defined) { res.add_rule(GroundRule::fact(atom)); }
        else if (in && strict && defined) { res.add_rule(GroundRule::integrity({Literal{atom, true}})); }
        else if (in && !strict && !defined) { res.add_rule(GroundRule::choice({atom})); }
        else if (!in && defined) { res.add_rule(GroundRule::integrity({Literal{atom, false}})); }
    }
    return res;
}

std::vector<LcModel> enumerate_reference(GroundProgram const &prg, SemanticSetting const &setting,
                                         LcOptions const &opts) {
    auto const &atoms = setting.atoms;
    if (atoms.size() > opts.atom_cap) {
        throw LimitError("reference mode is limited to " + std::to_string(opts.atom_cap) + " lc-atoms");
    }
    require_unconditional(prg, setting);
    std::vector<LcModel> models;
    std::set<Interpretation> seen;
    std::size_t n = atoms.size();
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) { throw TimeoutError(); }
            std::set<AtomId> s;
            for (std::size_t i = 0; i < n; ++i) {
                if (pick[i]) { s.insert(atoms[i]); }
            }
            auto witness = is_lc_solution(prg, s, setting, opts.theory);
            if (!witness) { continue; }
            EnumerateOptions eo;
            eo.deadline = opts.deadline;
            for (auto &x : enumerate_stable_models(extend_program(prg, s, setting), eo)) {
                if (!seen.insert(x).second) { continue; }
                LcModel model{x, *witness, s, std::nullopt, false};
                optimize_model(prg, setting, model, opts.theory);
                models.push_back(std::move(model));
                if (opts.limit != 0 && models.size() >= opts.limit) {
                    sort_lc_models(prg, models);
                    return models;
                }
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    sort_lc_models(prg, models);
    return models;
}

// {{{1 lazy search

namespace {

class LcHook : public TheoryHook {
public:
    LcHook(GroundProgram const &prg, SemanticSetting const &setting, TheoryOptions const &opts)
        : prg_(prg)
        , setting_(setting)
        , opts_(opts) {
        for (AtomId atom : setting.atoms) { conditions_.push_back(condition_atoms(prg, atom)); }
    }

    Valuation const &witness() const { return witness_; }

protected:
    bool ready(Assignment const &a, std::size_t i) const {
        AtomId atom = setting_.atoms[i];
        if (!a.assigned(atom)) { return false; }
        if (!a.is_true(atom) && !setting_.is_strict(atom)) { return false; }
        return std::all_of(conditions_[i].begin(), conditions_[i].end(), [&](AtomId c) { return a.assigned(c); });
    }

    Active active(Assignment const &a, std::size_t i) const {
        AtomId atom = setting_.atoms[i];
        std::vector<AtomId> reason{atom};
        reason.insert(reason.end(), conditions_[i].begin(), conditions_[i].end());
        return Active{constraint_with(prg_, atom, [&](AtomId c) { return a.is_true(c); }), a.is_false(atom),
                      std::move(reason)};
    }

    GroundProgram const &prg_;
    SemanticSetting const &setting_;
    TheoryOptions opts_;
    std::vector<std::vector<AtomId>> conditions_;
    Valuation witness_;
};

class DlHook : public LcHook {
public:
    DlHook(GroundProgram const &prg, SemanticSetting const &setting, TheoryOptions const &opts)
        : LcHook(prg, setting, opts)
        , domain_(dl_domain(prg))
        , store_(domain_, opts.epsilon_explicit ? std::optional<Rational>(opts.epsilon) : std::nullopt)
        , levels_(setting.atoms.size()) {
        check_dl_epsilon(prg, setting, opts);
        for (auto const &dc : dom_constraints(prg)) {
            if (!store_.assert_constraint(dc, 0, setting.atoms.size()).sat) { inconsistent_ = true; }
        }
    }

    std::optional<std::vector<AtomId>> check(Assignment const &a, bool total) override {
        if (inconsistent_) { return std::vector<AtomId>{}; }
        unsigned level = a.decision_level();
        for (std::size_t i = 0; i < setting_.atoms.size(); ++i) {
            if (levels_[i] || !ready(a, i)) { continue; }
            Active act = active(a, i);
            auto dc = diff_of(prg_, act.constraint, act.reason);
            if (act.negated) { dc = negate(dc, domain_, opts_.epsilon); }
            auto res = store_.assert_constraint(dc, level, i);
            if (!res.sat) {
                std::vector<AtomId> conflict;
                for (auto tag : res.tags) {
                    if (tag >= setting_.atoms.size()) { continue; }
                    auto r = active(a, tag).reason;
                    conflict.insert(conflict.end(), r.begin(), r.end());
                }
                return conflict;
            }
            levels_[i] = level;
        }
        if (total) { witness_ = complete(prg_, store_.witness()); }
        return std::nullopt;
    }

    void undo(unsigned level) override {
        store_.backtrack(level);
        for (auto &lvl : levels_) {
            if (lvl && *lvl > level) { lvl.reset(); }
        }
    }

private:
    Domain domain_;
    DlStore store_;
    std::vector<std::optional<unsigned>> levels_;
    bool inconsistent_ = false;
};

class LpHook : public LcHook {
public:
    using LcHook::LcHook;

    std::optional<std::vector<AtomId>> check(Assignment const &a, bool total) override {
        std::vector<std::size_t> indices;
        std::vector<Active> act;
        for (std::size_t i = 0; i < setting_.atoms.size(); ++i) {
            if (!ready(a, i)) { continue; }
            indices.push_back(i);
            act.push_back(active(a, i));
        }
        std::vector<std::pair<std::size_t, bool>> key;
        for (std::size_t j = 0; j < indices.size(); ++j) { key.emplace_back(indices[j], act[j].negated); }
        if (!total && key == last_sat_) { return std::nullopt; }
        auto res = check_lp(prg_, act, opts_);
        if (res.sat) {
            last_sat_ = std::move(key);
            if (total) { witness_ = complete(prg_, std::move(res.witness)); }
            return std::nullopt;
        }
        std::vector<AtomId> conflict;
        for (auto idx : res.conflict) { conflict.insert(conflict.end(), act[idx].reason.begin(), act[idx].reason.end()); }
        return conflict;
    }

    void undo(unsigned) override {}

private:
    std::vector<std::pair<std::size_t, bool>> last_sat_{{~std::size_t(0), false}};
};

} // namespace

std::vector<LcModel> enumerate_lazy(GroundProgram const &prg, SemanticSetting const &setting, LcOptions const &opts) {
    Theory theory = resolve_theory(prg, opts.theory.theory);
    GroundProgram ext = prg;
    for (AtomId atom : setting.atoms) {
        if (!setting.is_defined(atom)) { ext.add_rule(GroundRule::choice({atom})); }
    }
    std::unique_ptr<LcHook> hook;
    if (theory == Theory::dl) {
        if (!prg.objectives.empty()) { throw SemanticError("objectives require the lp theory"); }
        hook = std::make_unique<DlHook>(ext, setting, opts.theory);
    }
    else {
        hook = std::make_unique<LpHook>(ext, setting, opts.theory);
    }
    std::vector<LcModel> models;
    Solver solver(ext, hook.get());
    solver.set_deadline(opts.deadline);
    solver.solve([&](Interpretation const &x) {
        LcModel model{x, hook->witness(), std::nullopt, std::nullopt, false};
        optimize_model(prg, setting, model, opts.theory);
        models.push_back(std::move(model));
        return opts.limit == 0 || models.size() < opts.limit;
    });
    sort_lc_models(prg, models);
    return models;
}

bool validate_witness(GroundProgram const &prg, SemanticSetting const &setting, Interpretation const &x,
                      Valuation const &witness) {
    Holds holds = [&](AtomId a) { return x.count(a) > 0; };
    for (AtomId atom : setting.atoms) {
        bool in = x.count(atom) > 0;
        if (!in && !setting.is_strict(atom)) { continue; }
        bool sat = satisfied(constraint_with(prg, atom, holds), witness);
        if (sat != in) { return false; }
    }
    for (auto const &[var, val] : witness) {
        bool real = prg.is_real(var);
        if (!real && !is_integral(val)) { return false; }
    }
    return true;
}

// {{{1 propositions

char const *to_string(Preset preset) {
    switch (preset) {
        case Preset::defined_strict: return "defined-strict";
        case Preset::defined_nonstrict: return "defined-nonstrict";
        case Preset::external_strict: return "external-strict";
        case Preset::external_nonstrict: return "external-nonstrict";
    }
    return "";
}

std::optional<Preset> parse_preset(std::string_view text) {
    for (auto preset : {Preset::defined_strict, Preset::defined_nonstrict, Preset::external_strict,
                        Preset::external_nonstrict}) {
        if (text == to_string(preset)) { return preset; }
    }
    return std::nullopt;
}

StrictPolicy policy_of(Preset preset) {
    return preset == Preset::defined_strict || preset == Preset::external_strict ? StrictPolicy::all_strict()
                                                                                 : StrictPolicy::all_nonstrict();
}

std::uint64_t program_hash(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

PropositionReport check_propositions(std::size_t count, std::uint64_t seed, TheoryOptions const &opts,
                                     bool compare_lazy) {
    PropositionReport report;
    auto names = [](GroundProgram const &prg, auto const &models) {
        std::set<std::vector<std::string>> res;
        for (auto const &m : models) {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, LcModel>) { res.insert(atom_names(prg, m.atoms)); }
            else { res.insert(atom_names(prg, m)); }
        }
        return res;
    };
    auto subset = [](auto const &a, auto const &b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
    LcOptions lc;
    lc.theory = opts;
    lc.theory.epsilon_explicit = true;
    for (std::size_t i = 0; i < count; ++i) {
        for (auto preset : {Preset::defined_strict, Preset::defined_nonstrict, Preset::external_strict,
                            Preset::external_nonstrict}) {
            RandomProgramOptions ro;
            ro.defined = preset == Preset::defined_strict || preset == Preset::defined_nonstrict;
            std::string text =
                syntax::print_program(syntax::parse_program(random_program(mix_seed(seed, i, static_cast<int>(preset)), ro)));
            GroundProgram prg = ground(syntax::parse_program(text));
            auto violation = [&](char const *claim) {
                report.violations.push_back(Violation{preset, claim, program_hash(text), text});
            };
            auto setting = signature(prg, policy_of(preset));
            auto lc_models = names(prg, enumerate_reference(prg, setting, lc));
            auto nonstrict = names(prg, enumerate_reference(prg, signature(prg, StrictPolicy::all_nonstrict()), lc));
            auto sm = names(prg, enumerate_stable_models(prg));
            ++report.programs;
            bool all_defined = std::all_of(setting.atoms.begin(), setting.atoms.end(),
                                           [&](AtomId atom) { return setting.is_defined(atom); });
            bool external_nonstrict = std::none_of(setting.atoms.begin(), setting.atoms.end(), [&](AtomId atom) {
                return setting.is_defined(atom) || setting.is_strict(atom);
            });
            if (all_defined) {
                ++report.checks["1.1"];
                if (!subset(lc_models, sm)) { violation("1.1"); }
            }
            if (external_nonstrict) {
                ++report.checks["1.2"];
                if (!subset(sm, lc_models)) { violation("1.2"); }
            }
            ++report.checks["1.3"];
            if (!subset(lc_models, nonstrict)) { violation("1.3"); }
            if (compare_lazy) {
                ++report.checks["lazy"];
                if (names(prg, enumerate_lazy(prg, setting, lc)) != lc_models) { violation("lazy"); }
            }
        }
    }
    return report;
}

} // namespace lcasp
