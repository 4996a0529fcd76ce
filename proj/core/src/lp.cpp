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
#include <lcasp/lp.hpp>

#include <algorithm>
#include <stdexcept>

namespace lcasp {

// {{{1 constraints

LinearConstraint LinearConstraint::merged() const {
    std::map<std::string, Rational> sum;
    for (auto const &[coef, var] : terms) { sum[var] += coef; }
    LinearConstraint res{{}, relation, rhs};
    for (auto const &[var, coef] : sum) {
        if (coef != 0) { res.terms.emplace_back(coef, var); }
    }
    return res;
}

std::string to_string(LinearConstraint const &c) {
    std::string res;
    for (auto const &[coef, var] : c.terms) {
        if (!res.empty()) { res += coef < 0 ? " - " : " + "; }
        else if (coef < 0) { res += "-"; }
        Rational mag = abs(coef);
        if (mag != 1) { res += to_fraction(mag) + "*"; }
        res += var;
    }
    if (res.empty()) { res = "0"; }
    return res + " " + to_string(c.relation) + " " + to_fraction(c.rhs);
}

Rational evaluate(LinearSum const &terms, Valuation const &values) {
    Rational sum;
    for (auto const &[coef, var] : terms) {
        auto it = values.find(var);
        if (it != values.end()) { sum += coef * it->second; }
    }
    return sum;
}

bool satisfied(LinearConstraint const &c, Valuation const &values) {
    return holds(c.relation, evaluate(c.terms, values), c.rhs);
}

std::vector<std::vector<LinearConstraint>> normalize(LinearConstraint const &c, Rational const &epsilon) {
    LinearConstraint base = c.merged();
    auto with = [&](Relation rel, Rational rhs) { return LinearConstraint{base.terms, rel, std::move(rhs)}; };
    switch (c.relation) {
        case Relation::le:
        case Relation::ge: return {{base}};
        case Relation::lt: return {{with(Relation::le, c.rhs - epsilon)}};
        case Relation::gt: return {{with(Relation::ge, c.rhs + epsilon)}};
        case Relation::eq: return {{with(Relation::le, c.rhs), with(Relation::ge, c.rhs)}};
        case Relation::ne: return {{with(Relation::le, c.rhs - epsilon)}, {with(Relation::ge, c.rhs + epsilon)}};
    }
    return {};
}

Domain LpProblem::domain(std::string const &var) const {
    auto it = domains.find(var);
    return it != domains.end() ? it->second : default_domain;
}

std::set<std::string> LpProblem::variables() const {
    std::set<std::string> vars;
    for (auto const &c : constraints) {
        for (auto const &term : c.terms) { vars.insert(term.second); }
    }
    for (auto const &entry : bounds) { vars.insert(entry.first); }
    if (objective) {
        for (auto const &term : objective->terms) { vars.insert(term.second); }
    }
    return vars;
}

// {{{1 simplex

namespace {

using Bounds = std::map<std::string, std::pair<std::optional<Rational>, std::optional<Rational>>>;

enum class RelaxStatus { infeasible, optimal, unbounded };

struct Relaxation {
    RelaxStatus status = RelaxStatus::infeasible;
    Valuation values;
    Rational value;
};

//! Dense tableau in equality form with nonnegative columns; the last column
//! holds the right-hand side and `cost` the reduced costs (last entry minus
//! the objective value).
class Tableau {
public:
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> basis;
    std::vector<Rational> cost;
    std::size_t columns = 0;

    void pivot(std::size_t r, std::size_t c) {
        Rational p = rows[r][c];
        for (auto &val : rows[r]) { val /= p; }
        auto eliminate = [&](std::vector<Rational> &row) {
            if (row[c] == 0) { return; }
            Rational f = row[c];
            for (std::size_t j = 0; j <= columns; ++j) {
                if (rows[r][j] != 0) { row[j] -= f * rows[r][j]; }
            }
        };
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r) { eliminate(rows[i]); }
        }
        eliminate(cost);
        basis[r] = c;
    }

    //! Minimizes with Bland's rule over columns below `limit`. Returns false if unbounded.
    bool run(std::size_t limit) {
        while (true) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) { return true; }
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) { continue; }
                Rational ratio = rows[i][columns] / rows[i][enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) { return false; }
            pivot(*leave, enter);
        }
    }

    void set_cost(std::vector<Rational> const &c) {
        cost.assign(columns + 1, Rational(0));
        for (std::size_t j = 0; j < c.size(); ++j) { cost[j] = c[j]; }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Rational cb = basis[i] < c.size() ? c[basis[i]] : Rational(0);
            if (cb == 0) { continue; }
            for (std::size_t j = 0; j <= columns; ++j) { cost[j] -= cb * rows[i][j]; }
        }
    }

    Rational objective() const { return -cost[columns]; }
};

struct ColumnMap {
    enum class Kind { shifted, flipped, split } kind = Kind::split;
    std::size_t column = 0;
    Rational offset;
};

Relaxation relax(std::vector<LinearConstraint> const &constraints, std::vector<std::string> const &vars,
                 Bounds const &bounds, std::vector<Rational> const *cost) {
    Relaxation res;
    std::map<std::string, std::size_t> var_index;
    for (std::size_t i = 0; i < vars.size(); ++i) { var_index[vars[i]] = i; }

    std::vector<ColumnMap> maps(vars.size());
    std::size_t ncols = 0;
    struct Row {
        std::map<std::size_t, Rational> coefs;
        Relation relation;
        Rational rhs;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = bounds.find(vars[i]);
        std::optional<Rational> lower;
        std::optional<Rational> upper;
        if (it != bounds.end()) { std::tie(lower, upper) = it->second; }
        if (lower && upper && *lower > *upper) { return res; }
        auto &map = maps[i];
        map.column = ncols;
        if (lower) {
            map.kind = ColumnMap::Kind::shifted;
            map.offset = *lower;
            ncols += 1;
            if (upper) { rows.push_back(Row{{{map.column, Rational(1)}}, Relation::le, *upper - *lower}); }
        }
        else if (upper) {
            map.kind = ColumnMap::Kind::flipped;
            map.offset = *upper;
            ncols += 1;
        }
        else {
            map.kind = ColumnMap::Kind::split;
            ncols += 2;
        }
    }
    std::size_t structural = ncols;
    for (auto const &c : constraints) {
        if (c.relation != Relation::le && c.relation != Relation::ge && c.relation != Relation::eq) {
            throw std::invalid_argument("constraint is not normalized: " + to_string(c));
        }
        Row row{{}, c.relation, c.rhs};
        for (auto const &[coef, var] : c.terms) {
            auto const &map = maps[var_index.at(var)];
            switch (map.kind) {
                case ColumnMap::Kind::shifted:
                    row.coefs[map.column] += coef;
                    row.rhs -= coef * map.offset;
                    break;
                case ColumnMap::Kind::flipped:
                    row.coefs[map.column] -= coef;
                    row.rhs -= coef * map.offset;
                    break;
                case ColumnMap::Kind::split:
                    row.coefs[map.column] += coef;
                    row.coefs[map.column + 1] -= coef;
                    break;
            }
        }
        rows.push_back(std::move(row));
    }

    std::size_t m = rows.size();
    std::size_t slacks = 0;
    for (auto const &row : rows) { slacks += row.relation != Relation::eq ? 1 : 0; }
    std::size_t art_begin = structural + slacks;
    Tableau tab;
    tab.columns = art_begin + m;
    tab.rows.assign(m, std::vector<Rational>(tab.columns + 1, Rational(0)));
    tab.basis.resize(m);
    std::size_t slack = structural;
    for (std::size_t i = 0; i < m; ++i) {
        auto &trow = tab.rows[i];
        for (auto const &[col, coef] : rows[i].coefs) { trow[col] = coef; }
        if (rows[i].relation == Relation::le) { trow[slack++] = 1; }
        else if (rows[i].relation == Relation::ge) { trow[slack++] = -1; }
        trow[tab.columns] = rows[i].rhs;
        if (rows[i].rhs < 0) {
            for (auto &val : trow) { val = -val; }
        }
        trow[art_begin + i] = 1;
        tab.basis[i] = art_begin + i;
    }

    std::vector<Rational> phase1(tab.columns, Rational(0));
    for (std::size_t i = 0; i < m; ++i) { phase1[art_begin + i] = 1; }
    tab.set_cost(phase1);
    tab.run(tab.columns);
    if (tab.objective() > 0) { return res; }

    for (std::size_t i = 0; i < tab.rows.size();) {
        if (tab.basis[i] < art_begin) {
            ++i;
            continue;
        }
        std::size_t col = art_begin;
        for (std::size_t j = 0; j < art_begin; ++j) {
            if (tab.rows[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col < art_begin) {
            tab.pivot(i, col);
            ++i;
        }
        else {
            tab.rows.erase(tab.rows.begin() + static_cast<std::ptrdiff_t>(i));
            tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    std::vector<Rational> phase2(art_begin, Rational(0));
    Rational constant;
    if (cost != nullptr) {
        for (std::size_t v = 0; v < vars.size(); ++v) {
            Rational c = (*cost)[v];
            auto const &map = maps[v];
            switch (map.kind) {
                case ColumnMap::Kind::shifted:
                    phase2[map.column] += c;
                    constant += c * map.offset;
                    break;
                case ColumnMap::Kind::flipped:
                    phase2[map.column] -= c;
                    constant += c * map.offset;
                    break;
                case ColumnMap::Kind::split:
                    phase2[map.column] += c;
                    phase2[map.column + 1] -= c;
                    break;
            }
        }
    }
    tab.set_cost(phase2);
    if (!tab.run(art_begin)) {
        res.status = RelaxStatus::unbounded;
        return res;
    }

    std::vector<Rational> y(tab.columns, Rational(0));
    for (std::size_t i = 0; i < tab.rows.size(); ++i) { y[tab.basis[i]] = tab.rows[i][tab.columns]; }
    for (std::size_t v = 0; v < vars.size(); ++v) {
        auto const &map = maps[v];
        Rational val;
        switch (map.kind) {
            case ColumnMap::Kind::shifted: val = map.offset + y[map.column]; break;
            case ColumnMap::Kind::flipped: val = map.offset - y[map.column]; break;
            case ColumnMap::Kind::split: val = y[map.column] - y[map.column + 1]; break;
        }
        res.values[vars[v]] = val;
    }
    res.status = RelaxStatus::optimal;
    res.value = tab.objective() + constant;
    return res;
}

std::vector<std::string> variable_list(LpProblem const &problem) {
    auto vars = problem.variables();
    return {vars.begin(), vars.end()};
}

std::optional<std::string> fractional(LpProblem const &problem, Valuation const &values) {
    for (auto const &[var, val] : values) {
        if (problem.domain(var) == Domain::integer && !is_integral(val)) { return var; }
    }
    return std::nullopt;
}

//! Pushes both children; the one nearer to `val` is explored first.
void branch(std::vector<Bounds> &stack, Bounds const &bounds, std::string const &var, Rational const &val) {
    Bounds up = bounds;
    up[var].first = Rational(ceil(val));
    Bounds down = bounds;
    down[var].second = Rational(floor(val));
    if (val - Rational(floor(val)) < Rational(1, 2)) { std::swap(up, down); }
    stack.push_back(std::move(down));
    stack.push_back(std::move(up));
}

//! Scales rows over integer variables only to coprime integer coefficients
//! and rounds the right-hand side accordingly.
std::vector<LinearConstraint> tighten(LpProblem const &problem) {
    std::vector<LinearConstraint> res;
    for (auto const &c : problem.constraints) {
        bool integral = !c.terms.empty() && std::all_of(c.terms.begin(), c.terms.end(), [&](auto const &term) {
            return problem.domain(term.second) == Domain::integer;
        });
        if (!integral) {
            res.push_back(c);
            continue;
        }
        Integer den = 1;
        for (auto const &term : c.terms) { den = lcm(den, term.first.get_den()); }
        Integer gcd_num = 0;
        for (auto const &term : c.terms) { gcd_num = gcd(gcd_num, Integer(term.first * den)); }
        Rational scale = Rational(den) / Rational(gcd_num);
        LinearConstraint t{{}, c.relation, c.rhs * scale};
        for (auto const &[coef, var] : c.terms) { t.terms.emplace_back(coef * scale, var); }
        switch (c.relation) {
            case Relation::le: t.rhs = floor(t.rhs); break;
            case Relation::ge: t.rhs = ceil(t.rhs); break;
            case Relation::eq:
                if (!is_integral(t.rhs)) { t = LinearConstraint{{}, Relation::le, Rational(-1)}; }
                break;
            default: break;
        }
        res.push_back(std::move(t));
    }
    return res;
}

//! Integer equalities are removed by unimodular substitutions: every original
//! variable becomes an affine expression over the remaining variables.
class Reduction {
public:
    explicit Reduction(LpProblem problem)
        : problem_(std::move(problem)) {
        for (auto const &var : problem_.variables()) { exprs_[var] = Affine{{{var, Rational(1)}}, Rational(0)}; }
        problem_.constraints = tighten(problem_);
    }

    LpProblem const &problem() const { return problem_; }

    //! Returns false if the problem was found to be infeasible.
    bool run() {
        while (auto eq = find_equality()) {
            if (!bounds_moved_) { move_bounds(); }
            if (!eliminate(eq->first, eq->second)) { return false; }
        }
        return true;
    }

    //! Constant part of the objective contributed by fixed variables.
    Rational const &objective_offset() const { return offset_; }

    Valuation restore(Valuation const &values) const {
        Valuation res;
        for (auto const &[var, expr] : exprs_) {
            Rational val = expr.constant;
            for (auto const &[t, coef] : expr.terms) {
                auto it = values.find(t);
                if (it != values.end()) { val += coef * it->second; }
            }
            res[var] = val;
        }
        return res;
    }

private:
    struct Affine {
        std::map<std::string, Rational> terms;
        Rational constant;
    };

    bool integral(LinearConstraint const &c) const {
        return std::all_of(c.terms.begin(), c.terms.end(),
                           [&](auto const &term) { return problem_.domain(term.second) == Domain::integer; });
    }

    //! An integer equality over at least two variables implied by a pair of rows.
    std::optional<std::pair<LinearSum, Rational>> find_equality() const {
        std::map<LinearSum, std::pair<std::optional<Rational>, std::optional<Rational>>> ranges;
        for (auto const &c : problem_.constraints) {
            if (c.terms.size() < 2 || !integral(c)) { continue; }
            LinearSum key = c.terms;
            Rational rhs = c.rhs;
            Relation rel = c.relation;
            if (key.front().first < 0) {
                for (auto &term : key) { term.first = -term.first; }
                rhs = -rhs;
                rel = mirror(rel);
            }
            auto &[lower, upper] = ranges[key];
            if (rel == Relation::le || rel == Relation::eq) { upper = upper ? std::min(*upper, rhs) : rhs; }
            if (rel == Relation::ge || rel == Relation::eq) { lower = lower ? std::max(*lower, rhs) : rhs; }
            if (lower && upper && *lower == *upper) { return std::make_pair(key, rhs); }
        }
        return std::nullopt;
    }

    void move_bounds() {
        for (auto const &[var, range] : problem_.bounds) {
            if (range.first) { problem_.constraints.push_back({{{Rational(1), var}}, Relation::ge, *range.first}); }
            if (range.second) { problem_.constraints.push_back({{{Rational(1), var}}, Relation::le, *range.second}); }
        }
        problem_.bounds.clear();
        bounds_moved_ = true;
    }

    //! Replaces `t` by `t - q*u` everywhere.
    void shift(std::string const &t, std::string const &u, Rational const &q) {
        auto update = [&](std::map<std::string, Rational> &terms) {
            auto it = terms.find(t);
            if (it == terms.end()) { return; }
            Rational &coef = terms[u];
            coef -= q * it->second;
            if (coef == 0) { terms.erase(u); }
        };
        apply(update);
    }

    //! Replaces `t` by the constant `value` everywhere.
    void fix(std::string const &t, Rational const &value) {
        for (auto &c : problem_.constraints) {
            auto it = std::find_if(c.terms.begin(), c.terms.end(), [&](auto const &term) { return term.second == t; });
            if (it == c.terms.end()) { continue; }
            c.rhs -= it->first * value;
            c.terms.erase(it);
        }
        for (auto &[var, expr] : exprs_) {
            auto it = expr.terms.find(t);
            if (it == expr.terms.end()) { continue; }
            expr.constant += it->second * value;
            expr.terms.erase(it);
        }
        if (problem_.objective) {
            auto &terms = problem_.objective->terms;
            for (auto it = terms.begin(); it != terms.end();) {
                if (it->second == t) {
                    offset_ += it->first * value;
                    it = terms.erase(it);
                }
                else {
                    ++it;
                }
            }
        }
    }

    template <class F>
    void apply(F const &update) {
        auto on_sum = [&](LinearSum &sum) {
            std::map<std::string, Rational> terms;
            for (auto const &[coef, var] : sum) { terms[var] += coef; }
            update(terms);
            sum.clear();
            for (auto const &[var, coef] : terms) {
                if (coef != 0) { sum.emplace_back(coef, var); }
            }
        };
        for (auto &c : problem_.constraints) { on_sum(c.terms); }
        if (problem_.objective) { on_sum(problem_.objective->terms); }
        for (auto &[var, expr] : exprs_) { update(expr.terms); }
    }

    bool eliminate(LinearSum terms, Rational rhs) {
        Integer den = 1;
        for (auto const &term : terms) { den = lcm(den, term.first.get_den()); }
        std::map<std::string, Integer> coefs;
        for (auto const &[coef, var] : terms) { coefs[var] = Integer(coef * den); }
        rhs *= den;
        while (true) {
            auto pivot = std::min_element(coefs.begin(), coefs.end(), [](auto const &a, auto const &b) {
                return abs(a.second) < abs(b.second);
            });
            if (coefs.size() == 1) {
                Integer a = pivot->second;
                if (!is_integral(rhs) || rhs.get_num() % a != 0) { return false; }
                fix(pivot->first, Rational(rhs / a));
                retighten();
                return true;
            }
            std::string t = pivot->first;
            Integer a = pivot->second;
            for (auto it = coefs.begin(); it != coefs.end();) {
                if (it->first == t) {
                    ++it;
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), a.get_mpz_t());
                shift(t, it->first, Rational(q));
                it->second -= q * a;
                it = it->second == 0 ? coefs.erase(it) : std::next(it);
            }
        }
    }

    void retighten() { problem_.constraints = tighten(problem_); }

    LpProblem problem_;
    std::map<std::string, Affine> exprs_;
    Rational offset_;
    bool bounds_moved_ = false;
};

//! For systems over integer variables only: a bound on the absolute values
//! that suffices to find an integer solution if there is one, namely (n+1)
//! times the largest subdeterminant of the coefficient matrix extended by the
//! right-hand sides (estimated by Hadamard's inequality).
std::optional<Integer> integer_box(LpProblem const &problem, std::vector<std::string> const &vars) {
    if (vars.empty() || std::any_of(vars.begin(), vars.end(), [&](auto const &var) {
            return problem.domain(var) != Domain::integer;
        })) {
        return std::nullopt;
    }
    std::vector<Integer> norms;
    auto add_row = [&](std::vector<Rational> row) {
        Integer den = 1;
        for (auto const &val : row) { den = lcm(den, val.get_den()); }
        Integer squares = 0;
        for (auto const &val : row) {
            Integer scaled = Rational(val * den).get_num();
            squares += scaled * scaled;
        }
        Integer root = sqrt(squares);
        if (root * root < squares) { root += 1; }
        norms.push_back(root);
    };
    for (auto const &c : problem.constraints) {
        std::vector<Rational> row;
        for (auto const &term : c.terms) { row.push_back(term.first); }
        row.push_back(c.rhs);
        add_row(std::move(row));
    }
    for (auto const &[var, range] : problem.bounds) {
        if (range.first) { add_row({Rational(1), *range.first}); }
        if (range.second) { add_row({Rational(1), *range.second}); }
    }
    std::sort(norms.begin(), norms.end(), std::greater<>());
    Integer delta = 1;
    for (std::size_t i = 0; i < norms.size() && i <= vars.size(); ++i) {
        if (norms[i] > 0) { delta *= norms[i]; }
    }
    return Integer(static_cast<unsigned long>(vars.size() + 1)) * delta;
}

std::vector<Rational> cost_vector(LpProblem const &problem, std::vector<std::string> const &vars) {
    std::vector<Rational> cost(vars.size(), Rational(0));
    for (auto const &[coef, var] : problem.objective->terms) {
        auto pos = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), var) - vars.begin());
        cost[pos] += problem.objective->maximize ? Rational(-coef) : coef;
    }
    return cost;
}

} // namespace

// {{{1 solving

LpResult check_sat(LpProblem const &input) {
    Reduction red(input);
    if (!red.run()) { return LpResult{}; }
    auto const &problem = red.problem();
    auto vars = variable_list(problem);
    if (relax(problem.constraints, vars, problem.bounds, nullptr).status == RelaxStatus::infeasible) { return LpResult{}; }
    std::size_t nodes = 0;
    auto search = [&](Bounds const &root) -> std::optional<Valuation> {
        std::vector<Bounds> stack{root};
        while (!stack.empty()) {
            Bounds bounds = std::move(stack.back());
            stack.pop_back();
            if (++nodes > problem.node_limit) { throw LimitError("branch-and-bound node limit exceeded"); }
            auto rel = relax(problem.constraints, vars, bounds, nullptr);
            if (rel.status == RelaxStatus::infeasible) { continue; }
            if (auto var = fractional(problem, rel.values)) {
                branch(stack, bounds, *var, rel.values.at(*var));
                continue;
            }
            return std::move(rel.values);
        }
        return std::nullopt;
    };
    auto limit = integer_box(problem, vars);
    if (!limit) {
        auto values = search(problem.bounds);
        return values ? LpResult{LpStatus::sat, red.restore(*values), {}} : LpResult{};
    }
    for (Integer size = 16;; size *= 16) {
        if (size > *limit) { size = *limit; }
        Bounds box = problem.bounds;
        for (auto const &var : vars) {
            auto &[lower, upper] = box[var];
            if (!lower || *lower < -size) { lower = Rational(-size); }
            if (!upper || *upper > size) { upper = Rational(size); }
        }
        if (auto values = search(box)) { return LpResult{LpStatus::sat, red.restore(*values), {}}; }
        if (size == *limit) { return LpResult{}; }
    }
}

LpResult optimize(LpProblem const &input) {
    if (!input.objective) { throw std::invalid_argument("optimize requires an objective"); }
    Reduction red(input);
    if (!red.run()) { return LpResult{}; }
    auto const &problem = red.problem();
    auto vars = variable_list(problem);
    auto cost = cost_vector(problem, vars);
    auto finish = [&](Relaxation rel) {
        Rational value = (problem.objective->maximize ? Rational(-rel.value) : rel.value) + red.objective_offset();
        return LpResult{LpStatus::sat, red.restore(rel.values), value};
    };
    bool integral = std::any_of(vars.begin(), vars.end(),
                                [&](std::string const &var) { return problem.domain(var) == Domain::integer; });
    if (!integral) {
        auto rel = relax(problem.constraints, vars, problem.bounds, &cost);
        if (rel.status == RelaxStatus::infeasible) { return LpResult{}; }
        if (rel.status == RelaxStatus::unbounded) { return LpResult{LpStatus::unbounded, {}, {}}; }
        return finish(std::move(rel));
    }
    if (check_sat(problem).status == LpStatus::unsat) { return LpResult{}; }
    if (relax(problem.constraints, vars, problem.bounds, &cost).status == RelaxStatus::unbounded) {
        return LpResult{LpStatus::unbounded, {}, {}};
    }
    std::optional<Relaxation> best;
    std::vector<Bounds> stack{problem.bounds};
    std::size_t nodes = 0;
    while (!stack.empty()) {
        Bounds bounds = std::move(stack.back());
        stack.pop_back();
        if (++nodes > problem.node_limit) { throw LimitError("branch-and-bound node limit exceeded"); }
        auto rel = relax(problem.constraints, vars, bounds, &cost);
        if (rel.status != RelaxStatus::optimal || (best && rel.value >= best->value)) { continue; }
        if (auto var = fractional(problem, rel.values)) {
            branch(stack, bounds, *var, rel.values.at(*var));
            continue;
        }
        best = std::move(rel);
    }
    if (!best) { return LpResult{}; }
    return finish(std::move(*best));
}

std::vector<std::size_t> iis(LpProblem const &problem) {
    if (check_sat(problem).status == LpStatus::sat) { throw std::invalid_argument("iis of a satisfiable problem"); }
    std::vector<std::size_t> keep(problem.constraints.size());
    for (std::size_t i = 0; i < keep.size(); ++i) { keep[i] = i; }
    LpProblem sub = problem;
    sub.objective.reset();
    for (std::size_t pos = 0; pos < keep.size();) {
        sub.constraints.clear();
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if (j != pos) { sub.constraints.push_back(problem.constraints[keep[j]]); }
        }
        if (check_sat(sub).status == LpStatus::unsat) { keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(pos)); }
        else { ++pos; }
    }
    return keep;
}

} // namespace lcasp
