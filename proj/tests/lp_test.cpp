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
#include "oracles.hpp"

#include <lcasp/lp.hpp>

#include <catch_amalgamated.hpp>

#include <random>

namespace lcasp::test {

namespace {

LinearConstraint row(LinearSum terms, Relation rel, Rational rhs) { return LinearConstraint{std::move(terms), rel, std::move(rhs)}; }

LpProblem problem(std::vector<LinearConstraint> cs, Domain domain = Domain::real) {
    LpProblem p;
    p.constraints = std::move(cs);
    p.default_domain = domain;
    return p;
}

} // namespace

TEST_CASE("Normalization", "[lp]") {
    Rational eps(1, 1000);
    auto lt = normalize(row({{1, "x"}}, Relation::lt, Rational(9, 2)), eps);
    REQUIRE(lt.size() == 1);
    REQUIRE(lt[0] == std::vector<LinearConstraint>{row({{1, "x"}}, Relation::le, Rational(4499, 1000))});
    auto eq = normalize(row({{1, "x"}}, Relation::eq, 2), eps);
    REQUIRE(eq == std::vector<std::vector<LinearConstraint>>{
                      {row({{1, "x"}}, Relation::le, 2), row({{1, "x"}}, Relation::ge, 2)}});
    auto ne = normalize(row({{1, "x"}}, Relation::ne, 2), eps);
    REQUIRE(ne.size() == 2);
    REQUIRE(ne[0] == std::vector<LinearConstraint>{row({{1, "x"}}, Relation::le, 2 - eps)});
    REQUIRE(ne[1] == std::vector<LinearConstraint>{row({{1, "x"}}, Relation::ge, 2 + eps)});
    auto gt = normalize(row({{1, "x"}, {2, "y"}, {-1, "x"}}, Relation::gt, 0), eps);
    REQUIRE(gt[0][0] == row({{2, "y"}}, Relation::ge, eps));
}

TEST_CASE("Satisfiability", "[lp]") {
    SECTION("single bound") {
        auto res = check_sat(problem({row({{Rational(3, 2), "x"}}, Relation::le, 7)}));
        REQUIRE(res.status == LpStatus::sat);
        REQUIRE(res.witness.at("x") <= Rational(14, 3));
        REQUIRE(satisfied(row({{Rational(3, 2), "x"}}, Relation::le, 7), {{"x", Rational(21, 5)}}));
    }
    SECTION("contradicting bounds") {
        REQUIRE(check_sat(problem({row({{1, "x"}}, Relation::le, 1), row({{1, "x"}}, Relation::ge, 2)})).status ==
                LpStatus::unsat);
    }
    SECTION("integrality") {
        auto p = problem({row({{2, "x"}}, Relation::eq, 1)});
        REQUIRE(check_sat(p).status == LpStatus::sat);
        p.default_domain = Domain::integer;
        REQUIRE(check_sat(p).status == LpStatus::unsat);
        auto q = problem({row({{2, "x"}, {-2, "y"}}, Relation::ge, 1), row({{2, "x"}, {-2, "y"}}, Relation::le, 1)},
                         Domain::integer);
        REQUIRE(check_sat(q).status == LpStatus::unsat);
    }
    SECTION("box bounds") {
        auto p = problem({row({{1, "x"}}, Relation::ge, 3)});
        p.bounds["x"] = {Rational(0), Rational(2)};
        REQUIRE(check_sat(p).status == LpStatus::unsat);
        p.bounds["x"].second = Rational(5);
        auto res = check_sat(p);
        REQUIRE(res.status == LpStatus::sat);
        REQUIRE(satisfies_problem(p, res.witness));
    }
    SECTION("mixed domains") {
        auto p = problem({row({{1, "x"}, {1, "y"}}, Relation::eq, Rational(1, 2)), row({{1, "x"}}, Relation::ge, Rational(1, 3))});
        p.domains["x"] = Domain::integer;
        auto res = check_sat(p);
        REQUIRE(res.status == LpStatus::sat);
        REQUIRE(satisfies_problem(p, res.witness));
    }
    SECTION("node limit") {
        // 2x - 2y = 1 has no integer solution but every box around the
        // relaxation keeps a fractional vertex.
        auto p = problem({row({{2, "x"}, {-2, "y"}, {1, "z"}}, Relation::eq, 1), row({{1, "z"}}, Relation::ge, Rational(1, 3)),
                          row({{1, "z"}}, Relation::le, Rational(2, 3))},
                         Domain::integer);
        p.domains["z"] = Domain::real;
        p.node_limit = 1;
        auto verdict = [&] {
            try {
                return check_sat(p).status == LpStatus::unsat ? 0 : 1;
            }
            catch (LimitError const &) {
                return 2;
            }
        }();
        REQUIRE(verdict != 1);
    }
}

TEST_CASE("Optimization", "[lp]") {
    SECTION("bounded") {
        auto p = problem({row({{1, "x"}}, Relation::le, Rational(7, 2))});
        p.objective = LpObjective{true, {{1, "x"}}};
        auto res = optimize(p);
        REQUIRE(res.status == LpStatus::sat);
        REQUIRE(res.value == Rational(7, 2));
        REQUIRE(res.witness.at("x") == Rational(7, 2));
        p.default_domain = Domain::integer;
        REQUIRE(optimize(p).value == 3);
    }
    SECTION("unbounded") {
        auto p = problem({});
        p.objective = LpObjective{true, {{1, "x"}}};
        REQUIRE(optimize(p).status == LpStatus::unbounded);
    }
    SECTION("infeasible") {
        auto p = problem({row({{1, "x"}}, Relation::le, 1), row({{1, "x"}}, Relation::ge, 2)});
        p.objective = LpObjective{false, {{1, "x"}}};
        REQUIRE(optimize(p).status == LpStatus::unsat);
    }
    SECTION("vertex enumeration") {
        std::vector<LinearConstraint> cs{row({{1, "x"}}, Relation::ge, 1), row({{1, "y"}}, Relation::ge, 2),
                                         row({{1, "x"}, {1, "y"}}, Relation::ge, 4)};
        // Vertices are intersections of pairs of tight rows.
        std::vector<std::pair<Rational, Rational>> vertices{{1, 3}, {2, 2}};
        Rational best = 1000;
        for (auto const &[x, y] : vertices) {
            Valuation v{{"x", x}, {"y", y}};
            bool feasible = std::all_of(cs.begin(), cs.end(), [&](auto const &c) { return satisfied(c, v); });
            if (feasible) { best = std::min(best, Rational(x + y)); }
        }
        auto p = problem(cs);
        p.objective = LpObjective{false, {{1, "x"}, {1, "y"}}};
        auto res = optimize(p);
        REQUIRE(res.status == LpStatus::sat);
        REQUIRE(res.value == best);
        REQUIRE(res.value == 4);
        REQUIRE(satisfies_problem(p, res.witness));
    }
    SECTION("maximum dominates feasible points") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 200; ++i) {
            auto p = random_system(rng, i % 2 ? Domain::real : Domain::integer);
            auto sat = check_sat(p);
            if (sat.status != LpStatus::sat) { continue; }
            LinearSum obj;
            for (auto const &var : p.variables()) { obj.emplace_back(static_cast<int>(rng() % 5) - 2, var); }
            p.objective = LpObjective{true, obj};
            auto res = optimize(p);
            REQUIRE(res.status == LpStatus::sat);
            REQUIRE(satisfies_problem(p, res.witness));
            REQUIRE(res.value == evaluate(obj, res.witness));
            REQUIRE(res.value >= evaluate(obj, sat.witness));
        }
    }
}

TEST_CASE("Irreducible inconsistent subsets", "[lp]") {
    SECTION("irrelevant row") {
        auto p = problem({row({{1, "x"}}, Relation::le, 1), row({{1, "x"}}, Relation::ge, 2), row({{1, "y"}}, Relation::le, 0)});
        REQUIRE(iis(p) == std::vector<std::size_t>{0, 1});
    }
    SECTION("two candidates") {
        auto p = problem({row({{1, "x"}}, Relation::le, 1), row({{1, "x"}}, Relation::ge, 2), row({{1, "x"}}, Relation::ge, 3)});
        auto core = iis(p);
        REQUIRE(core.size() == 2);
        REQUIRE(core[0] == 0);
        for (std::size_t skip = 0; skip < core.size(); ++skip) {
            auto sub = problem({p.constraints[core[1 - skip]]});
            REQUIRE(check_sat(sub).status == LpStatus::sat);
        }
    }
    SECTION("satisfiable input") { REQUIRE_THROWS(iis(problem({row({{1, "x"}}, Relation::le, 1)}))); }
}

TEST_CASE("Random systems agree with the oracles", "[lp][property]") {
    for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
        REQUIRE(lp_trial(seed, Domain::real).empty());
        REQUIRE(lp_trial(seed, Domain::integer).empty());
    }
}

} // namespace lcasp::test
