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

#include <lcasp/dl.hpp>

#include <catch_amalgamated.hpp>


namespace lcasp::test {

namespace {

DiffConstraint dc(std::string x, std::string y, Rational k, bool strict = false) {
    return DiffConstraint{std::move(x), std::move(y), std::move(k), strict};
}

Rational abs_sum(std::map<std::string, Rational> const &w) {
    Rational res;
    for (auto const &[var, value] : w) { res += abs(value); }
    return res;
}

} // namespace

TEST_CASE("Difference constraint assertion", "[dl]") {
    DlStore store;
    SECTION("negative cycle") {
        REQUIRE(store.assert_constraint(dc("x", "y", 3), 0).sat);
        auto res = store.assert_constraint(dc("y", "x", -5), 0);
        REQUIRE_FALSE(res.sat);
        std::set<std::string> conflict;
        for (auto const &c : res.conflict) { conflict.insert(to_string(c)); }
        REQUIRE(conflict == std::set<std::string>{"x-y<=3", "y-x<=-5"});
        REQUIRE(store.size() == 1);
    }
    SECTION("non-negative cycle") {
        REQUIRE(store.assert_constraint(dc("x", "y", 3), 0).sat);
        REQUIRE(store.assert_constraint(dc("y", "x", -1), 0).sat);
        auto w = store.witness();
        REQUIRE(satisfied(dc("x", "y", 3), w));
        REQUIRE(satisfied(dc("y", "x", -1), w));
    }
    SECTION("self loops") {
        REQUIRE(store.assert_constraint(dc("x", "x", 0), 0).sat);
        REQUIRE_FALSE(store.assert_constraint(dc("x", "x", 0, true), 0).sat);
        REQUIRE_FALSE(store.assert_constraint(dc("x", "x", -1), 0).sat);
    }
    SECTION("tags are reported") {
        REQUIRE(store.assert_constraint(dc("a", "b", 1), 0, 7).sat);
        REQUIRE(store.assert_constraint(dc("b", "c", 1), 0, 8).sat);
        auto res = store.assert_constraint(dc("c", "a", -3), 0, 9);
        REQUIRE_FALSE(res.sat);
        std::set<std::size_t> tags(res.tags.begin(), res.tags.end());
        REQUIRE(tags == std::set<std::size_t>{7, 8, 9});
    }
    SECTION("strict over the reals needs epsilon") {
        DlStore real(Domain::real);
        REQUIRE(real.assert_constraint(dc("x", "y", 1), 0).sat);
        REQUIRE_THROWS(real.assert_constraint(dc("x", "y", 1, true), 0));
        DlStore eps(Domain::real, Rational(1, 1000));
        REQUIRE(eps.assert_constraint(dc("x", "y", 0, true), 0).sat);
        REQUIRE(eps.weight(dc("x", "y", 0, true)) == Rational(-1, 1000));
        REQUIRE_FALSE(eps.assert_constraint(dc("y", "x", 0), 0).sat);
    }
}

TEST_CASE("Backtracking", "[dl]") {
    DlStore store;
    REQUIRE(store.assert_constraint(dc("x", "y", 2), 1).sat);
    REQUIRE(store.assert_constraint(dc("y", "z", -4), 2).sat);
    SECTION("to an earlier level") {
        store.backtrack(1);
        REQUIRE(store.constraints() == std::vector<DiffConstraint>{dc("x", "y", 2)});
        REQUIRE(store.assert_constraint(dc("z", "y", 3), 1).sat);
        DlStore fresh;
        fresh.assert_constraint(dc("x", "y", 2), 1);
        REQUIRE(fresh.assert_constraint(dc("z", "y", 3), 1).sat);
        REQUIRE(store.witness() == fresh.witness());
    }
    SECTION("to the current level") {
        store.backtrack(2);
        REQUIRE(store.size() == 2);
    }
    SECTION("after a conflict") {
        REQUIRE_FALSE(store.assert_constraint(dc("z", "x", 1), 3).sat);
        store.backtrack(0);
        REQUIRE(store.size() == 0);
        REQUIRE(store.assert_constraint(dc("z", "x", 1), 1).sat);
        REQUIRE(store.assert_constraint(dc("x", "z", 0), 1).sat);
        auto w = store.witness();
        for (auto const &c : store.constraints()) { REQUIRE(satisfied(c, w)); }
    }
}

TEST_CASE("Negation", "[dl]") {
    auto c = dc("x", "y", 7);
    REQUIRE(negate(c, Domain::integer, 1) == dc("y", "x", -8));
    REQUIRE(negate(c, Domain::real, Rational(1, 1000)) == dc("y", "x", Rational(-7001, 1000)));
    REQUIRE(negate(dc("x", "y", 7, true), Domain::real, Rational(1, 1000)) == dc("y", "x", -7));
    SECTION("involution over integers") {
        for (int k = -4; k <= 4; ++k) {
            for (bool strict : {false, true}) {
                auto orig = dc("x", "y", k, strict);
                auto twice = negate(negate(orig, Domain::integer, 1), Domain::integer, 1);
                for (int x = -10; x <= 10; ++x) {
                    std::map<std::string, Rational> w{{"x", x}, {"y", 0}};
                    REQUIRE(satisfied(orig, w) == satisfied(twice, w));
                    REQUIRE(satisfied(orig, w) != satisfied(negate(orig, Domain::integer, 1), w));
                }
            }
        }
    }
}

TEST_CASE("Witness", "[dl]") {
    SECTION("empty store") { REQUIRE(DlStore().witness().empty()); }
    SECTION("single constraint") {
        DlStore store;
        store.assert_constraint(dc("x", "y", -1), 0);
        auto w = store.witness();
        REQUIRE(satisfied(dc("x", "y", -1), w));
        // Smallest |x|+|y| over [-5,5]^2 subject to x-y <= -1.
        Rational best = 100;
        for (int x = -5; x <= 5; ++x) {
            for (int y = -5; y <= 5; ++y) {
                if (x - y <= -1) { best = std::min(best, Rational(std::abs(x) + std::abs(y))); }
            }
        }
        REQUIRE(best == 1);
        REQUIRE(abs_sum(w) == best);
        // Upper median of the potentials {x=-1, y=0} is 0, so no shift.
        REQUIRE(w == std::map<std::string, Rational>{{"x", -1}, {"y", 0}});
    }
    SECTION("zero vertex pins its component") {
        DlStore store;
        store.assert_constraint(dc("0", "x", -3), 0);
        store.assert_constraint(dc("x", "0", 10), 0);
        auto w = store.witness();
        REQUIRE(w.count("0") == 0);
        REQUIRE(w.at("x") >= 3);
    }
    SECTION("Yale plan") {
        DlStore store;
        std::vector<DiffConstraint> cs{dc("at(0)", "0", 0),      dc("0", "at(0)", 0),      dc("at(0)", "at(1)", -5),
                                       dc("at(1)", "at(0)", 5),  dc("at(1)", "at(2)", -25), dc("at(2)", "at(1)", 25),
                                       dc("at(2)", "at(3)", -5), dc("at(3)", "at(2)", 5),   dc("0", "at(3)", -35)};
        std::map<std::string, Rational> plan{{"at(0)", 0}, {"at(1)", 5}, {"at(2)", 30}, {"at(3)", 35}};
        for (auto const &c : cs) {
            REQUIRE(satisfied(c, plan));
            REQUIRE(store.assert_constraint(c, 0).sat);
        }
        REQUIRE(store.witness() == plan);
    }
}

TEST_CASE("Incremental store agrees with Bellman-Ford", "[dl][property]") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) { REQUIRE(dl_fuzz(seed).empty()); }
}

} // namespace lcasp::test
