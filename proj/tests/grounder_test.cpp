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

#include <lcasp/grounder.hpp>
#include <lcasp/random_program.hpp>

#include <catch_amalgamated.hpp>

namespace lcasp::test {

namespace {

std::string const durations = "action(wait). action(load). action(shoot).\n"
                              "duration(wait,5). duration(load,25). duration(shoot,5).\n";

std::size_t count_rules(GroundProgram const &prg, HeadType type) {
    return static_cast<std::size_t>(
        std::count_if(prg.rules().begin(), prg.rules().end(), [&](GroundRule const &r) { return r.type == type; }));
}

} // namespace

TEST_CASE("Grounding the Yale step part", "[grounder]") {
    auto prg = syntax::parse_program(durations + "{ do(A,1) : action(A) }.\n"
                                                  "#program step(n).\n"
                                                  "&diff{at(n-1)-at(n)} <= -D :- duration(A,D); do(A,n).\n");
    Grounder g;
    g.ground(prg, {{"base", {}}, {"step", {syntax::Term::integer(1)}}});
    auto const &out = g.program();
    std::vector<GroundRule> lc_rules;
    for (auto const &r : out.rules()) {
        if (r.type == HeadType::normal && out.is_theory(r.head.front())) { lc_rules.push_back(r); }
    }
    REQUIRE(lc_rules.size() == 3);
    std::set<std::string> heads;
    for (auto const &r : lc_rules) { heads.insert(out.name(r.head.front())); }
    REQUIRE(heads == std::set<std::string>{"&diff{at(0)-at(1)}<=-5", "&diff{at(0)-at(1)}<=-25"});
}

TEST_CASE("Choice with condition", "[grounder]") {
    auto out = ground_text("action(wait). action(load). action(shoot).\n1 { do(A,1) : action(A) } 1.\n");
    REQUIRE(count_rules(out, HeadType::choice) == 1);
    auto it = std::find_if(out.rules().begin(), out.rules().end(),
                           [](GroundRule const &r) { return r.type == HeadType::choice; });
    REQUIRE(it->head.size() == 3);
    REQUIRE(it->lower == 1);
    REQUIRE(it->upper == 1u);
}

TEST_CASE("Ground input is unchanged", "[grounder]") {
    std::string text = "a. b :- a, not c. {c}. :- b, c. &sum{\"1.5\"*x} <= 7 :- b.\n";
    auto once = ground_text(text);
    auto printed = print_ground(once);
    REQUIRE(print_ground(ground_text(printed)) == printed);
    REQUIRE(once.rules().size() == 5);
}

TEST_CASE("Grounding is idempotent", "[grounder][property]") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomProgramOptions opts;
        opts.defined = seed % 2 == 0;
        auto once = print_ground(ground_text(random_program(seed, opts)));
        INFO(once);
        REQUIRE(print_ground(ground_text(once)) == once);
    }
    auto yale = slurp(data_path("data/yale/base.lp"));
    auto once = print_ground(ground_text(yale));
    REQUIRE(print_ground(ground_text(once)) == once);
}

TEST_CASE("Instances are restricted to derivable atoms", "[grounder]") {
    auto out = ground_text("p(1). p(2). q(X) :- p(X). r(X) :- q(X), not s(X). {s(1)}.");
    REQUIRE(out.find("q(1)"));
    REQUIRE(out.find("r(2)"));
    REQUIRE_FALSE(out.find("q(3)"));
    SECTION("comparisons and arithmetic") {
        auto cmp = ground_text("n(1). n(2). n(3). lt(X,Y) :- n(X), n(Y), X < Y. s(X+1) :- n(X), X*2 >= 4.");
        REQUIRE(cmp.find("lt(1,3)"));
        REQUIRE_FALSE(cmp.find("lt(2,1)"));
        REQUIRE(cmp.find("s(3)"));
        REQUIRE(cmp.find("s(4)"));
        REQUIRE_FALSE(cmp.find("s(2)"));
    }
}

TEST_CASE("Conditions inside lc-atoms", "[grounder]") {
    SECTION("static conditions are expanded") {
        auto out = ground_text("c(1). c(2). &sum{w(X) : c(X)} <= 4.");
        auto const &th = *out.atom(out.theory_atoms()[0]).theory;
        REQUIRE(th.terms.size() == 2);
        REQUIRE_FALSE(th.conditional());
    }
    SECTION("dynamic conditions are kept") {
        auto out = ground_text("{b}. &sum{x : b; y} <= 4.");
        auto const &th = *out.atom(out.theory_atoms()[0]).theory;
        REQUIRE(th.terms.size() == 2);
        REQUIRE(th.conditional());
    }
}

TEST_CASE("Grounding errors", "[grounder]") {
    REQUIRE_THROWS_AS(ground_text("p(X) :- not q(X)."), GroundError);
    REQUIRE_THROWS_AS(ground_text("p(X)."), GroundError);
    try {
        ground_text("p(1). q(X,Y) :- p(X).");
        FAIL("no error");
    }
    catch (GroundError const &e) {
        REQUIRE(std::string(e.what()).find('Y') != std::string::npos);
    }
}

} // namespace lcasp::test
