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

#include <lcasp/lcsem.hpp>
#include <lcasp/random_program.hpp>
#include <lcasp/syntax.hpp>

#include <catch_amalgamated.hpp>

#include <random>

namespace lcasp::test {
using namespace syntax;

namespace {

Rule only_rule(std::string_view text) {
    auto rules = parse_program(text).rules();
    REQUIRE(rules.size() == 1);
    return rules.front();
}

// Small random programs exercising every statement kind the printer knows.
std::string random_text(std::mt19937_64 &rng) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    char const *preds[] = {"p", "q", "r"};
    char const *terms[] = {"1", "-2", "a", "f(b,1)", "\"s t\"", "X", "Y+1", "\"2.5\""};
    char const *rels[] = {"<=", "<", ">=", ">", "=", "!="};
    auto atom = [&] {
        std::string res = preds[pick(3)];
        if (pick(3)) {
            res += "(";
            int n = 1 + pick(2);
            for (int i = 0; i < n; ++i) { res += (i ? "," : "") + std::string(terms[pick(8)]); }
            res += ")";
        }
        return res;
    };
    auto lc = [&] {
        if (pick(2)) { return "&diff{x(" + std::to_string(pick(3)) + ")-y} " + rels[pick(4)] + " " + std::to_string(pick(9) - 4); }
        std::string res = "&sum{";
        int n = 1 + pick(3);
        for (int i = 0; i < n; ++i) {
            res += i ? ";" : "";
            res += pick(2) ? "\"1.5\"*x" : std::to_string(pick(5) - 2) + "*z";
            if (pick(4) == 0) { res += ":" + atom(); }
        }
        return res + "} " + rels[pick(6)] + " \"0." + std::to_string(pick(10)) + "\"";
    };
    std::string out;
    int n = pick(6);
    for (int i = 0; i < n; ++i) {
        switch (pick(7)) {
            case 0: out += atom() + ".\n"; break;
            case 1: out += atom() + " :- " + atom() + "; not " + atom() + ".\n"; break;
            case 2: out += lc() + " :- " + atom() + ".\n"; break;
            case 3: out += ":- " + (pick(2) ? std::string("not ") : std::string()) + lc() + ".\n"; break;
            case 4: out += "1 { " + atom() + " ; " + atom() + " } 2 :- " + atom() + ".\n"; break;
            case 5: out += "#program step(n).\n#external " + atom() + ".\n"; break;
            case 6: out += "#show p/1.\n#real x, z.\n"; break;
        }
    }
    return out;
}

} // namespace

TEST_CASE("Parsing lc-atoms", "[syntax]") {
    SECTION("decimal coefficients are exact") {
        auto prg = ground_text("a(\"1.5\"). &sum{\"1.5\"*x}<=7 :- a(\"1.5\").");
        auto lc = prg.theory_atoms();
        REQUIRE(lc.size() == 1);
        auto const &th = *prg.atom(lc[0]).theory;
        REQUIRE(th.terms.size() == 1);
        REQUIRE(th.terms[0].coefficient == Rational(3, 2));
        REQUIRE(th.terms[0].variable == "x");
        REQUIRE(th.rhs == 7);
        REQUIRE(th.relation == Relation::le);
        auto rule = only_rule("&sum{\"1.5\"*x}<=7 :- a(\"1.5\").");
        REQUIRE(std::holds_alternative<LcAtom>(rule.head));
        REQUIRE(rule.body.size() == 1);
    }
    SECTION("empty input") {
        REQUIRE(parse_program("").statements.empty());
        REQUIRE(parse_program("% only a comment\n").rules().empty());
    }
    SECTION("P2 has two lc-atoms") {
        auto text = ":- not &sum{x}<\"4.5\".  a(\"1.5\") :- &sum{\"1.5\"*x}<=7.";
        REQUIRE(parse_program(text).rules().size() == 2);
        REQUIRE(ground_text(text).theory_atoms().size() == 2);
    }
    SECTION("constant summands move to the right hand side") {
        auto prg = ground_text("&sum{x; 3} <= 5.");
        auto const &th = *prg.atom(prg.theory_atoms()[0]).theory;
        REQUIRE(th.terms.size() == 1);
        REQUIRE(th.rhs == 2);
    }
    SECTION("omitted coefficient is one") {
        auto prg = ground_text("&sum{y} >= 1.");
        REQUIRE(prg.atom(prg.theory_atoms()[0]).theory->terms[0].coefficient == 1);
    }
}

TEST_CASE("Parse errors", "[syntax]") {
    SECTION("location and expected tokens") {
        try {
            parse_program("a.\nb :- c");
            FAIL("no error");
        }
        catch (ParseError const &e) {
            REQUIRE(e.line() == 2);
            REQUIRE(!e.expected().empty());
        }
    }
    SECTION("equality and inequality on diff") {
        REQUIRE_THROWS_AS(parse_program("&diff{x-y} = 3."), ParseError);
        REQUIRE_THROWS_AS(parse_program("&diff{x-y} != 3."), ParseError);
    }
    SECTION("disjunctive heads") { REQUIRE_THROWS_AS(parse_program("a ; b."), ParseError); }
    SECTION("unterminated string") { REQUIRE_THROWS_AS(parse_program("a(\"x)."), ParseError); }
}

TEST_CASE("Printing", "[syntax]") {
    REQUIRE(print_program(parse_program("a.")) == "a.\n");
    auto text = print_program(parse_program("&sum{\"1.5\"*x}<=7 :- a(\"1.5\")."));
    REQUIRE(text.find("\"1.5\"*x") != std::string::npos);

    SECTION("Yale listings are stable after one pass") {
        for (auto const *file : {"data/yale/base.lp", "data/yale/step.lp", "data/yale/check.lp"}) {
            auto once = print_program(parse_program(slurp(data_path(file))));
            auto twice = print_program(parse_program(once));
            REQUIRE(once == twice);
            REQUIRE(parse_program(once) == parse_program(slurp(data_path(file))));
        }
    }
}

TEST_CASE("Round trip property", "[syntax][property]") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        auto text = random_text(rng);
        INFO(text);
        auto prg = parse_program(text);
        REQUIRE(parse_program(print_program(prg)) == prg);
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        RandomProgramOptions opts;
        opts.defined = seed % 2 == 0;
        auto text = random_program(seed, opts);
        INFO(text);
        auto prg = parse_program(text);
        REQUIRE(parse_program(print_program(prg)) == prg);
    }
}

TEST_CASE("Lc-atom identity is syntactic", "[syntax]") {
    auto prg = ground_text("&sum{x}<=2.  &sum{2*\"0.5\"*x}<=2.");
    REQUIRE(prg.theory_atoms().size() == 2);
    auto same = ground_text("&sum{x}<=2.  &sum{ x } <= 2.");
    REQUIRE(same.theory_atoms().size() == 1);
}

TEST_CASE("Signature", "[syntax][lcsem]") {
    SECTION("P2 all strict") {
        auto prg = ground_text(slurp(data_path("data/programs/p2.lp")));
        auto s = signature(prg, StrictPolicy::all_strict());
        REQUIRE(s.atoms.size() == 2);
        for (auto atom : s.atoms) {
            REQUIRE_FALSE(s.is_defined(atom));
            REQUIRE(s.is_strict(atom));
        }
    }
    SECTION("head only, all non-strict") {
        auto prg = ground_text("&sum{x} <= 1 :- b. {b}.");
        auto s = signature(prg, StrictPolicy::all_nonstrict());
        REQUIRE(s.atoms.size() == 1);
        REQUIRE(s.is_defined(s.atoms[0]));
        REQUIRE_FALSE(s.is_strict(s.atoms[0]));
    }
    SECTION("P1 any policy") {
        auto prg = ground_text(slurp(data_path("data/programs/p1.lp")));
        for (auto const &policy : {StrictPolicy{}, StrictPolicy::all_strict(), StrictPolicy::all_nonstrict()}) {
            auto s = signature(prg, policy);
            REQUIRE(s.atoms.size() == 2);
            for (auto atom : s.atoms) { REQUIRE(s.is_defined(atom)); }
        }
    }
    SECTION("default policy") {
        auto prg = ground_text("&sum{x} <= 1. :- &sum{y} >= 2.");
        auto s = signature(prg, StrictPolicy{});
        for (auto atom : s.atoms) { REQUIRE(s.is_strict(atom) == !s.is_defined(atom)); }
    }
    SECTION("per-atom overrides") {
        auto prg = ground_text("&sum{x} <= 1. :- &sum{y} >= 2.");
        auto policy = StrictPolicy::parse("strict &sum{x}<=1 % comment\nnonstrict &sum{y}>=2\n");
        auto s = signature(prg, policy);
        REQUIRE(s.is_strict(*prg.find("&sum{x}<=1")));
        REQUIRE_FALSE(s.is_strict(*prg.find("&sum{y}>=2")));
        REQUIRE_THROWS_AS(signature(prg, StrictPolicy::parse("strict &sum{z}<=1")), SemanticError);
    }
    SECTION("partition law") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            RandomProgramOptions opts;
            opts.defined = seed % 2 == 1;
            auto prg = ground_text(random_program(seed, opts));
            auto s = signature(prg, seed % 3 ? StrictPolicy{} : StrictPolicy::all_strict());
            REQUIRE(s.atoms == prg.theory_atoms());
            for (auto atom : s.atoms) {
                REQUIRE(s.defined.count(atom) == 1);
                REQUIRE(s.strict.count(atom) == 1);
                REQUIRE(s.is_defined(atom) == prg.in_head(atom));
            }
            REQUIRE(s.defined.size() == s.atoms.size());
            REQUIRE(s.strict.size() == s.atoms.size());
        }
    }
}

} // namespace lcasp::test
