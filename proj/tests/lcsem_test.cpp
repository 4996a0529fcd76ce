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

#include <catch_amalgamated.hpp>

namespace lcasp::test {

namespace {

std::string const x1_sum = "&sum{x}<\"4.5\"";
std::string const x2_sum = "&sum{\"1.5\"*x}<=7";

std::set<AtomId> ids(GroundProgram const &prg, std::initializer_list<std::string> names) {
    std::set<AtomId> res;
    for (auto const &name : names) {
        auto id = prg.find(name);
        REQUIRE(id);
        res.insert(*id);
    }
    return res;
}

std::vector<std::string> added_rules(GroundProgram const &base, GroundProgram const &ext) {
    std::vector<std::string> res;
    for (std::size_t i = base.rules().size(); i < ext.rules().size(); ++i) { res.push_back(to_string(ext, ext.rules()[i])); }
    std::sort(res.begin(), res.end());
    return res;
}

AtomSets solve_both(GroundProgram const &prg, Preset preset) {
    auto setting = signature(prg, policy_of(preset));
    LcOptions opts;
    opts.theory.epsilon_explicit = true;
    auto ref = enumerate_reference(prg, setting, opts);
    auto lazy = enumerate_lazy(prg, setting, opts);
    REQUIRE(names(prg, ref) == names(prg, lazy));
    REQUIRE(ref.size() == lazy.size());
    for (auto const &m : ref) { REQUIRE(validate_witness(prg, setting, m.atoms, m.witness)); }
    for (auto const &m : lazy) { REQUIRE(validate_witness(prg, setting, m.atoms, m.witness)); }
    return names(prg, ref);
}

} // namespace

TEST_CASE("Programs P1 and P2", "[lcsem]") {
    auto p1 = ground_text(slurp(data_path("data/programs/p1.lp")));
    auto p2 = ground_text(slurp(data_path("data/programs/p2.lp")));
    AtomSets x1{{x1_sum}};
    AtomSets x2{{x2_sum, x1_sum, "a(\"1.5\")"}};
    AtomSets both{{x1_sum}, {x2_sum, x1_sum, "a(\"1.5\")"}};
    REQUIRE(solve_both(p1, Preset::defined_strict) == x2);
    REQUIRE(solve_both(p1, Preset::defined_nonstrict) == both);
    REQUIRE(solve_both(p2, Preset::external_strict) == x2);
    REQUIRE(solve_both(p2, Preset::external_nonstrict) == both);
    REQUIRE(enumerate_stable_models(p2.with_externals()).empty());
}

TEST_CASE("Lc-solutions", "[lcsem]") {
    TheoryOptions opts;
    opts.epsilon_explicit = true;
    SECTION("an atom and its inverse") {
        auto prg = ground_text(":- &sum{x}<=1. :- &sum{x}>1.");
        auto setting = signature(prg, StrictPolicy::all_strict());
        auto a = *prg.find("&sum{x}<=1");
        auto abar = *prg.find("&sum{x}>1");
        auto yes = is_lc_solution(prg, {a}, setting, opts);
        REQUIRE(yes);
        REQUIRE(yes->at("x") <= 1);
        REQUIRE(is_lc_solution(prg, {abar}, setting, opts));
        REQUIRE_FALSE(is_lc_solution(prg, {}, setting, opts));
        REQUIRE_FALSE(is_lc_solution(prg, {a, abar}, setting, opts));
    }
    SECTION("empty set under non-strict typing") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            RandomProgramOptions ro;
            ro.defined = false;
            auto prg = ground_text(random_program(seed, ro));
            REQUIRE(is_lc_solution(prg, {}, signature(prg, StrictPolicy::all_nonstrict()), opts));
        }
    }
    SECTION("P1 excludes the strict solution without the bound") {
        auto prg = ground_text(slurp(data_path("data/programs/p1.lp")));
        auto strict = signature(prg, StrictPolicy::all_strict());
        REQUIRE_FALSE(is_lc_solution(prg, ids(prg, {x1_sum}), strict, opts));
        REQUIRE(is_lc_solution(prg, ids(prg, {x1_sum, x2_sum}), strict, opts));
        REQUIRE(is_lc_solution(prg, ids(prg, {x1_sum}), signature(prg, StrictPolicy::all_nonstrict()), opts));
    }
    SECTION("strict solutions are non-strict solutions") {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            RandomProgramOptions ro;
            ro.defined = seed % 2 == 0;
            auto prg = ground_text(random_program(seed, ro));
            auto strict = signature(prg, StrictPolicy::all_strict());
            auto nonstrict = signature(prg, StrictPolicy::all_nonstrict());
            auto const &atoms = strict.atoms;
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << atoms.size()); ++mask) {
                std::set<AtomId> s;
                for (std::size_t i = 0; i < atoms.size(); ++i) {
                    if ((mask >> i) & 1) { s.insert(atoms[i]); }
                }
                if (is_lc_solution(prg, s, strict, opts)) { REQUIRE(is_lc_solution(prg, s, nonstrict, opts)); }
            }
        }
    }
    SECTION("real strict difference atoms need an explicit epsilon") {
        auto prg = ground_text("#real x. :- &diff{x-y} < 1.");
        auto setting = signature(prg, StrictPolicy::all_strict());
        REQUIRE_THROWS_AS(is_lc_solution(prg, {}, setting, TheoryOptions{}), SemanticError);
        REQUIRE(is_lc_solution(prg, {}, setting, opts));
    }
}

TEST_CASE("Program extension", "[lcsem]") {
    SECTION("external strict") {
        auto prg = ground_text(":- &sum{x}<=1. :- &sum{x}>1.");
        auto setting = signature(prg, StrictPolicy::all_strict());
        auto ext = extend_program(prg, ids(prg, {"&sum{x}<=1"}), setting);
        REQUIRE(added_rules(prg, ext) == std::vector<std::string>{"&sum{x}<=1."});
    }
    SECTION("external non-strict, empty set") {
        auto prg = ground_text(":- &sum{x}<=1. a :- &sum{y}>=2.");
        auto ext = extend_program(prg, {}, signature(prg, StrictPolicy::all_nonstrict()));
        REQUIRE(print_ground(ext) == print_ground(prg));
        auto choice = extend_program(prg, ids(prg, {"&sum{x}<=1"}), signature(prg, StrictPolicy::all_nonstrict()));
        REQUIRE(added_rules(prg, choice) == std::vector<std::string>{"{&sum{x}<=1}."});
    }
    SECTION("P1 defined") {
        auto prg = ground_text(slurp(data_path("data/programs/p1.lp")));
        auto strict = signature(prg, StrictPolicy::all_strict());
        auto ext = extend_program(prg, ids(prg, {x1_sum, x2_sum}), strict);
        REQUIRE(added_rules(prg, ext) == std::vector<std::string>{":- not " + x2_sum + ".", ":- not " + x1_sum + "."});
        auto none = extend_program(prg, {}, strict);
        REQUIRE(added_rules(prg, none) == std::vector<std::string>{":- " + x2_sum + ".", ":- " + x1_sum + "."});
    }
}

TEST_CASE("Proposition 2 witnesses", "[lcsem]") {
    auto setting_of = [](GroundProgram const &prg) { return signature(prg, policy_of(Preset::external_strict)); };
    auto first = ground_text(":- &sum{x}<=1. :- &sum{x}>1.");
    REQUIRE(names(first, enumerate_stable_models(first)) == AtomSets{{}});
    REQUIRE(enumerate_reference(first, setting_of(first)).empty());
    REQUIRE(enumerate_lazy(first, setting_of(first)).empty());

    auto second = ground_text(":- not &sum{x}<=1.");
    REQUIRE(enumerate_stable_models(second).empty());
    REQUIRE(names(second, enumerate_reference(second, setting_of(second))) == AtomSets{{"&sum{x}<=1"}});
    REQUIRE(names(second, enumerate_lazy(second, setting_of(second))) == AtomSets{{"&sum{x}<=1"}});
}

TEST_CASE("Lazy enumeration", "[lcsem]") {
    SECTION("single defined atom") {
        auto prg = ground_text("a(\"1.5\"). &sum{\"1.5\"*x}<=7 :- a(\"1.5\").");
        auto setting = signature(prg, policy_of(Preset::defined_nonstrict));
        auto models = enumerate_lazy(prg, setting);
        REQUIRE(models.size() == 1);
        REQUIRE(Rational(3, 2) * models[0].witness.at("x") <= 7);
    }
    SECTION("empty program") {
        GroundProgram prg;
        auto models = enumerate_lazy(prg, signature(prg, StrictPolicy{}));
        REQUIRE(models.size() == 1);
        REQUIRE(models[0].atoms.empty());
        REQUIRE(enumerate_reference(prg, signature(prg, StrictPolicy{})).size() == 1);
    }
    SECTION("conditional elements") {
        auto prg = ground_text("{b}. :- not &sum{x : b; -1*y} >= 1. &sum{y} >= 5. &sum{x} <= 10.");
        auto setting = signature(prg, StrictPolicy{});
        auto models = enumerate_lazy(prg, setting);
        REQUIRE(models.size() == 1);
        REQUIRE(models[0].atoms.count(*prg.find("b")));
        REQUIRE(validate_witness(prg, setting, models[0].atoms, models[0].witness));
        REQUIRE_THROWS_AS(enumerate_reference(prg, setting), SemanticError);
    }
    SECTION("objectives") {
        auto prg = ground_text("#real x. {a}. &sum{x} <= 7. &sum{x} <= 2 :- a. &maximize{x}.");
        auto models = enumerate_lazy(prg, signature(prg, StrictPolicy{}));
        REQUIRE(models.size() == 2);
        std::set<Rational> values;
        for (auto const &m : models) {
            REQUIRE(m.objective);
            values.insert(*m.objective);
        }
        REQUIRE(values == std::set<Rational>{2, 7});
    }
    SECTION("limit") {
        auto prg = ground_text("{a; b}. &sum{x} <= 1 :- a.");
        LcOptions opts;
        opts.limit = 2;
        REQUIRE(enumerate_lazy(prg, signature(prg, StrictPolicy{}), opts).size() == 2);
    }
    SECTION("reference cap") {
        std::string text;
        for (int i = 0; i < 13; ++i) { text += "&sum{x} <= " + std::to_string(i) + ".\n"; }
        auto prg = ground_text(text);
        REQUIRE_THROWS_AS(enumerate_reference(prg, signature(prg, StrictPolicy{})), LimitError);
        REQUIRE(enumerate_lazy(prg, signature(prg, StrictPolicy{})).size() == 1);
    }
}

TEST_CASE("Witness validation", "[lcsem]") {
    auto prg = ground_text(slurp(data_path("data/programs/p1.lp")));
    auto setting = signature(prg, StrictPolicy::all_strict());
    auto x = ids(prg, {x1_sum, x2_sum, "a(\"1.5\")"});
    REQUIRE(validate_witness(prg, setting, x, {{"x", Rational(21, 5)}}));
    REQUIRE_FALSE(validate_witness(prg, setting, x, {{"x", Rational(9, 2)}}));
    REQUIRE_FALSE(validate_witness(prg, setting, ids(prg, {x1_sum}), {{"x", 0}}));
}

TEST_CASE("Random programs", "[lcsem][property]") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (auto preset : {Preset::defined_strict, Preset::defined_nonstrict, Preset::external_strict,
                            Preset::external_nonstrict}) {
            RandomProgramOptions ro;
            ro.defined = preset == Preset::defined_strict || preset == Preset::defined_nonstrict;
            ro.difference_only = seed % 3 == 0;
            auto text = random_program(mix_seed(seed, 77), ro);
            INFO(text);
            auto prg = ground_text(text);
            auto lc = solve_both(prg, preset);
            auto sm = names(prg, brute_force_stable(prg));
            auto setting = signature(prg, StrictPolicy{});
            bool all_defined = std::all_of(setting.atoms.begin(), setting.atoms.end(),
                                           [&](AtomId atom) { return setting.is_defined(atom); });
            if (all_defined) { REQUIRE(std::includes(sm.begin(), sm.end(), lc.begin(), lc.end())); }
            bool all_external = std::none_of(setting.atoms.begin(), setting.atoms.end(),
                                             [&](AtomId atom) { return setting.is_defined(atom); });
            if (all_external && preset == Preset::external_nonstrict) { REQUIRE(std::includes(lc.begin(), lc.end(), sm.begin(), sm.end())); }
            auto relaxed = solve_both(prg, Preset::defined_nonstrict);
            REQUIRE(std::includes(relaxed.begin(), relaxed.end(), lc.begin(), lc.end()));
        }
    }
}

TEST_CASE("Proposition harness", "[lcsem]") {
    auto report = check_propositions(25, 3, {}, true);
    REQUIRE(report.programs == 100);
    REQUIRE(report.violations.empty());
    REQUIRE(report.checks.at("1.3") == 100);
    REQUIRE(report.checks.at("lazy") == 100);
    REQUIRE(report.checks.at("1.1") >= 25);
    REQUIRE(report.checks.at("1.2") >= 25);
    auto none = check_propositions(0, 0);
    REQUIRE(none.programs == 0);
    REQUIRE(program_hash("a.") == program_hash("a."));
    REQUIRE(program_hash("a.") != program_hash("b."));
    SECTION("1.1 without lc-atoms") {
        auto prg = ground_text("{a}. b :- not a.");
        auto setting = signature(prg, StrictPolicy::all_strict());
        REQUIRE(names(prg, enumerate_reference(prg, setting)) == names(prg, enumerate_stable_models(prg)));
    }
}

} // namespace lcasp::test
