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

#include <cli.hpp>

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

namespace lcasp::test {

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return Run{code, out.str(), err.str()};
}

std::string file(char const *rel) { return data_path(rel); }

} // namespace

TEST_CASE("Solve command", "[cli]") {
    SECTION("P1 defined non-strict") {
        auto r = run({"solve", file("data/programs/p1.lp"), "--setting", "defined-nonstrict"});
        REQUIRE(r.code == cli::exit_code::sat);
        REQUIRE(r.out.find("Models: 2") != std::string::npos);
        REQUIRE(r.out.find("Assignment: x=") != std::string::npos);
    }
    SECTION("empty program") {
        auto r = run({"solve", file("data/programs/empty.lp")});
        REQUIRE(r.code == cli::exit_code::sat);
        REQUIRE(r.out.find("Models: 1") != std::string::npos);
    }
    SECTION("model limit") {
        auto r = run({"solve", file("data/programs/p1.lp"), "--setting", "defined-nonstrict", "--models", "1"});
        REQUIRE(r.code == cli::exit_code::limit);
    }
    SECTION("unsatisfiable") {
        REQUIRE(run({"solve", file("tests/data/unsat.lp")}).code == cli::exit_code::unsat);
        REQUIRE(run({"solve", file("tests/data/unsat.lp"), "--mode", "reference"}).code == cli::exit_code::unsat);
    }
    SECTION("errors") {
        auto parse = run({"solve", file("tests/data/bad.lp")});
        REQUIRE(parse.code == cli::exit_code::data);
        REQUIRE(parse.err.find("bad.lp:2:1:") != std::string::npos);
        REQUIRE(run({"solve", file("tests/data/missing.lp")}).code == cli::exit_code::data);
        REQUIRE(run({"solve", "--setting", "sideways", file("data/programs/p1.lp")}).code == cli::exit_code::usage);
        REQUIRE(run({"frobnicate"}).code == cli::exit_code::usage);
        REQUIRE(run({"solve", file("data/programs/p1.lp"), "--epsilon", "0"}).code == cli::exit_code::usage);
    }
    SECTION("per-atom strictness") {
        auto r = run({"solve", file("data/programs/p1.lp"), "--strict-file", file("tests/data/p1.strict")});
        REQUIRE(r.code == cli::exit_code::sat);
        REQUIRE(r.out.find("Models: 1") != std::string::npos);
    }
}

TEST_CASE("JSON output", "[cli]") {
    auto r = run({"solve", file("data/programs/p2.lp"), "--setting", "external-strict", "--format", "json"});
    REQUIRE(r.code == cli::exit_code::sat);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    REQUIRE(doc[0].contains("atoms"));
    REQUIRE(doc[0].contains("assignment"));
    auto models = cli::from_json(doc);
    REQUIRE(models.size() == 1);
    REQUIRE(models[0].first == std::vector<std::string>{"&sum{\"1.5\"*x}<=7", "&sum{x}<\"4.5\"", "a(\"1.5\")"});
    REQUIRE(models[0].second.at("x") < Rational(9, 2));

    SECTION("round trip") {
        auto prg = ground_text(slurp(file("data/programs/p1.lp")));
        auto setting = signature(prg, StrictPolicy::all_nonstrict());
        auto lc = enumerate_lazy(prg, setting);
        lc[0].witness["y"] = Rational(-7, 3);
        lc[0].witness["z"] = Rational(123456789, 1000);
        auto back = cli::from_json(nlohmann::json::parse(cli::to_json(prg, lc).dump()));
        REQUIRE(back.size() == lc.size());
        for (std::size_t i = 0; i < lc.size(); ++i) {
            REQUIRE(back[i].first == atom_names(prg, lc[i].atoms));
            REQUIRE(back[i].second == lc[i].witness);
        }
    }
}

TEST_CASE("Rational parsing", "[cli]") {
    REQUIRE(cli::parse_rational("1/1000") == Rational(1, 1000));
    REQUIRE(cli::parse_rational("0.25") == Rational(1, 4));
    REQUIRE(cli::parse_rational("-3") == -3);
    REQUIRE_THROWS(cli::parse_rational("x"));
    REQUIRE_THROWS(cli::parse_rational("1/0"));
    for (auto const &value : {Rational(21, 5), Rational(-1, 3), Rational(0), Rational(7)}) {
        REQUIRE(cli::parse_rational(to_fraction(value)) == value);
    }
}

TEST_CASE("Epsilon", "[cli]") {
    auto args = std::vector<std::string>{"solve", file("data/programs/p1.lp"), "--setting", "defined-nonstrict"};
    auto with = [&](std::vector<std::string> extra) {
        auto all = args;
        all.insert(all.end(), extra.begin(), extra.end());
        return run(all);
    };
    REQUIRE(with({}).out.find("x=\"4.499\"") != std::string::npos);
    REQUIRE(with({"--epsilon", "1/2"}).out.find("x=4") != std::string::npos);
    ::setenv("LCASP_EPSILON", "0.25", 1);
    REQUIRE(with({}).out.find("x=\"4.25\"") != std::string::npos);
    REQUIRE(with({"--epsilon", "1/2"}).out.find("x=4") != std::string::npos);
    ::unsetenv("LCASP_EPSILON");
}

TEST_CASE("Proposition command", "[cli]") {
    auto r = run({"check-props", "--count", "20", "--seed", "0", "--lazy"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("violations: 0") != std::string::npos);
    REQUIRE(run({"check-props", "--count", "0"}).code == 0);
    auto fixed = run({"check-props", "--fixed", "prop2"});
    REQUIRE(fixed.code == 0);
    REQUIRE(fixed.out.find("SM_lc") != std::string::npos);
    REQUIRE(run({"check-props", "--count", "5", "--seed", "9"}).out == run({"check-props", "--count", "5", "--seed", "9"}).out);
}

TEST_CASE("Bench command", "[cli]") {
    auto r = run({"bench", file("benchmarks/instances"), "--mode", "lazy", "--format", "csv"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.rfind("class,instances,t,to\n", 0) == 0);
    REQUIRE(r.out.find("fs,3,") != std::string::npos);
    REQUIRE(r.out.find("js,3,") != std::string::npos);
    auto text = run({"bench", file("benchmarks/instances"), "--timeout", "10"});
    REQUIRE(text.out.find("UNSAT") == std::string::npos);
    REQUIRE(text.out.find("TIMEOUT") == std::string::npos);
    auto empty = run({"bench", file("tests/data/empty_suite"), "--format", "csv"});
    REQUIRE(empty.code == 0);
    REQUIRE(empty.out == "class,instances,t,to\n");
}

TEST_CASE("Incremental command", "[cli]") {
    auto r = run({"incremental", file("data/yale/base.lp"), file("data/yale/step.lp"), file("data/yale/check.lp")});
    REQUIRE(r.code == cli::exit_code::sat);
    REQUIRE(r.out.find("Step 2: 0 model(s)") != std::string::npos);
    REQUIRE(r.out.find("Step 3: 2 model(s)") != std::string::npos);
}

TEST_CASE("Ground command", "[cli]") {
    auto r = run({"ground", file("data/programs/p1.lp")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("&sum{\"1.5\"*x}<=7 :- a(\"1.5\").") != std::string::npos);
}

} // namespace lcasp::test
