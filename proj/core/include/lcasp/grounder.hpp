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
#pragma once

#include <lcasp/error.hpp>
#include <lcasp/ground_program.hpp>
#include <lcasp/syntax.hpp>

#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace lcasp {

//! A program part together with the values of its parameters.
struct PartInstance {
    std::string name;
    std::vector<syntax::Term> args;
};

//! Incremental bottom-up grounder. Each call to ground() instantiates a batch
//! of parts against the atoms made possible by all earlier batches and appends
//! the new ground rules to program().
class Grounder {
public:
    void ground(syntax::Program const &prg, std::vector<PartInstance> const &parts);

    GroundProgram const &program() const { return program_; }
    GroundProgram &program() { return program_; }

private:
    using Signature = std::pair<std::string, unsigned>;
    using Binding = std::map<std::string, syntax::Term>;

    struct Scoped {
        syntax::Statement const *stm;
        Binding params;
    };

    class Instantiator;

    void update_static(std::vector<Scoped> const &stms);
    bool add_possible(syntax::Atom const &atom);

    GroundProgram program_;
    std::map<Signature, std::vector<std::vector<syntax::Term>>> domain_;
    std::unordered_set<std::string> possible_;
    std::set<Signature> dynamic_;
    std::set<Signature> defined_;
    std::unordered_set<std::string> rule_texts_;
};

//! Grounds the `base` part of a program.
GroundProgram ground(syntax::Program const &prg);
//! Grounds a single part with the given parameter values.
GroundProgram ground(syntax::Program const &prg, std::string const &part, std::vector<syntax::Term> const &params);

} // namespace lcasp
