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

#include <lcasp/grounder.hpp>
#include <lcasp/lcsem.hpp>
#include <lcasp/syntax.hpp>

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace lcasp {

struct SessionOptions {
    StrictPolicy policy;
    LcOptions solve;
    //! Project models onto `#show` atoms and drop duplicates.
    bool project = true;
};

//! Multi-shot solving over a non-ground program: parts are grounded on
//! demand, externals assigned between solves, and every solve runs on the
//! accumulated ground program.
class Session {
public:
    explicit Session(syntax::Program program, SessionOptions opts = {});

    void ground_part(std::string const &name, std::vector<syntax::Term> const &params = {});
    //! Grounds several parts as one batch so that they can depend on each other.
    void ground(std::vector<PartInstance> const &parts);

    void assign_external(std::string_view atom, bool value);
    void release_external(std::string_view atom);

    std::vector<LcModel> solve();

    GroundProgram const &program() const { return grounder_.program(); }
    SessionOptions &options() { return opts_; }

private:
    AtomId external_id(std::string_view atom) const;

    syntax::Program program_;
    SessionOptions opts_;
    Grounder grounder_;
    std::set<std::pair<std::string, std::string>> grounded_;
    std::set<AtomId> released_;
};

struct StepResult {
    unsigned step = 0;
    std::vector<LcModel> models;
};

//! Incremental driver over parts `base`, `step(n)` and `check(n)` with external
//! `query(n)`: grounds step by step and stops at the first step with a model
//! or after `max_step`. `on_step` sees each step's result as it is solved.
std::vector<StepResult> solve_incremental(Session &session, unsigned max_step = 32,
                                          std::function<void(StepResult const &)> const &on_step = {});

} // namespace lcasp
