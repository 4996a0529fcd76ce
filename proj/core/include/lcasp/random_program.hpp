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

#include <cstdint>
#include <string>

namespace lcasp {

struct RandomProgramOptions {
    unsigned max_atoms = 8;
    unsigned max_lc_atoms = 4;
    unsigned max_variables = 3;
    int max_coefficient = 3;
    unsigned max_rules = 8;
    //! Every lc-atom occurs in some head if set, in no head otherwise.
    bool defined = true;
    //! Restrict lc-atoms to difference constraints.
    bool difference_only = false;
};

//! Random ground lc-program text, deterministic in `seed`.
std::string random_program(std::uint64_t seed, RandomProgramOptions const &opts = {});

//! Mixes several values into one well-distributed seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

} // namespace lcasp
