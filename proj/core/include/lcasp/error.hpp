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

#include <stdexcept>
#include <string>

namespace lcasp {

//! Raised for unsafe rules, bad arithmetic and other instantiation failures.
class GroundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//! Raised when input is well-formed but outside the supported fragment.
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//! Raised when a configured resource cap is exceeded (not a verdict).
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//! Raised when a cooperative deadline passes during search.
class TimeoutError : public std::runtime_error {
public:
    TimeoutError()
        : std::runtime_error("time limit exceeded") {}
};

} // namespace lcasp
