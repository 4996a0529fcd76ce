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

#include <lcasp/dl.hpp>
#include <lcasp/ground_program.hpp>
#include <lcasp/lp.hpp>
#include <lcasp/stable.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lcasp {

// {{{1 settings

//! Assignment of strictness to lc-atoms. Atoms without an override follow
//! `base`; by default defined atoms are non-strict and external ones strict.
struct StrictPolicy {
    enum class Base { default_, all_strict, all_nonstrict };
    Base base = Base::default_;
    //! Canonical atom text to strictness.
    std::map<std::string, bool> overrides;

    static StrictPolicy all_strict() { return {Base::all_strict, {}}; }
    static StrictPolicy all_nonstrict() { return {Base::all_nonstrict, {}}; }
    //! Reads lines `strict <atom>` or `nonstrict <atom>`; `%` starts a comment.
    static StrictPolicy parse(std::string_view text);
};

//! Classification of every lc-atom of a ground program.
struct SemanticSetting {
    std::vector<AtomId> atoms;
    std::map<AtomId, bool> strict;
    std::map<AtomId, bool> defined;

    bool is_strict(AtomId atom) const { return strict.at(atom); }
    bool is_defined(AtomId atom) const { return defined.at(atom); }
};

//! Throws SemanticError if the policy mentions an atom that does not occur.
SemanticSetting signature(GroundProgram const &prg, StrictPolicy const &policy);

// {{{1 theories

enum class Theory { dl, lp, automatic };

struct TheoryOptions {
    Theory theory = Theory::automatic;
    Rational epsilon{1, 1000};
    //! Whether epsilon was requested explicitly; required for strict
    //! difference constraints over the reals.
    bool epsilon_explicit = false;
    std::size_t node_limit = 10000;
    //! Maximal number of simultaneous `!=` case splits.
    std::size_t split_cap = 16;
};

//! `dl` iff every lc-atom is an unconditional difference constraint and there
//! are no objectives, otherwise `lp`; explicit choices are returned unchanged.
Theory resolve_theory(GroundProgram const &prg, Theory theory);

//! Linear constraint of an lc-atom; conditional terms count iff their
//! condition holds in `x`.
LinearConstraint constraint_of(GroundProgram const &prg, AtomId atom, Interpretation const &x = {});
//! Difference form of a constraint, if it has one.
std::optional<DiffConstraint> to_diff(LinearConstraint const &c);

//! All theory variables mentioned by the program.
std::set<std::string> theory_variables(GroundProgram const &prg);

// {{{1 semantics

struct LcModel {
    Interpretation atoms;
    Valuation witness;
    //! The lc-solution that produced the model (reference mode).
    std::optional<std::set<AtomId>> generator;
    //! Per-model optimum if the program has objectives; empty if unbounded.
    std::optional<Rational> objective;
    bool unbounded = false;
};

//! Witness for `s` being an lc-solution, or nothing.
std::optional<Valuation> is_lc_solution(GroundProgram const &prg, std::set<AtomId> const &s,
                                        SemanticSetting const &setting, TheoryOptions const &opts = {});

//! The program P^S aligning lc-atoms with the lc-solution `s`.
GroundProgram extend_program(GroundProgram const &prg, std::set<AtomId> const &s, SemanticSetting const &setting);

struct LcOptions {
    TheoryOptions theory;
    //! Maximal number of models; 0 means all.
    std::size_t limit = 0;
    //! Maximal number of lc-atoms for reference enumeration.
    std::size_t atom_cap = 12;
    Deadline deadline;
};

//! Union of the stable models of P^S over all lc-solutions S.
std::vector<LcModel> enumerate_reference(GroundProgram const &prg, SemanticSetting const &setting,
                                         LcOptions const &opts = {});
//! Same models by search with a theory propagator.
std::vector<LcModel> enumerate_lazy(GroundProgram const &prg, SemanticSetting const &setting,
                                    LcOptions const &opts = {});

//! True iff the witness satisfies the constraints of all lc-atoms in `x` and
//! violates those of strict lc-atoms not in `x`.
bool validate_witness(GroundProgram const &prg, SemanticSetting const &setting, Interpretation const &x,
                      Valuation const &witness);

// {{{1 propositions

enum class Preset { defined_strict, defined_nonstrict, external_strict, external_nonstrict };

char const *to_string(Preset preset);
std::optional<Preset> parse_preset(std::string_view text);
StrictPolicy policy_of(Preset preset);

struct Violation {
    Preset setting;
    std::string claim;
    std::uint64_t hash = 0;
    std::string program;
};

struct PropositionReport {
    std::size_t programs = 0;
    //! Number of programs each claim (`1.1`, `1.2`, `1.3`, `lazy`) applied to.
    std::map<std::string, std::size_t> checks;
    std::vector<Violation> violations;
};

//! FNV-1a hash of a program text.
std::uint64_t program_hash(std::string_view text);

//! Checks the subset relations between regular and lc-stable models on
//! `count` random programs per homogeneous setting, using reference
//! enumeration as ground truth. With `compare_lazy`, disagreements between
//! lazy and reference enumeration are reported as well.
PropositionReport check_propositions(std::size_t count, std::uint64_t seed, TheoryOptions const &opts = {},
                                     bool compare_lazy = false);

} // namespace lcasp
