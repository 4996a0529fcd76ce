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
#include <lcasp/multishot.hpp>

#include <algorithm>
#include <map>

namespace lcasp {

Session::Session(syntax::Program program, SessionOptions opts)
    : program_(std::move(program))
    , opts_(std::move(opts)) {}

void Session::ground_part(std::string const &name, std::vector<syntax::Term> const &params) {
    ground({PartInstance{name, params}});
}

void Session::ground(std::vector<PartInstance> const &parts) {
    std::vector<std::pair<std::string, std::string>> keys;
    for (auto const &part : parts) {
        std::string args;
        for (auto const &arg : part.args) { args += syntax::to_string(arg) + ","; }
        std::pair<std::string, std::string> key{part.name, args};
        if (grounded_.count(key) || std::find(keys.begin(), keys.end(), key) != keys.end()) {
            throw GroundError("program part '" + part.name + "(" + args.substr(0, args.empty() ? 0 : args.size() - 1) +
                              ")' has already been grounded");
        }
        keys.push_back(std::move(key));
    }
    auto released = released_;
    grounder_.ground(program_, parts);
    for (AtomId atom : released) { grounder_.program().externals.erase(atom); }
    grounded_.insert(keys.begin(), keys.end());
}

AtomId Session::external_id(std::string_view atom) const {
    auto parsed = syntax::parse_atom(atom);
    auto name = std::visit([](auto const &a) { return syntax::to_string(a); }, parsed);
    auto id = program().find(name);
    if (id && released_.count(*id)) { throw SemanticError("external atom '" + name + "' has been released"); }
    if (!id || !program().externals.count(*id)) { throw SemanticError("'" + name + "' is not an external atom"); }
    return *id;
}

void Session::assign_external(std::string_view atom, bool value) {
    grounder_.program().externals[external_id(atom)] = value;
}

void Session::release_external(std::string_view atom) {
    AtomId id = external_id(atom);
    grounder_.program().externals.erase(id);
    released_.insert(id);
}

std::vector<LcModel> Session::solve() {
    auto const &prg = program();
    auto models = enumerate_lazy(prg, signature(prg, opts_.policy), opts_.solve);
    if (!opts_.project || prg.shows.empty()) { return models; }
    std::vector<LcModel> res;
    std::set<Interpretation> seen;
    for (auto &model : models) {
        Interpretation shown;
        for (AtomId atom : model.atoms) {
            if (!prg.hidden(atom)) { shown.insert(atom); }
        }
        if (!seen.insert(shown).second) { continue; }
        model.atoms = std::move(shown);
        res.push_back(std::move(model));
    }
    return res;
}

std::vector<StepResult> solve_incremental(Session &session, unsigned max_step,
                                          std::function<void(StepResult const &)> const &on_step) {
    auto query = [](unsigned n) { return "query(" + std::to_string(n) + ")"; };
    auto has_query = [&](unsigned n) {
        auto id = session.program().find(query(n));
        return id && session.program().externals.count(*id) > 0;
    };
    std::vector<StepResult> results;
    for (unsigned n = 0; n <= max_step; ++n) {
        auto arg = syntax::Term::integer(n);
        if (n == 0) { session.ground({{"base", {}}, {"check", {arg}}}); }
        else { session.ground({{"step", {arg}}, {"check", {arg}}}); }
        if (has_query(n)) { session.assign_external(query(n), true); }
        if (n > 0 && has_query(n - 1)) { session.assign_external(query(n - 1), false); }
        results.push_back(StepResult{n, session.solve()});
        if (on_step) { on_step(results.back()); }
        if (!results.back().models.empty()) { break; }
    }
    return results;
}

} // namespace lcasp
