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
#include "cli.hpp"

#include <lcasp/grounder.hpp>
#include <lcasp/multishot.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace lcasp::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string mode = "lazy";
    std::string theory = "auto";
    std::string setting;
    std::string strict;
    std::string strict_file;
    std::string epsilon;
    std::size_t models = 0;
    std::string format = "text";
    double time_limit = 0;
    bool project = false;
};

std::string read_file(std::string const &path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) { throw InputError(path + ": cannot open file"); }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

//! Parses and concatenates input files; each file starts in part `base`.
syntax::Program load_program(std::vector<std::string> const &files) {
    syntax::Program prg;
    for (auto const &file : files) {
        syntax::Program part;
        try {
            part = syntax::parse_program(read_file(file));
        }
        catch (syntax::ParseError const &e) {
            throw InputError(file + ":" + e.what());
        }
        if (!prg.statements.empty()) { prg.statements.emplace_back(syntax::ProgramDirective{"base", {}}); }
        prg.statements.insert(prg.statements.end(), part.statements.begin(), part.statements.end());
    }
    return prg;
}

Theory theory_of(std::string const &name) {
    if (name == "dl") { return Theory::dl; }
    if (name == "lp") { return Theory::lp; }
    return Theory::automatic;
}

TheoryOptions theory_options(RunConfig const &cfg) {
    TheoryOptions opts;
    opts.theory = theory_of(cfg.theory);
    std::string text = cfg.epsilon;
    if (text.empty()) {
        if (char const *env = std::getenv("LCASP_EPSILON"); env != nullptr && *env != '\0') { text = env; }
    }
    if (!text.empty()) {
        try {
            opts.epsilon = parse_rational(text);
        }
        catch (std::invalid_argument const &) {
            throw UsageError("invalid epsilon '" + text + "'");
        }
        if (opts.epsilon <= 0) { throw UsageError("epsilon must be positive"); }
        opts.epsilon_explicit = true;
    }
    return opts;
}

StrictPolicy strict_policy(RunConfig const &cfg) {
    StrictPolicy policy;
    if (!cfg.setting.empty()) { policy = policy_of(*parse_preset(cfg.setting)); }
    if (cfg.strict == "all") { policy.base = StrictPolicy::Base::all_strict; }
    else if (cfg.strict == "none") { policy.base = StrictPolicy::Base::all_nonstrict; }
    else if (cfg.strict == "default") { policy.base = StrictPolicy::Base::default_; }
    if (!cfg.strict_file.empty()) {
        auto file = StrictPolicy::parse(read_file(cfg.strict_file));
        for (auto const &entry : file.overrides) { policy.overrides.insert_or_assign(entry.first, entry.second); }
    }
    return policy;
}

void warn_setting(RunConfig const &cfg, GroundProgram const &prg, SemanticSetting const &setting, std::ostream &err) {
    if (cfg.setting.empty()) { return; }
    bool defined = cfg.setting.rfind("defined", 0) == 0;
    for (AtomId atom : setting.atoms) {
        if (setting.is_defined(atom) != defined) {
            err << "warning: lc-atom " << prg.name(atom) << " is " << (defined ? "external" : "defined")
                << " but the setting is " << cfg.setting << "\n";
        }
    }
}

Deadline deadline_of(double seconds) {
    if (seconds <= 0) { return std::nullopt; }
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

std::vector<LcModel> project(GroundProgram const &prg, std::vector<LcModel> models) {
    std::vector<LcModel> res;
    std::set<Interpretation> seen;
    for (auto &model : models) {
        Interpretation shown;
        for (AtomId atom : model.atoms) {
            if (!prg.hidden(atom)) { shown.insert(atom); }
        }
        if (seen.insert(shown).second) {
            model.atoms = std::move(shown);
            res.push_back(std::move(model));
        }
    }
    return res;
}

std::vector<std::string> shown_names(GroundProgram const &prg, Interpretation const &atoms) {
    Interpretation shown;
    for (AtomId atom : atoms) {
        if (!prg.hidden(atom)) { shown.insert(atom); }
    }
    return atom_names(prg, shown);
}

void print_text(GroundProgram const &prg, std::vector<LcModel> const &models, std::ostream &out) {
    std::optional<Rational> best;
    bool maximize = !prg.objectives.empty() && std::all_of(prg.objectives.begin(), prg.objectives.end(),
                                                           [](Objective const &o) { return o.maximize; });
    bool unbounded = false;
    for (std::size_t i = 0; i < models.size(); ++i) {
        auto const &model = models[i];
        out << "Answer: " << i + 1 << "\n";
        auto names = shown_names(prg, model.atoms);
        for (std::size_t j = 0; j < names.size(); ++j) { out << (j > 0 ? " " : "") << names[j]; }
        out << "\nAssignment:";
        for (auto const &[var, val] : model.witness) { out << " " << var << "=" << to_text(val); }
        out << "\n";
        if (model.unbounded) {
            out << "Optimization: unbounded\n";
            unbounded = true;
        }
        else if (model.objective) {
            out << "Optimization: " << to_text(*model.objective) << "\n";
            if (!best || (maximize ? *model.objective > *best : *model.objective < *best)) { best = model.objective; }
        }
    }
    out << (models.empty() ? "UNSATISFIABLE" : "SATISFIABLE") << "\n";
    out << "Models: " << models.size() << "\n";
    if (unbounded) { out << "Best: unbounded\n"; }
    else if (best) { out << "Best: " << to_text(*best) << "\n"; }
}

std::string set_text(std::set<std::vector<std::string>> const &sets) {
    std::string res = "{";
    bool first = true;
    for (auto const &set : sets) {
        res += first ? "{" : ", {";
        first = false;
        for (std::size_t i = 0; i < set.size(); ++i) { res += (i > 0 ? ", " : "") + set[i]; }
        res += "}";
    }
    return res + "}";
}

// {{{1 subcommands

int cmd_solve(std::vector<std::string> const &files, RunConfig const &cfg, std::ostream &out, std::ostream &err) {
    auto prg = ground(load_program(files));
    auto setting = signature(prg, strict_policy(cfg));
    warn_setting(cfg, prg, setting, err);
    LcOptions opts;
    opts.theory = theory_options(cfg);
    opts.limit = cfg.models;
    opts.deadline = deadline_of(cfg.time_limit);
    auto models = cfg.mode == "reference" ? enumerate_reference(prg, setting, opts) : enumerate_lazy(prg, setting, opts);
    if (cfg.project) { models = project(prg, std::move(models)); }
    if (cfg.format == "json") { out << to_json(prg, models).dump(2) << "\n"; }
    else { print_text(prg, models, out); }
    if (cfg.models > 0 && models.size() >= cfg.models) { return exit_code::limit; }
    return models.empty() ? exit_code::unsat : exit_code::sat;
}

int cmd_ground(std::vector<std::string> const &files, std::ostream &out) {
    out << print_ground(ground(load_program(files)));
    return 0;
}

int cmd_incremental(std::vector<std::string> const &files, RunConfig const &cfg, unsigned max_step, std::ostream &out,
                    std::ostream &err) {
    SessionOptions opts;
    opts.policy = strict_policy(cfg);
    opts.solve.theory = theory_options(cfg);
    opts.solve.deadline = deadline_of(cfg.time_limit);
    opts.project = true;
    Session session(load_program(files), opts);
    auto results = solve_incremental(session, max_step, [&](StepResult const &res) {
        if (cfg.format == "text") { out << "Step " << res.step << ": " << res.models.size() << " model(s)\n"; }
    });
    auto const &last = results.back();
    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["steps"] = nlohmann::json::array();
        for (auto const &res : results) { doc["steps"].push_back({{"step", res.step}, {"models", res.models.size()}}); }
        doc["models"] = to_json(session.program(), last.models);
        out << doc.dump(2) << "\n";
    }
    else {
        print_text(session.program(), last.models, out);
    }
    if (last.models.empty()) { err << "no model up to step " << last.step << "\n"; }
    return last.models.empty() ? exit_code::unsat : exit_code::sat;
}

int cmd_prop2(RunConfig const &cfg, std::ostream &out) {
    struct Witness {
        char const *text;
        std::set<std::vector<std::string>> sm;
        std::set<std::vector<std::string>> lc;
    };
    std::vector<Witness> witnesses{
        {":- &sum{x}<=1.\n:- &sum{x}>1.\n", {{}}, {}},
        {":- not &sum{x}<=1.\n", {}, {{"&sum{x}<=1"}}},
    };
    LcOptions opts;
    opts.theory = theory_options(cfg);
    bool ok = true;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        auto const &w = witnesses[i];
        auto prg = ground(syntax::parse_program(w.text));
        auto setting = signature(prg, policy_of(Preset::external_strict));
        std::set<std::vector<std::string>> sm;
        for (auto const &x : enumerate_stable_models(prg)) { sm.insert(atom_names(prg, x)); }
        std::set<std::vector<std::string>> lc;
        for (auto const &m : enumerate_reference(prg, setting, opts)) { lc.insert(atom_names(prg, m.atoms)); }
        bool match = sm == w.sm && lc == w.lc;
        ok = ok && match;
        out << "witness " << i + 1 << " (external-strict):";
        std::istringstream lines(w.text);
        for (std::string line; std::getline(lines, line);) { out << " " << line; }
        out << "\n  SM    expected " << set_text(w.sm) << " actual " << set_text(sm) << "\n";
        out << "  SM_lc expected " << set_text(w.lc) << " actual " << set_text(lc) << "\n";
        out << "  " << (match ? "ok" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_check_props(RunConfig const &cfg, std::size_t count, std::uint64_t seed, bool lazy, std::string const &fixed,
                    std::ostream &out) {
    if (!fixed.empty()) { return cmd_prop2(cfg, out); }
    auto report = check_propositions(count, seed, theory_options(cfg), lazy);
    out << "programs: " << report.programs << "\n";
    out << "checks:";
    for (auto const &[claim, n] : report.checks) { out << " " << claim << "=" << n; }
    out << "\nviolations: " << report.violations.size() << "\n";
    for (auto const &v : report.violations) {
        std::ostringstream hash;
        hash << std::hex << std::setw(16) << std::setfill('0') << v.hash;
        out << "VIOLATION " << to_string(v.setting) << " " << hash.str() << "\n";
        out << "% claim " << v.claim << "\n" << v.program << "\n";
    }
    return report.violations.empty() ? 0 : 1;
}

int cmd_bench(std::string const &dir, RunConfig const &cfg, double timeout, std::ostream &out) {
    if (!fs::is_directory(dir)) { throw InputError(dir + ": not a directory"); }
    std::vector<fs::path> files;
    for (auto const &entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".lp") { files.push_back(entry.path()); }
    }
    std::sort(files.begin(), files.end());
    struct Row {
        std::string cls;
        std::string instance;
        std::string verdict;
        double seconds;
    };
    std::vector<Row> rows;
    for (auto const &file : files) {
        auto rel = fs::relative(file, dir);
        std::string cls = rel.has_parent_path() ? rel.parent_path().string() : fs::path(dir).filename().string();
        auto start = Clock::now();
        std::string verdict;
        try {
            auto prg = ground(load_program({file.string()}));
            auto setting = signature(prg, strict_policy(cfg));
            LcOptions opts;
            opts.theory = theory_options(cfg);
            opts.limit = 1;
            opts.deadline = deadline_of(timeout);
            auto models =
                cfg.mode == "reference" ? enumerate_reference(prg, setting, opts) : enumerate_lazy(prg, setting, opts);
            verdict = models.empty() ? "UNSAT" : "SAT";
        }
        catch (TimeoutError const &) {
            verdict = "TIMEOUT";
        }
        catch (std::exception const &) {
            verdict = "ERROR";
        }
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (verdict == "TIMEOUT") { seconds = timeout; }
        rows.push_back(Row{cls, rel.string(), verdict, seconds});
    }
    std::map<std::string, std::tuple<std::size_t, double, std::size_t>> classes;
    for (auto const &row : rows) {
        auto &[n, total, timeouts] = classes[row.cls];
        ++n;
        total += row.seconds;
        if (row.verdict == "TIMEOUT") { ++timeouts; }
    }
    out << std::fixed << std::setprecision(3);
    if (cfg.format == "csv") {
        out << "class,instances,t,to\n";
        for (auto const &[cls, stats] : classes) {
            auto const &[n, total, timeouts] = stats;
            out << cls << "," << n << "," << total / static_cast<double>(n) << "," << timeouts << "\n";
        }
        return 0;
    }
    for (auto const &row : rows) {
        out << std::left << std::setw(24) << row.instance << " " << std::setw(8) << row.verdict << " " << row.seconds
            << "\n";
    }
    if (!rows.empty()) { out << "\n"; }
    out << std::left << std::setw(12) << "class" << std::right << std::setw(6) << "n" << std::setw(10) << "t"
        << std::setw(6) << "to" << "\n";
    for (auto const &[cls, stats] : classes) {
        auto const &[n, total, timeouts] = stats;
        out << std::left << std::setw(12) << cls << std::right << std::setw(6) << n << std::setw(10)
            << total / static_cast<double>(n) << std::setw(6) << timeouts << "\n";
    }
    return 0;
}

void add_common(CLI::App &cmd, RunConfig &cfg) {
    cmd.add_option("--theory", cfg.theory, "Theory backend")->check(CLI::IsMember({"dl", "lp", "auto"}));
    cmd.add_option("--setting", cfg.setting, "Semantic setting preset")
        ->check(CLI::IsMember({"defined-strict", "defined-nonstrict", "external-strict", "external-nonstrict"}));
    cmd.add_option("--strict", cfg.strict, "Strictness of all lc-atoms (all, none or default)")
        ->check(CLI::IsMember({"all", "none", "default"}));
    cmd.add_option("--strict-file", cfg.strict_file, "Per-atom strictness file");
    cmd.add_option("--epsilon", cfg.epsilon, "Epsilon for strict relations over the reals");
    cmd.add_option("--time-limit", cfg.time_limit, "Time limit in seconds (0 for none)");
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) { return parse_decimal(text); }
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (!is_integral(num) || !is_integral(den) || den == 0) { throw std::invalid_argument("invalid fraction"); }
    Rational res = num / den;
    res.canonicalize();
    return res;
}

nlohmann::json to_json(GroundProgram const &prg, std::vector<LcModel> const &models) {
    auto doc = nlohmann::json::array();
    for (auto const &model : models) {
        nlohmann::json entry;
        entry["atoms"] = shown_names(prg, model.atoms);
        entry["assignment"] = nlohmann::json::object();
        for (auto const &[var, val] : model.witness) { entry["assignment"][var] = to_fraction(val); }
        if (model.unbounded) { entry["unbounded"] = true; }
        else if (model.objective) { entry["objective"] = to_fraction(*model.objective); }
        doc.push_back(std::move(entry));
    }
    return doc;
}

std::vector<std::pair<std::vector<std::string>, Valuation>> from_json(nlohmann::json const &doc) {
    std::vector<std::pair<std::vector<std::string>, Valuation>> res;
    for (auto const &entry : doc) {
        Valuation witness;
        for (auto const &[var, val] : entry.at("assignment").items()) {
            witness[var] = parse_rational(val.get<std::string>());
        }
        res.emplace_back(entry.at("atoms").get<std::vector<std::string>>(), std::move(witness));
    }
    return res;
}

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Answer set solving with linear constraints", "lcasp"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::vector<std::string> files;

    auto *solve = app.add_subcommand("solve", "Enumerate lc-stable models");
    solve->add_option("files", files, "Input files ('-' for stdin)")->required();
    solve->add_option("--mode", cfg.mode, "Enumeration mode")->check(CLI::IsMember({"reference", "lazy"}));
    solve->add_option("--models,-n", cfg.models, "Maximal number of models (0 for all)");
    solve->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    solve->add_flag("--project", cfg.project, "Project models onto #show atoms");
    add_common(*solve, cfg);

    auto *ground_cmd = app.add_subcommand("ground", "Print the ground program");
    ground_cmd->add_option("files", files, "Input files ('-' for stdin)")->required();

    std::size_t count = 1000;
    std::uint64_t seed = 0;
    bool lazy = false;
    std::string fixed;
    auto *props = app.add_subcommand("check-props", "Check the setting inclusions on random programs");
    props->add_option("--count", count, "Programs per setting");
    props->add_option("--seed", seed, "Seed of the program generator");
    props->add_flag("--lazy", lazy, "Also compare lazy against reference enumeration");
    props->add_option("--fixed", fixed, "Run fixed counterexamples instead")->check(CLI::IsMember({"prop2"}));
    add_common(*props, cfg);

    std::string suite;
    double timeout = 10;
    auto *bench = app.add_subcommand("bench", "Time all instances of a benchmark suite");
    bench->add_option("suite", suite, "Directory with .lp instances")->required();
    bench->add_option("--timeout", timeout, "Per-instance time limit in seconds");
    bench->add_option("--mode", cfg.mode, "Enumeration mode")->check(CLI::IsMember({"reference", "lazy"}));
    bench->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
    add_common(*bench, cfg);

    unsigned max_step = 32;
    auto *incremental = app.add_subcommand("incremental", "Solve base/step/check programs step by step");
    incremental->add_option("files", files, "Input files")->required();
    incremental->add_option("--max-step", max_step, "Last step to try");
    incremental->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    add_common(*incremental, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::ParseError const &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_code::usage;
    }

    try {
        if (*solve) { return cmd_solve(files, cfg, out, err); }
        if (*ground_cmd) { return cmd_ground(files, out); }
        if (*props) { return cmd_check_props(cfg, count, seed, lazy, fixed, out); }
        if (*bench) { return cmd_bench(suite, cfg, timeout, out); }
        if (*incremental) { return cmd_incremental(files, cfg, max_step, out, err); }
    }
    catch (UsageError const &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    catch (InputError const &e) {
        err << e.what() << "\n";
        return exit_code::data;
    }
    catch (LimitError const &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::software;
    }
    catch (TimeoutError const &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::software;
    }
    catch (std::exception const &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::data;
    }
    return exit_code::usage;
}

} // namespace lcasp::cli
