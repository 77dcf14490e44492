// Copyright 2026 The cvstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cvstab/cvstab.hpp"

namespace cvstab::cli {

/// Exit codes: 0 success, 1 domain failure (invalid code, UNSAT, FAIL), 2 usage or parse error.
enum ExitCode : int {
    kOk = 0,
    kDomainFailure = 1,
    kUsageError = 2,
};

/// Thrown for problems with the invocation or its inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string builtin_list() {
    std::string out;
    for (const auto &n : builtin_names()) {
        out += (out.empty() ? "" : ", ") + n;
    }
    return out;
}

struct LoadedCode {
    StabilizerCode code;
    LogicalBasis basis;
};

/// A builtin name or a path to a cvstab file. Logical pairs in the file are
/// used when present, otherwise a basis is derived.
inline LoadedCode load_code(const std::string &source) {
    if (is_builtin(source)) {
        auto entry = builtin(source);
        return {std::move(entry.code), std::move(entry.basis)};
    }
    if (!std::filesystem::exists(source)) {
        throw UsageError("'" + source + "' is neither a builtin code (" + builtin_list() + ") nor a readable file");
    }
    CodeDocument doc;
    try {
        doc = parse_code_text(read_file(source));
    } catch (const ParseError &e) {
        throw UsageError(source + ": " + e.what());
    }
    StabilizerCode code = validate(doc.n, std::move(doc.rows), std::filesystem::path(source).stem().string());
    if (doc.logicals.empty()) {
        LogicalBasis basis = logical_basis(code);
        return {std::move(code), std::move(basis)};
    }
    LogicalBasis basis = make_logical_basis(code, std::move(doc.logicals), LogicalSource::file);
    return {std::move(code), std::move(basis)};
}

inline std::string vector_line(const std::vector<double> &v, std::size_t n) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += n != 0 && i == n ? " | " : ", ";
        }
        out += format_number(v[i]);
    }
    return out + ")";
}

inline std::vector<double> parse_number_list(const std::string &text) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw UsageError("empty entry in list '" + text + "'");
        }
        try {
            out.push_back(detail::parse_double(item.substr(first, last - first + 1)));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    if (out.empty()) {
        throw UsageError("empty list");
    }
    return out;
}

inline void write_show(std::ostream &out, const std::string &name, const StabilizerCode &code, const LogicalBasis &basis) {
    out << "# " << name << ": " << code.num_modes() << " modes, " << code.num_generators() << " generators, "
        << code.num_logical_modes() << " logical mode" << (code.num_logical_modes() == 1 ? "" : "s") << "\n";
    out << "# logical operators: " << to_string(basis.source()) << "\n";
    out << format_code_text(code, &basis);
    out << "# syndrome observables (zero on the code space)\n";
    auto obs = syndrome_observables(code);
    for (std::size_t j = 0; j < obs.size(); ++j) {
        out << "# m" << j + 1 << " = " << obs[j].str() << "\n";
    }
}

inline void write_vector_rows(std::ostream &out, const char *keyword, const std::vector<PauliVector> &rows) {
    for (const auto &v : rows) {
        out << keyword << detail::format_vector_words(v) << "\n";
    }
}

struct Options {
    std::string name;
    std::string source;
    std::uint64_t max_nodes = kDefaultLiftBudget;
    std::vector<std::string> errors;
    std::string syndrome;
    std::string decoder = "single-mode";
    double tol = kDefaultTolerance;
    double match_tol = kDefaultTolerance;
    std::string model;
    double sigma_m = 0.0;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string csv;
    std::string trials_csv;
    std::string param = "sigma-m";
    std::string values;
};

inline int cmd_show(const Options &o, std::ostream &out) {
    if (!is_builtin(o.name)) {
        throw UsageError("unknown builtin code '" + o.name + "'; available: " + builtin_list());
    }
    auto entry = builtin(o.name);
    write_show(out, o.name, entry.code, entry.basis);
    return kOk;
}

inline int cmd_validate(const Options &o, std::ostream &out) {
    CodeDocument doc;
    std::string text = is_builtin(o.source) ? std::string() : read_file(o.source);
    if (is_builtin(o.source)) {
        auto entry = builtin(o.source);
        text = format_code_text(entry.code, &entry.basis);
    }
    try {
        doc = parse_code_text(text);
    } catch (const ParseError &e) {
        throw UsageError(o.source + ": " + e.what());
    }
    try {
        StabilizerCode code = validate(doc.n, doc.rows);
        if (!doc.logicals.empty()) {
            make_logical_basis(code, doc.logicals, LogicalSource::file);
        }
        out << "PASS n=" << code.num_modes() << " k=" << code.num_generators()
            << " logical-modes=" << code.num_logical_modes();
        if (!doc.logicals.empty()) {
            out << " logical-pairs=" << doc.logicals.size() << " (checked)";
        }
        out << "\n";
        return kOk;
    } catch (const InvalidLogicalBasis &e) {
        out << "FAIL logical basis: " << e.what() << "\n";
    } catch (const std::invalid_argument &e) {
        out << "FAIL " << e.what() << "\n";
    }
    return kDomainFailure;
}

inline int cmd_logicals(const Options &o, std::ostream &out) {
    auto loaded = load_code(o.source);
    auto basis = logical_basis(loaded.code);
    out << "# derived logical basis: " << basis.size() << " pair" << (basis.size() == 1 ? "" : "s")
        << ", omega(x_i, z_j) = delta_ij\n";
    for (const auto &p : basis.pairs()) {
        out << "logical x" << detail::format_vector_words(p.x) << "\n";
        out << "logical z" << detail::format_vector_words(p.z) << "\n";
    }
    return kOk;
}

inline int cmd_complement(const Options &o, std::ostream &out) {
    auto loaded = load_code(o.source);
    const Subspace &c = loaded.code.normalizer_space();
    out << "# symplectic complement of the stabilizer: 2n - k = " << 2 * loaded.code.num_modes() << " - "
        << loaded.code.num_generators() << "\n";
    out << "dim " << c.dim() << "\n";
    write_vector_rows(out, "vec", c.basis());
    return kOk;
}

inline int cmd_lift(const Options &o, std::ostream &out) {
    BinaryCodeDocument doc = [&] {
        try {
            return parse_binary_code(read_file(o.source));
        } catch (const ParseError &e) {
            throw UsageError(o.source + ": " + e.what());
        }
    }();
    LiftOutcome lifted;
    try {
        lifted = lift_signs(doc.checks, o.max_nodes);
    } catch (const RankDeficient &e) {
        out << "FAIL " << e.what() << "\n";
        return kDomainFailure;
    }
    if (lifted.status != LiftStatus::found) {
        out << to_string(lifted.status) << " nodes=" << lifted.nodes << "\n";
        return kDomainFailure;
    }
    StabilizerCode code = verify_lift(doc.checks, lifted.assignment, "lifted");
    out << "# lifted from " << doc.checks.num_rows() << " binary rows, " << lifted.nodes << " search nodes\n";
    std::string logical_text;
    if (!doc.logicals.empty()) {
        auto logicals = lift_logicals(doc.logicals, code, o.max_nodes);
        if (logicals.status != LiftStatus::found) {
            out << "# logical lift: " << to_string(logicals.status) << "\n";
        } else {
            std::vector<HyperbolicPair> pairs;
            bool paired = doc.logical_kinds.size() % 2 == 0;
            for (std::size_t i = 0; paired && i < doc.logical_kinds.size(); i += 2) {
                paired = doc.logical_kinds[i] == 'x' && doc.logical_kinds[i + 1] == 'z';
                if (paired) {
                    pairs.push_back({logicals.logicals[i], logicals.logicals[i + 1]});
                }
            }
            std::string why;
            if (paired) {
                try {
                    LogicalBasis basis = make_logical_basis(code, pairs, LogicalSource::derived);
                    for (const auto &p : basis.pairs()) {
                        logical_text += "logical x" + detail::format_vector_words(p.x) + "\n";
                        logical_text += "logical z" + detail::format_vector_words(p.z) + "\n";
                    }
                } catch (const std::invalid_argument &e) {
                    why = e.what();
                }
            } else {
                why = "logicals are not given as x/z pairs";
            }
            if (logical_text.empty()) {
                out << "# lifted logicals commute with the stabilizer but do not form a logical basis (" << why
                    << ")\n";
                for (std::size_t i = 0; i < logicals.logicals.size(); ++i) {
                    out << "# logical " << doc.logical_kinds[i]
                        << detail::format_vector_words(logicals.logicals[i]) << "\n";
                }
            }
        }
    }
    out << format_code_text(code);
    out << logical_text;
    return kOk;
}

inline ShiftError parse_errors(const std::vector<std::string> &specs, std::size_t n) {
    FixedShift fixed;
    for (const auto &s : specs) {
        try {
            fixed.shifts.push_back(parse_mode_shift(s));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    try {
        check_model(fixed, n);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    Rng unused = trial_rng(0, 0);
    return sample_error(fixed, n, unused);
}

inline int cmd_syndrome(const Options &o, std::ostream &out) {
    auto loaded = load_code(o.source);
    if (o.errors.empty()) {
        throw UsageError("syndrome needs at least one --error mode=<m>,q=<x>,p=<y>");
    }
    ShiftError e = parse_errors(o.errors, loaded.code.num_modes());
    out << vector_line(syndrome(loaded.code, e).values, 0) << "\n";
    return kOk;
}

inline int cmd_decode(const Options &o, std::ostream &out) {
    auto loaded = load_code(o.source);
    Syndrome s{parse_number_list(o.syndrome)};
    if (s.values.size() != loaded.code.num_generators()) {
        throw UsageError(
            "syndrome has " + std::to_string(s.values.size()) + " values but the code has " +
            std::to_string(loaded.code.num_generators()) + " generators");
    }
    DecoderKind kind;
    try {
        kind = parse_decoder(o.decoder);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    SyndromeDecoder decoder(loaded.code);
    Correction c = kind == DecoderKind::min_norm ? decoder.min_norm(s, o.tol) : decoder.single_mode(s, o.tol);
    const std::size_t n = loaded.code.num_modes();
    out << "decoder " << to_string(kind) << "\n";
    if (c.mode) {
        out << "mode " << *c.mode + 1 << "\n";
        out << "shift q=" << format_number(c.shift.q(*c.mode)) << " p=" << format_number(c.shift.p(*c.mode)) << "\n";
    } else {
        out << "mode -\n";
    }
    out << "correction " << vector_line(c.shift.displacement, n) << "\n";
    out << "fit-residual " << format_number(c.fit_residual) << "\n";
    out << "status " << (c.matched ? "success" : "failure") << "\n";
    return c.matched ? kOk : kDomainFailure;
}

inline int cmd_check(const Options &o, std::ostream &out) {
    auto loaded = load_code(o.source);
    auto report = check_single_mode_correctability(loaded.code, loaded.basis);
    for (ShiftFamily f : {ShiftFamily::arbitrary, ShiftFamily::q_only, ShiftFamily::p_only}) {
        out << to_string(f) << ": " << (report.passes(f) ? "PASS" : "FAIL") << "\n";
    }
    for (const auto &fail : report.failures) {
        out << "witness " << to_string(fail.family) << " modes " << fail.first_mode + 1 << "," << fail.second_mode + 1
            << ": " << fail.witness.str() << "\n";
    }
    return report.arbitrary ? kOk : kDomainFailure;
}

inline SimConfig sim_config(const Options &o, std::size_t n) {
    SimConfig config;
    try {
        config.model = parse_error_model(o.model);
        config.decoder = parse_decoder(o.decoder);
        check_model(config.model, n);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    config.noise.sigma = o.sigma_m;
    config.trials = o.trials;
    config.seed = o.seed;
    config.tolerance = o.tol;
    config.match_tolerance = o.match_tol;
    config.threads = o.threads;
    return config;
}

inline void emit_csv(const std::string &path, std::ostream &out, const std::string &text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write '" + path + "'");
    }
    f << text;
}

inline int cmd_simulate(const Options &o, std::ostream &out, std::ostream &err) {
    auto loaded = load_code(o.source);
    SimConfig config = sim_config(o, loaded.code.num_modes());
    config.keep_records = !o.trials_csv.empty();
    SimRun run;
    try {
        run = run_trials(loaded.code, loaded.basis, config);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    std::ostringstream csv;
    std::vector<SweepRow> rows = {{o.sigma_m, run.summary}};
    write_summary_csv(csv, rows);
    emit_csv(o.csv, out, csv.str());
    if (!o.trials_csv.empty()) {
        std::ostringstream t;
        write_trials_csv(t, run.records);
        emit_csv(o.trials_csv, out, t.str());
    }
    err << "# " << run.summary.trials << " trials, " << run.summary.failures() << " failures, "
        << format_number(run.summary.wall_seconds) << " s\n";
    return kOk;
}

inline int cmd_sweep(const Options &o, std::ostream &out) {
    auto loaded = load_code(o.source);
    SimConfig config = sim_config(o, loaded.code.num_modes());
    std::vector<double> grid = parse_number_list(o.values);
    std::vector<SweepRow> rows;
    try {
        rows = sweep(loaded.code, loaded.basis, config, parse_sweep_parameter(o.param), grid);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    std::ostringstream csv;
    write_summary_csv(csv, rows);
    emit_csv(o.csv, out, csv.str());
    return kOk;
}

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Continuous-variable stabilizer codes: construct, validate, lift, decode, simulate."};
    app.name("cvstab");
    app.require_subcommand(1, 1);
    Options o;

    auto *show = app.add_subcommand("show", "Print a builtin code, its logicals and syndrome observables");
    show->add_option("name", o.name, "Builtin code name")->required();

    auto *val = app.add_subcommand("validate", "Check isotropy, rank and any logical pairs of a code file");
    auto *logicals = app.add_subcommand("logicals", "Derive a symplectic logical basis");
    auto *comp = app.add_subcommand("complement", "Print a basis of the symplectic complement");
    auto *check = app.add_subcommand("check", "Certify single-mode shift correctability");
    for (auto *sub : {val, logicals, comp, check}) {
        sub->add_option("code", o.source, "cvstab file or builtin name")->required();
    }

    auto *lift = app.add_subcommand("lift", "Sign-lift a binary stabilizer code to a CV code");
    lift->add_option("file", o.source, "Pauli-string or 'bits 1' file")->required();
    lift->add_option("--max-nodes", o.max_nodes, "Search node budget");

    auto *syn = app.add_subcommand("syndrome", "Syndrome of a fixed shift error");
    syn->add_option("code", o.source, "cvstab file or builtin name")->required();
    syn->add_option("--error", o.errors, "mode=<m>,q=<x>,p=<y> (repeatable, shifts add)")->required();

    auto *dec = app.add_subcommand("decode", "Decode a syndrome");
    dec->add_option("code", o.source, "cvstab file or builtin name")->required();
    dec->add_option("--syndrome", o.syndrome, "Comma-separated syndrome values")->required();
    dec->add_option("--decoder", o.decoder, "single-mode or min-norm");
    dec->add_option("--tol", o.tol, "Syndrome-match tolerance");

    auto *sim = app.add_subcommand("simulate", "Monte Carlo decoding run; summary CSV");
    auto *swp = app.add_subcommand("sweep", "Monte Carlo runs over a parameter grid; CSV");
    for (auto *sub : {sim, swp}) {
        sub->add_option("code", o.source, "cvstab file or builtin name")->required();
        sub->add_option("--model", o.model, "Error model, e.g. single-mode-gaussian:sigma=0.5,restrict=q")
            ->required();
        sub->add_option("--decoder", o.decoder, "single-mode or min-norm");
        sub->add_option("--sigma-m", o.sigma_m, "Syndrome measurement noise");
        sub->add_option("--trials", o.trials, "Trials per run");
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--tol", o.tol, "Success tolerance on logical displacement");
        sub->add_option("--match-tol", o.match_tol, "Syndrome-match tolerance");
        sub->add_option("--threads", o.threads, "Worker threads (results do not depend on it)");
        sub->add_option("--csv", o.csv, "Output path for the summary CSV (default: stdout)");
    }
    sim->add_option("--trials-csv", o.trials_csv, "Output path for a per-trial CSV");
    swp->add_option("--param", o.param, "sigma or sigma-m");
    swp->add_option("--values", o.values, "Comma-separated grid values")->required();

    std::vector<const char *> argv = {"cvstab"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (show->parsed()) {
            return cmd_show(o, out);
        }
        if (val->parsed()) {
            return cmd_validate(o, out);
        }
        if (logicals->parsed()) {
            return cmd_logicals(o, out);
        }
        if (comp->parsed()) {
            return cmd_complement(o, out);
        }
        if (lift->parsed()) {
            return cmd_lift(o, out);
        }
        if (syn->parsed()) {
            return cmd_syndrome(o, out);
        }
        if (dec->parsed()) {
            return cmd_decode(o, out);
        }
        if (check->parsed()) {
            return cmd_check(o, out);
        }
        if (sim->parsed()) {
            return cmd_simulate(o, out, err);
        }
        if (swp->parsed()) {
            return cmd_sweep(o, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        // Invalid codes and other domain failures.
        err << "error: " << e.what() << "\n";
        return kDomainFailure;
    }
    return kUsageError;
}

}  // namespace cvstab::cli
