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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "cvstab/cvstab.hpp"
#include "oracle.hpp"

using namespace cvstab;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

bool is_isotropic_exact(const StabilizerCode &code) {
    const auto &g = code.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (symplectic_form(g[i], g[j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

bool commutes_with_all(const StabilizerCode &code, const PauliVector &v) {
    for (const auto &g : code.generators()) {
        if (symplectic_form(g, v) != 0) {
            return false;
        }
    }
    return true;
}

bool delta_table(const LogicalBasis &basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (symplectic_form(basis[i].x, basis[j].z) != Scalar(i == j ? 1 : 0) ||
                symplectic_form(basis[i].x, basis[j].x) != 0 || symplectic_form(basis[i].z, basis[j].z) != 0) {
                return false;
            }
        }
    }
    return true;
}

BinaryCheckMatrix strip_signs(const StabilizerCode &code) {
    std::vector<BitRow> rows;
    for (const auto &g : code.generators()) {
        BitRow r;
        for (const auto &x : g.coords()) {
            r.push_back(x == 0 ? 0 : 1);
        }
        rows.push_back(std::move(r));
    }
    return BinaryCheckMatrix(code.num_modes(), std::move(rows));
}

SignAssignment printed_signs(const StabilizerCode &code) {
    SignAssignment signs;
    for (const auto &g : code.generators()) {
        std::vector<std::int8_t> r;
        for (const auto &x : g.coords()) {
            r.push_back(x == 0 ? 0 : (x > 0 ? 1 : -1));
        }
        signs.push_back(std::move(r));
    }
    return signs;
}

SimConfig single_mode_config(double sigma, Quadrature restrict, std::uint64_t seed, double sigma_m) {
    SimConfig c;
    c.model = SingleModeGaussian{sigma, restrict};
    c.decoder = DecoderKind::single_mode;
    c.noise.sigma = sigma_m;
    c.trials = 10'000;
    c.seed = seed;
    c.tolerance = 1e-9;
    return c;
}

Verdict builtin_fidelity() {
    Verdict v;
    for (const auto &name : builtin_names()) {
        auto code = builtin(name).code;
        v.require(is_isotropic_exact(code), name + " has a nonzero pairwise form");
        v.require(code.stabilizer_space().dim() == code.num_generators(), name + " is rank deficient");
    }
    v.require(builtin("eight-mode-gottesman").code.num_generators() == 5, "eight-mode generator count");
    v.require(builtin("five-mode-braunstein").code.num_generators() == 4, "five-mode generator count");
    return v;
}

Verdict braunstein_pair() {
    Verdict v;
    auto code = builtin("five-mode-braunstein").code;
    PauliVector x({0, 1, 1, 0, 0}, {1, 0, 0, 0, 0});
    PauliVector z({1, 0, 0, 0, 0}, {0, 1, 1, 0, 0});
    v.require(symplectic_form(x, z) == 1, "omega(x, z) != 1");
    v.require(commutes_with_all(code, x), "x does not commute with the generators");
    v.require(commutes_with_all(code, z), "z does not commute with the generators");
    return v;
}

Verdict dimension_law() {
    Verdict v;
    struct Case {
        const char *name;
        std::size_t dim;
        std::size_t logical_dim;
    };
    for (const auto &c : {Case{"three-mode-q", 4, 2}, Case{"eight-mode-gottesman", 11, 6}, Case{"nine-mode", 10, 2}}) {
        auto code = builtin(c.name).code;
        std::size_t got = code.normalizer_space().dim();
        std::size_t n = code.num_modes();
        std::size_t k = code.num_generators();
        v.require(got == c.dim, std::string(c.name) + " complement dim " + std::to_string(got));
        v.require(got == 2 * n - k, std::string(c.name) + " violates 2n - k");
        v.require(got - k == c.logical_dim, std::string(c.name) + " logical quotient dim");
    }
    return v;
}

Verdict logical_contract() {
    Verdict v;
    for (const auto &name : builtin_names()) {
        auto entry = builtin(name);
        auto derived = logical_basis(entry.code);
        v.require(delta_table(derived), name + " derived basis fails the delta table");
        v.require(delta_table(entry.basis), name + " catalog basis fails the delta table");
        for (const auto &p : entry.basis.pairs()) {
            v.require(commutes_with_all(entry.code, p.x) && commutes_with_all(entry.code, p.z),
                      name + " logical outside the normalizer");
        }
    }
    // Printed eight-mode logicals with X3 resolved to Z(-t) on mode 4.
    auto eight = builtin("eight-mode-gottesman").code;
    const std::vector<PauliVector> printed = {
        PauliVector({1, -1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, -1}),
        PauliVector({0, 0, 0, 0, 0, 0, 0, 0}, {0, -1, 0, 1, 0, -1, 0, 1}),
        PauliVector({1, 0, -1, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0, 1, 0}),
        PauliVector({0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, -1, -1, 0, 0, 1, 1}),
        PauliVector({1, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, -1, 0, 1, 0, 0}),
        PauliVector({0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, -1, -1}),
    };
    for (const auto &p : printed) {
        v.require(commutes_with_all(eight, p), "printed eight-mode logical " + p.str() + " outside the normalizer");
    }
    return v;
}

Verdict concatenation() {
    Verdict v;
    auto outer = builtin("three-mode-q");
    auto inner = builtin("three-mode-p");
    auto c = concatenate(outer.code, outer.basis, inner.code);
    v.require(c.code.num_modes() == 9, "mode count");
    v.require(c.code.num_generators() == 8, "generator count");
    std::vector<Scalar> ones(9, Scalar(1));
    std::vector<Scalar> zeros(9, Scalar(0));
    PauliVector all_s = PauliVector::from_coords([&] {
        auto w = ones;
        w.insert(w.end(), zeros.begin(), zeros.end());
        return w;
    }());
    PauliVector all_t = PauliVector::from_coords([&] {
        auto w = zeros;
        w.insert(w.end(), ones.begin(), ones.end());
        return w;
    }());
    auto cs = contains_logical(c.code, c.basis, all_s);
    auto ct = contains_logical(c.code, c.basis, all_t);
    v.require(cs.kind == Classification::Kind::logical, "all-ones s-part is not a nontrivial logical");
    v.require(ct.kind == Classification::Kind::logical, "all-ones t-part is not a nontrivial logical");
    v.require(symplectic_form(all_s, all_t) != 0, "all-ones logicals commute");
    v.require(c.basis.size() == 1, "logical mode count");
    return v;
}

Verdict lifting() {
    Verdict v;
    for (const char *name : {"eight-mode-gottesman", "five-mode-braunstein"}) {
        auto code = builtin(name).code;
        auto bits = strip_signs(code);
        auto outcome = lift_signs(bits);
        v.require(outcome.status == LiftStatus::found, std::string(name) + " lift status " + to_string(outcome.status));
        if (outcome.status == LiftStatus::found) {
            try {
                auto lifted = verify_lift(bits, outcome.assignment);
                v.require(is_isotropic_exact(lifted), std::string(name) + " lifted rows do not commute");
            } catch (const std::exception &e) {
                v.require(false, std::string(name) + " lift rejected: " + e.what());
            }
        }
        try {
            auto again = verify_lift(bits, printed_signs(code));
            v.require(again.generators() == code.generators(), std::string(name) + " printed signs round trip");
        } catch (const std::exception &e) {
            v.require(false, std::string(name) + " printed signs rejected: " + e.what());
        }
    }
    return v;
}

Verdict decoder_exactness() {
    Verdict v;
    auto [code, basis] = builtin("three-mode-q");
    auto q = run_trials(code, basis, single_mode_config(0.5, Quadrature::q, 0, 0.0));
    v.require(q.summary.trials == 10'000, "trial count");
    v.require(q.summary.failures() == 0, "restrict=q failures " + std::to_string(q.summary.failures()));
    v.require(q.summary.max_logical_disp <= 1e-9, "restrict=q logical displacement");
    auto config = single_mode_config(0.5, Quadrature::p, 0, 0.0);
    config.keep_records = true;
    auto p = run_trials(code, basis, config);
    for (const auto &r : p.records) {
        for (double s : r.syndrome.values) {
            v.require(s == 0.0, "restrict=p trial " + std::to_string(r.index) + " has a nonzero syndrome");
        }
    }
    v.require(p.records.size() == 10'000, "restrict=p record count");
    return v;
}

Verdict one_error_codes() {
    Verdict v;
    for (const char *name : {"five-mode-braunstein", "eight-mode-gottesman"}) {
        auto [code, basis] = builtin(name);
        auto report = check_single_mode_correctability(code, basis);
        v.require(report.arbitrary, std::string(name) + " fails the arbitrary single-mode check");
        auto run = run_trials(code, basis, single_mode_config(1.0, Quadrature::both, 0, 0.0));
        v.require(run.summary.failures() == 0,
                  std::string(name) + " Monte Carlo failures " + std::to_string(run.summary.failures()));
        v.require(run.summary.max_logical_disp <= 1e-9, std::string(name) + " logical displacement");
    }
    return v;
}

Verdict noise_monotonicity() {
    Verdict v;
    auto [code, basis] = builtin("five-mode-braunstein");
    const std::vector<double> grid = {0.0, 0.01, 0.1};
    for (std::uint64_t seed : {0, 1, 2}) {
        auto rows = sweep(code, basis, single_mode_config(0.5, Quadrature::both, seed, 0.0), SweepParameter::sigma_m,
                          grid);
        std::ostringstream rates;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            rates << (i ? " " : "") << rows[i].summary.failure_rate();
        }
        for (std::size_t i = 1; i < rows.size(); ++i) {
            v.require(rows[i].summary.failure_rate() >= rows[i - 1].summary.failure_rate(),
                      "seed " + std::to_string(seed) + " rates " + rates.str());
        }
        v.require(rows.size() == 3 && rows[0].summary.trials == 10'000, "sweep shape");
    }
    return v;
}

bool code_agrees_with_oracle(const StabilizerCode &code) {
    const std::size_t n = code.num_modes();
    auto gens = oracle::coords(code.generators());
    auto comp = symplectic_complement(code.stabilizer_space());
    if (!oracle::same_span(oracle::coords(comp.basis()), oracle::complement(gens, n))) {
        return false;
    }
    for (auto family : {ShiftFamily::arbitrary, ShiftFamily::q_only, ShiftFamily::p_only}) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a; b < n; ++b) {
                auto got = correctability_kernel(code, a, b, family);
                auto expected = oracle::restricted_kernel(gens, n, shift_coordinates(n, a, b, family));
                if (got.dim() != expected.size() || !oracle::same_span(oracle::coords(got.basis()), expected)) {
                    return false;
                }
            }
        }
    }
    return true;
}

Verdict oracle_suite() {
    Verdict v;
    for (const auto &name : builtin_names()) {
        v.require(code_agrees_with_oracle(builtin(name).code), name + " disagrees with the oracle");
    }
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + trial % 4;
        std::size_t k = 1 + (trial / 4) % n;
        auto code = validate(n, oracle::random_isotropic_rows(n, k, rng));
        v.require(code_agrees_with_oracle(code), "random code " + std::to_string(trial) + " disagrees with the oracle");
    }
    return v;
}

Verdict reproducibility() {
    Verdict v;
    const std::vector<std::string> args = {
        "simulate", "five-mode-braunstein", "--model", "single-mode-gaussian:sigma=0.5", "--sigma-m", "0.1",
        "--trials", "5000", "--seed", "11", "--threads", "3"};
    std::string first;
    for (int i = 0; i < 2; ++i) {
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run(args, out, err);
        v.require(code == 0, "simulate exit " + std::to_string(code) + ": " + err.str());
        if (i == 0) {
            first = out.str();
        } else {
            v.require(out.str() == first, "CSV differs between runs");
        }
    }
    v.require(first.find('\n') != std::string::npos && !first.empty(), "empty CSV");
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria = {
        {"builtin fidelity", builtin_fidelity},
        {"braunstein logical pair", braunstein_pair},
        {"dimension law", dimension_law},
        {"logical-basis contract", logical_contract},
        {"concatenation", concatenation},
        {"lifting", lifting},
        {"decoder exactness", decoder_exactness},
        {"one-error codes", one_error_codes},
        {"noise monotonicity", noise_monotonicity},
        {"oracle suite", oracle_suite},
        {"reproducibility", reproducibility},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
        if (!v.pass) {
            std::cout << ": " << v.detail;
            ++failed;
        }
        std::cout << "\n";
    }
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
