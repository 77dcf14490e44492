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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "cvstab/channel.hpp"
#include "cvstab/code.hpp"
#include "cvstab/decode.hpp"

namespace cvstab {

enum class DecoderKind {
    min_norm,
    single_mode,
};

inline const char *to_string(DecoderKind d) {
    return d == DecoderKind::min_norm ? "min-norm" : "single-mode";
}

inline DecoderKind parse_decoder(const std::string &name) {
    if (name == "min-norm") {
        return DecoderKind::min_norm;
    }
    if (name == "single-mode") {
        return DecoderKind::single_mode;
    }
    throw std::invalid_argument("unknown decoder '" + name + "' (expected min-norm or single-mode)");
}

struct SimConfig {
    ErrorModel model = SingleModeGaussian{1.0, Quadrature::both};
    DecoderKind decoder = DecoderKind::single_mode;
    MeasurementNoise noise;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    /// Success tolerance on logical displacement.
    double tolerance = kDefaultTolerance;
    double match_tolerance = kDefaultTolerance;
    unsigned threads = 1;
    bool keep_records = false;
};

struct TrialRecord {
    std::uint64_t index = 0;
    ShiftError error;
    /// As measured, including measurement noise.
    Syndrome syndrome;
    DecodeResult result;
    bool success = false;
};

struct SimSummary {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    /// max over trials of max_i |logical displacement_i|.
    double max_logical_disp = 0.0;
    /// sqrt(mean over trials of |logical displacement|^2).
    double rms_logical_disp = 0.0;
    double wall_seconds = 0.0;
    std::uint64_t seed = 0;

    std::uint64_t failures() const {
        return trials - successes;
    }
    double failure_rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(failures()) / static_cast<double>(trials);
    }
};

struct SimRun {
    SimSummary summary;
    std::vector<TrialRecord> records;
};

/// One trial: sample, measure (plus noise), decode, score.
inline TrialRecord run_trial(
    const StabilizerCode &code, const LogicalBasis &basis, const SyndromeDecoder &decoder, const SimConfig &config,
    std::uint64_t index) {
    Rng rng = trial_rng(config.seed, index);
    TrialRecord rec;
    rec.index = index;
    rec.error = sample_error(config.model, code.num_modes(), rng);
    rec.syndrome = decoder.syndrome(rec.error);
    if (config.noise.sigma > 0.0) {
        std::normal_distribution<double> noise(0.0, config.noise.sigma);
        for (auto &v : rec.syndrome.values) {
            v += noise(rng);
        }
    }
    Correction c = config.decoder == DecoderKind::min_norm ? decoder.min_norm(rec.syndrome, config.match_tolerance)
                                                           : decoder.single_mode(rec.syndrome, config.match_tolerance);
    rec.result = assess(code, basis, rec.error, std::move(c), config.tolerance);
    rec.success = rec.result.success;
    return rec;
}

inline void check_config(const StabilizerCode &code, const LogicalBasis &basis, const SimConfig &config) {
    if (config.trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (!(config.noise.sigma >= 0.0) || !std::isfinite(config.noise.sigma)) {
        throw std::invalid_argument("measurement noise sigma must be finite and non-negative");
    }
    if (!(config.tolerance > 0.0) || !(config.match_tolerance > 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    if (basis.size() != code.num_logical_modes()) {
        throw std::invalid_argument("logical basis does not belong to this code");
    }
    check_model(config.model, code.num_modes());
}

/// Trials are split across threads in contiguous blocks. Each trial draws from
/// its own (seed, index) stream and the reduction runs in index order, so the
/// summary does not depend on the thread count.
inline SimRun run_trials(const StabilizerCode &code, const LogicalBasis &basis, const SimConfig &config) {
    check_config(code, basis, config);
    auto start = std::chrono::steady_clock::now();
    SyndromeDecoder decoder(code);
    const std::uint64_t trials = config.trials;
    std::vector<double> worst(trials, 0.0);
    std::vector<double> norm2(trials, 0.0);
    std::vector<std::uint8_t> ok(trials, 0);
    std::vector<TrialRecord> records(config.keep_records ? trials : 0);

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t) {
            TrialRecord rec = run_trial(code, basis, decoder, config, t);
            double w = 0.0;
            double sq = 0.0;
            for (double v : rec.result.logical_displacement) {
                w = std::max(w, std::abs(v));
                sq += v * v;
            }
            worst[t] = w;
            norm2[t] = sq;
            ok[t] = rec.success ? 1 : 0;
            if (config.keep_records) {
                records[t] = std::move(rec);
            }
        }
    };
    unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(trials)));
    if (threads == 1) {
        work(0, trials);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(work, trials * i / threads, trials * (i + 1) / threads);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    SimRun run;
    SimSummary &s = run.summary;
    s.trials = trials;
    s.seed = config.seed;
    double total = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        s.successes += ok[t];
        s.max_logical_disp = std::max(s.max_logical_disp, worst[t]);
        total += norm2[t];
    }
    s.rms_logical_disp = std::sqrt(total / static_cast<double>(trials));
    s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    run.records = std::move(records);
    return run;
}

enum class SweepParameter {
    /// The error model's sigma.
    sigma,
    /// The measurement noise sigma.
    sigma_m,
};

inline SweepParameter parse_sweep_parameter(const std::string &name) {
    if (name == "sigma") {
        return SweepParameter::sigma;
    }
    if (name == "sigma-m" || name == "sigma_m") {
        return SweepParameter::sigma_m;
    }
    throw std::invalid_argument("unknown sweep parameter '" + name + "' (expected sigma or sigma-m)");
}

struct SweepRow {
    double param = 0.0;
    SimSummary summary;
};

inline SimConfig with_parameter(SimConfig config, SweepParameter parameter, double value) {
    if (parameter == SweepParameter::sigma_m) {
        config.noise.sigma = value;
        return config;
    }
    if (auto *m = std::get_if<SingleModeGaussian>(&config.model)) {
        m->sigma = value;
    } else if (auto *m = std::get_if<IidGaussian>(&config.model)) {
        m->sigma = value;
    } else {
        throw std::invalid_argument("a fixed error model has no sigma to sweep");
    }
    return config;
}

/// One run per grid value, all with the same seed.
inline std::vector<SweepRow> sweep(
    const StabilizerCode &code, const LogicalBasis &basis, const SimConfig &base, SweepParameter parameter,
    std::span<const double> grid) {
    if (grid.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    std::vector<SimConfig> configs;
    for (double v : grid) {
        configs.push_back(with_parameter(base, parameter, v));
        configs.back().keep_records = false;
        check_config(code, basis, configs.back());
    }
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rows.push_back({grid[i], run_trials(code, basis, configs[i]).summary});
    }
    return rows;
}

/// `%.12g`, independent of the global C++ locale; -0 prints as 0.
inline std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline constexpr const char *kSummaryCsvHeader = "param,trials,failures,failure_rate,max_logical_disp,rms_logical_disp,seed";

inline void write_summary_csv(std::ostream &out, std::span<const SweepRow> rows) {
    out << kSummaryCsvHeader << "\n";
    for (const auto &r : rows) {
        const SimSummary &s = r.summary;
        out << format_number(r.param) << "," << s.trials << "," << s.failures() << ","
            << format_number(s.failure_rate()) << "," << format_number(s.max_logical_disp) << ","
            << format_number(s.rms_logical_disp) << "," << s.seed << "\n";
    }
}

/// Per-trial log: index, chosen mode (1-based, empty for none), syndrome norm,
/// max |logical displacement|, success flag.
inline void write_trials_csv(std::ostream &out, std::span<const TrialRecord> records) {
    out << "trial,mode,syndrome_norm,max_logical_disp,success\n";
    for (const auto &r : records) {
        double norm = 0.0;
        for (double v : r.syndrome.values) {
            norm = std::hypot(norm, v);
        }
        double worst = 0.0;
        for (double v : r.result.logical_displacement) {
            worst = std::max(worst, std::abs(v));
        }
        out << r.index << ",";
        if (r.result.correction.mode) {
            out << *r.result.correction.mode + 1;
        }
        out << "," << format_number(norm) << "," << format_number(worst) << "," << (r.success ? 1 : 0) << "\n";
    }
}

}  // namespace cvstab
