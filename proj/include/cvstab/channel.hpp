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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cvstab/errors.hpp"

namespace cvstab {

/// A physical displacement e in (s | t) layout: e[i] shifts q_i, e[n+i] shifts p_i.
struct ShiftError {
    std::size_t n = 0;
    std::vector<double> displacement;

    static ShiftError zero(std::size_t n) {
        return {n, std::vector<double>(2 * n, 0.0)};
    }

    double q(std::size_t mode) const {
        return displacement[mode];
    }
    double p(std::size_t mode) const {
        return displacement[n + mode];
    }
    bool operator==(const ShiftError &) const = default;
};

enum class Quadrature {
    q,
    p,
    both,
};

/// Pick one mode uniformly; draw N(0, sigma^2) shifts on the allowed quadratures.
struct SingleModeGaussian {
    double sigma;
    Quadrature restrict = Quadrature::both;
};

/// Every component ~ N(0, sigma^2).
struct IidGaussian {
    double sigma;
};

/// Mode index is 0-based here; the text form is 1-based.
struct ModeShift {
    std::size_t mode = 0;
    double q = 0.0;
    double p = 0.0;
};

/// A fixed displacement, the sum of its mode shifts.
struct FixedShift {
    std::vector<ModeShift> shifts;

    static FixedShift from(const ShiftError &e) {
        FixedShift f;
        for (std::size_t i = 0; i < e.n; ++i) {
            if (e.q(i) != 0.0 || e.p(i) != 0.0) {
                f.shifts.push_back({i, e.q(i), e.p(i)});
            }
        }
        return f;
    }
};

using ErrorModel = std::variant<SingleModeGaussian, IidGaussian, FixedShift>;

/// Additive N(0, sigma^2) noise on every syndrome component; a stand-in for
/// finite squeezing.
struct MeasurementNoise {
    double sigma = 0.0;
};

namespace detail {

inline double parse_double(std::string_view text) {
    std::string s(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty() || !std::isfinite(v)) {
        throw std::invalid_argument("bad number '" + s + "'");
    }
    return v;
}

/// `a=1,b=2` -> [(a, 1), (b, 2)].
inline std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("expected key=value, got '" + item + "'");
        }
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

inline void check_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("sigma must be positive and finite");
    }
}

}  // namespace detail

/// `mode=2,q=0.3,p=-0.1` (mode is 1-based; q and p default to 0).
inline ModeShift parse_mode_shift(std::string_view text) {
    ModeShift m;
    bool have_mode = false;
    for (const auto &[key, value] : detail::parse_key_values(text)) {
        if (key == "mode") {
            double v = detail::parse_double(value);
            if (v < 1 || v != std::floor(v)) {
                throw std::invalid_argument("mode must be a positive integer");
            }
            m.mode = static_cast<std::size_t>(v) - 1;
            have_mode = true;
        } else if (key == "q") {
            m.q = detail::parse_double(value);
        } else if (key == "p") {
            m.p = detail::parse_double(value);
        } else {
            throw std::invalid_argument("unknown shift key '" + key + "'");
        }
    }
    if (!have_mode) {
        throw std::invalid_argument("shift needs mode=<int>");
    }
    return m;
}

/// `single-mode-gaussian:sigma=0.5,restrict=q`, `iid-gaussian:sigma=0.1`,
/// `fixed:mode=2,q=0.3,p=-0.1`.
inline ErrorModel parse_error_model(std::string_view text) {
    auto colon = text.find(':');
    std::string_view kind = text.substr(0, colon);
    std::string_view params = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (kind == "fixed") {
        return FixedShift{{parse_mode_shift(params)}};
    }
    if (kind == "single-mode-gaussian") {
        SingleModeGaussian m{0.0, Quadrature::both};
        bool have_sigma = false;
        for (const auto &[key, value] : detail::parse_key_values(params)) {
            if (key == "sigma") {
                m.sigma = detail::parse_double(value);
                have_sigma = true;
            } else if (key == "restrict") {
                if (value == "q") {
                    m.restrict = Quadrature::q;
                } else if (value == "p") {
                    m.restrict = Quadrature::p;
                } else if (value == "both") {
                    m.restrict = Quadrature::both;
                } else {
                    throw std::invalid_argument("restrict must be q, p or both");
                }
            } else {
                throw std::invalid_argument("unknown parameter '" + key + "'");
            }
        }
        if (!have_sigma) {
            throw std::invalid_argument("single-mode-gaussian needs sigma=<value>");
        }
        detail::check_sigma(m.sigma);
        return m;
    }
    if (kind == "iid-gaussian") {
        IidGaussian m{0.0};
        bool have_sigma = false;
        for (const auto &[key, value] : detail::parse_key_values(params)) {
            if (key != "sigma") {
                throw std::invalid_argument("unknown parameter '" + key + "'");
            }
            m.sigma = detail::parse_double(value);
            have_sigma = true;
        }
        if (!have_sigma) {
            throw std::invalid_argument("iid-gaussian needs sigma=<value>");
        }
        detail::check_sigma(m.sigma);
        return m;
    }
    throw std::invalid_argument("unknown error model '" + std::string(kind) + "'");
}

/// Rejects parameters that cannot apply to an n-mode code.
inline void check_model(const ErrorModel &model, std::size_t n) {
    if (const auto *m = std::get_if<SingleModeGaussian>(&model)) {
        detail::check_sigma(m->sigma);
    } else if (const auto *m = std::get_if<IidGaussian>(&model)) {
        detail::check_sigma(m->sigma);
    } else if (const auto *f = std::get_if<FixedShift>(&model)) {
        for (const auto &s : f->shifts) {
            if (s.mode >= n) {
                throw std::invalid_argument(
                    "shift on mode " + std::to_string(s.mode + 1) + " but the code has " + std::to_string(n) +
                    " modes");
            }
        }
    }
}

using Rng = std::mt19937_64;

/// Independent generator for trial `trial` under `seed`; does not depend on
/// which thread or in which order trials run.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(trial),
        static_cast<std::uint32_t>(trial >> 32),
        0x63767374u,
    };
    return Rng(seq);
}

inline ShiftError sample_error(const ErrorModel &model, std::size_t n, Rng &rng) {
    check_model(model, n);
    ShiftError e = ShiftError::zero(n);
    if (const auto *m = std::get_if<SingleModeGaussian>(&model)) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::normal_distribution<double> normal(0.0, m->sigma);
        std::size_t mode = pick(rng);
        if (m->restrict != Quadrature::p) {
            e.displacement[mode] = normal(rng);
        }
        if (m->restrict != Quadrature::q) {
            e.displacement[n + mode] = normal(rng);
        }
    } else if (const auto *m = std::get_if<IidGaussian>(&model)) {
        std::normal_distribution<double> normal(0.0, m->sigma);
        for (auto &x : e.displacement) {
            x = normal(rng);
        }
    } else {
        for (const auto &s : std::get<FixedShift>(model).shifts) {
            e.displacement[s.mode] += s.q;
            e.displacement[n + s.mode] += s.p;
        }
    }
    return e;
}

}  // namespace cvstab
