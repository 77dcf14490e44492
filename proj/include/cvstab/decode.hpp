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
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cvstab/channel.hpp"
#include "cvstab/code.hpp"
#include "cvstab/linalg.hpp"

namespace cvstab {

/// Syndrome values, one per generator: component j is omega(u_j, e).
struct Syndrome {
    std::vector<double> values;
};

inline std::vector<double> to_doubles(std::span<const Scalar> v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.push_back(to_double(x));
    }
    return out;
}

/// Row j holds the coefficients c with omega(u_j, e) = c . e, i.e. (-u_j.t | u_j.s).
inline linalg::Matrix<Scalar> syndrome_matrix(const StabilizerCode &code) {
    linalg::Matrix<Scalar> m;
    for (const auto &u : code.generators()) {
        std::vector<Scalar> row;
        for (const auto &x : u.t_part()) {
            row.push_back(-x);
        }
        for (const auto &x : u.s_part()) {
            row.push_back(x);
        }
        m.push_back(std::move(row));
    }
    return m;
}

inline std::vector<Scalar> syndrome_exact(const StabilizerCode &code, const PauliVector &e) {
    if (e.num_modes() != code.num_modes()) {
        throw DimensionMismatch(code.num_modes(), e.num_modes());
    }
    std::vector<Scalar> out;
    for (const auto &u : code.generators()) {
        out.push_back(symplectic_form(u, e));
    }
    return out;
}

/// Logical displacement (a_1, b_1, ...) of e: a_i = omega(e, z_i) is the
/// position shift and b_i = omega(x_i, e) the momentum shift of logical mode i.
/// Vanishes on the stabilizer.
template <class T>
std::vector<T> logical_action(const StabilizerCode &code, const LogicalBasis &basis, std::span<const T> e) {
    if (e.size() != 2 * code.num_modes()) {
        throw DimensionMismatch(code.num_modes(), e.size() / 2);
    }
    return logical_coordinates<T>(basis, e);
}

inline std::vector<Scalar> logical_action(const StabilizerCode &code, const LogicalBasis &basis, const PauliVector &e) {
    return logical_action<Scalar>(code, basis, e.coords());
}

inline std::vector<double> logical_action(const StabilizerCode &code, const LogicalBasis &basis, const ShiftError &e) {
    return logical_action<double>(code, basis, std::span<const double>(e.displacement));
}

/// A decoder's proposed correction.
struct Correction {
    ShiftError shift;
    /// Mode the single-mode decoder settled on; empty for identity or min-norm.
    std::optional<std::size_t> mode;
    /// |s - syndrome(shift)|.
    double fit_residual = 0.0;
    /// fit_residual within the syndrome-match tolerance.
    bool matched = true;
};

struct DecodeResult {
    Correction correction;
    /// error - correction.
    std::vector<double> residual;
    std::vector<double> logical_displacement;
    bool success = false;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Precomputes, per code, everything both decoders need. Pseudoinverses are
/// formed exactly and rounded once.
class SyndromeDecoder {
   public:
    explicit SyndromeDecoder(const StabilizerCode &code) : n_(code.num_modes()), k_(code.num_generators()) {
        linalg::Matrix<Scalar> m = syndrome_matrix(code);
        for (const auto &row : m) {
            map_.push_back(to_doubles(row));
        }
        pinv_exact_ = linalg::pseudoinverse(m, 2 * n_);
        for (const auto &row : pinv_exact_) {
            pinv_.push_back(to_doubles(row));
        }
        for (std::size_t i = 0; i < n_; ++i) {
            linalg::Matrix<Scalar> cols(k_, std::vector<Scalar>(2));
            for (std::size_t j = 0; j < k_; ++j) {
                cols[j][0] = m[j][i];
                cols[j][1] = m[j][n_ + i];
            }
            auto p = linalg::pseudoinverse(cols, 2);
            ModeSystem sys;
            for (std::size_t j = 0; j < k_; ++j) {
                sys.columns.push_back({to_double(cols[j][0]), to_double(cols[j][1])});
            }
            for (const auto &row : p) {
                sys.pinv.push_back(to_doubles(row));
            }
            modes_.push_back(std::move(sys));
        }
    }

    std::size_t num_modes() const {
        return n_;
    }

    Syndrome syndrome(const ShiftError &e) const {
        if (e.n != n_ || e.displacement.size() != 2 * n_) {
            throw DimensionMismatch(n_, e.n);
        }
        Syndrome s;
        s.values.reserve(k_);
        for (const auto &row : map_) {
            double acc = 0.0;
            for (std::size_t c = 0; c < 2 * n_; ++c) {
                acc += row[c] * e.displacement[c];
            }
            s.values.push_back(acc);
        }
        return s;
    }

    /// Minimum-norm e with syndrome(e) = s (the map has full row rank).
    Correction min_norm(const Syndrome &s, double tol = kDefaultTolerance) const {
        check(s);
        Correction c{ShiftError::zero(n_), std::nullopt, 0.0, true};
        for (std::size_t r = 0; r < 2 * n_; ++r) {
            double acc = 0.0;
            for (std::size_t j = 0; j < k_; ++j) {
                acc += pinv_[r][j] * s.values[j];
            }
            c.shift.displacement[r] = acc;
        }
        c.fit_residual = distance(syndrome(c.shift).values, s.values);
        c.matched = c.fit_residual <= tol;
        return c;
    }

    PauliVector min_norm_exact(std::span<const Scalar> s) const {
        if (s.size() != k_) {
            throw std::invalid_argument("syndrome length differs from the generator count");
        }
        std::vector<Scalar> e(2 * n_, Scalar(0));
        for (std::size_t r = 0; r < 2 * n_; ++r) {
            for (std::size_t j = 0; j < k_; ++j) {
                e[r] += pinv_exact_[r][j] * s[j];
            }
        }
        return PauliVector::from_coords(std::move(e));
    }

    /// For each mode, least-squares fit of a shift confined to that mode; the
    /// smallest fit residual wins, ties going to the lowest mode.
    Correction single_mode(const Syndrome &s, double tol = kDefaultTolerance) const {
        check(s);
        double norm = 0.0;
        for (double v : s.values) {
            norm = std::hypot(norm, v);
        }
        Correction best{ShiftError::zero(n_), std::nullopt, norm, norm <= tol};
        if (norm <= tol) {
            return best;
        }
        const double tie = 1e-12 * (1.0 + norm);
        for (std::size_t i = 0; i < n_; ++i) {
            const ModeSystem &sys = modes_[i];
            double a = 0.0;
            double b = 0.0;
            for (std::size_t j = 0; j < k_; ++j) {
                a += sys.pinv[0][j] * s.values[j];
                b += sys.pinv[1][j] * s.values[j];
            }
            double residual = 0.0;
            for (std::size_t j = 0; j < k_; ++j) {
                residual = std::hypot(residual, s.values[j] - sys.columns[j][0] * a - sys.columns[j][1] * b);
            }
            if (!best.mode || residual < best.fit_residual - tie) {
                best.shift = ShiftError::zero(n_);
                best.shift.displacement[i] = a;
                best.shift.displacement[n_ + i] = b;
                best.mode = i;
                best.fit_residual = residual;
            }
        }
        best.matched = best.fit_residual <= tol;
        return best;
    }

   private:
    struct ModeSystem {
        /// k x 2: syndrome response to unit q and p shifts on the mode.
        std::vector<std::array<double, 2>> columns;
        /// 2 x k pseudoinverse.
        std::vector<std::vector<double>> pinv;
    };

    void check(const Syndrome &s) const {
        if (s.values.size() != k_) {
            throw std::invalid_argument(
                "syndrome has " + std::to_string(s.values.size()) + " values, code has " + std::to_string(k_) +
                " generators");
        }
    }

    static double distance(const std::vector<double> &a, const std::vector<double> &b) {
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            d = std::hypot(d, a[i] - b[i]);
        }
        return d;
    }

    std::size_t n_;
    std::size_t k_;
    std::vector<std::vector<double>> map_;
    linalg::Matrix<Scalar> pinv_exact_;
    std::vector<std::vector<double>> pinv_;
    std::vector<ModeSystem> modes_;
};

inline Syndrome syndrome(const StabilizerCode &code, const ShiftError &e) {
    if (e.n != code.num_modes()) {
        throw DimensionMismatch(code.num_modes(), e.n);
    }
    Syndrome s;
    for (const auto &u : code.generators()) {
        std::vector<double> g = to_doubles(u.coords());
        s.values.push_back(symplectic_product(std::span<const double>(g), std::span<const double>(e.displacement)));
    }
    return s;
}

inline ShiftError decode_min_norm(const StabilizerCode &code, const Syndrome &s) {
    return SyndromeDecoder(code).min_norm(s).shift;
}

inline PauliVector decode_min_norm(const StabilizerCode &code, std::span<const Scalar> s) {
    return SyndromeDecoder(code).min_norm_exact(s);
}

inline Correction decode_single_mode(const StabilizerCode &code, const Syndrome &s, double tol = kDefaultTolerance) {
    return SyndromeDecoder(code).single_mode(s, tol);
}

/// Scores a correction against the true error. Success needs the syndrome to
/// be explained (within tol) and every logical displacement within tol.
inline DecodeResult assess(
    const StabilizerCode &code, const LogicalBasis &basis, const ShiftError &error, Correction correction,
    double tol = kDefaultTolerance) {
    DecodeResult r;
    r.residual = error.displacement;
    for (std::size_t i = 0; i < r.residual.size(); ++i) {
        r.residual[i] -= correction.shift.displacement[i];
    }
    r.logical_displacement = logical_action<double>(code, basis, std::span<const double>(r.residual));
    double worst = 0.0;
    for (double v : r.logical_displacement) {
        worst = std::max(worst, std::abs(v));
    }
    r.success = correction.matched && worst <= tol;
    r.correction = std::move(correction);
    return r;
}

enum class ShiftFamily {
    arbitrary,
    q_only,
    p_only,
};

inline const char *to_string(ShiftFamily f) {
    switch (f) {
        case ShiftFamily::arbitrary:
            return "arbitrary";
        case ShiftFamily::q_only:
            return "q";
        case ShiftFamily::p_only:
            return "p";
    }
    return "?";
}

/// Coordinates (into the 2n layout) of the shifts of `family` on modes a and b.
inline std::vector<std::size_t> shift_coordinates(std::size_t n, std::size_t a, std::size_t b, ShiftFamily family) {
    std::vector<std::size_t> cols;
    for (std::size_t mode : {a, b}) {
        if (family != ShiftFamily::p_only) {
            cols.push_back(mode);
        }
        if (family != ShiftFamily::q_only) {
            cols.push_back(n + mode);
        }
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

/// Shifts of `family` supported on modes a and b with zero syndrome.
inline Subspace correctability_kernel(const StabilizerCode &code, std::size_t a, std::size_t b, ShiftFamily family) {
    const std::size_t n = code.num_modes();
    auto cols = shift_coordinates(n, a, b, family);
    linalg::Matrix<Scalar> full = syndrome_matrix(code);
    linalg::Matrix<Scalar> restricted;
    for (const auto &row : full) {
        std::vector<Scalar> r;
        for (auto c : cols) {
            r.push_back(row[c]);
        }
        restricted.push_back(std::move(r));
    }
    std::vector<PauliVector> kernel;
    if (restricted.empty()) {
        // No generators: every shift on these coordinates has zero syndrome.
        for (auto c : cols) {
            std::vector<Scalar> v(2 * n, Scalar(0));
            v[c] = 1;
            kernel.push_back(PauliVector::from_coords(std::move(v)));
        }
    } else {
        for (auto &k : linalg::nullspace(restricted, cols.size())) {
            std::vector<Scalar> v(2 * n, Scalar(0));
            for (std::size_t i = 0; i < cols.size(); ++i) {
                v[cols[i]] = k[i];
            }
            kernel.push_back(PauliVector::from_coords(std::move(v)));
        }
    }
    return Subspace::from_rows(n, kernel);
}

struct CorrectabilityFailure {
    ShiftFamily family;
    /// 0-based, first <= second.
    std::size_t first_mode;
    std::size_t second_mode;
    /// Zero-syndrome difference of two single-mode shifts that acts logically.
    PauliVector witness;
};

struct CorrectabilityReport {
    bool arbitrary = true;
    bool q_only = true;
    bool p_only = true;
    std::vector<CorrectabilityFailure> failures;

    bool passes(ShiftFamily f) const {
        switch (f) {
            case ShiftFamily::arbitrary:
                return arbitrary;
            case ShiftFamily::q_only:
                return q_only;
            case ShiftFamily::p_only:
                return p_only;
        }
        return false;
    }
};

/// Single-mode shifts are correctable iff no two of them share a syndrome
/// while differing by a logical operator: for every mode pair (a, b), the
/// zero-syndrome shifts on those modes must all lie in the stabilizer.
/// Computed exactly for arbitrary, q-only and p-only shift families.
inline CorrectabilityReport check_single_mode_correctability(const StabilizerCode &code, const LogicalBasis &basis) {
    CorrectabilityReport report;
    const std::size_t n = code.num_modes();
    for (ShiftFamily family : {ShiftFamily::arbitrary, ShiftFamily::q_only, ShiftFamily::p_only}) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a; b < n; ++b) {
                const Subspace kernel = correctability_kernel(code, a, b, family);
                for (const auto &v : kernel.basis()) {
                    auto action = logical_action(code, basis, v);
                    bool logical = std::any_of(action.begin(), action.end(), [](const Scalar &x) { return x != 0; });
                    if (logical) {
                        ok = false;
                        report.failures.push_back({family, a, b, v});
                        break;
                    }
                }
            }
        }
        switch (family) {
            case ShiftFamily::arbitrary:
                report.arbitrary = ok;
                break;
            case ShiftFamily::q_only:
                report.q_only = ok;
                break;
            case ShiftFamily::p_only:
                report.p_only = ok;
                break;
        }
    }
    return report;
}

}  // namespace cvstab
