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
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvstab/errors.hpp"
#include "cvstab/linalg.hpp"
#include "cvstab/scalar.hpp"

namespace cvstab {

/// A vector (s_1..s_n | t_1..t_n) indexing the displacement operator
/// U(v) = exp(i pi sum_i (s_i p_i + t_i q_i)). The s half shifts position,
/// the t half shifts momentum.
class PauliVector {
   public:
    PauliVector() = default;

    /// The zero vector on n modes.
    explicit PauliVector(std::size_t n) : n_(n), coords_(2 * n) {
        if (n == 0) {
            throw std::invalid_argument("PauliVector needs at least one mode");
        }
    }

    PauliVector(std::vector<Scalar> s, std::vector<Scalar> t) : n_(s.size()) {
        if (s.size() != t.size()) {
            throw DimensionMismatch(s.size(), t.size());
        }
        if (n_ == 0) {
            throw std::invalid_argument("PauliVector needs at least one mode");
        }
        coords_ = std::move(s);
        coords_.insert(coords_.end(), t.begin(), t.end());
    }

    /// Integer convenience constructor, mostly for catalogs and tests.
    PauliVector(std::initializer_list<long> s, std::initializer_list<long> t)
        : PauliVector(std::vector<Scalar>(s.begin(), s.end()), std::vector<Scalar>(t.begin(), t.end())) {
    }

    static PauliVector from_coords(std::vector<Scalar> coords) {
        if (coords.empty() || coords.size() % 2 != 0) {
            throw std::invalid_argument("coordinate vector must have even positive length");
        }
        PauliVector v;
        v.n_ = coords.size() / 2;
        v.coords_ = std::move(coords);
        return v;
    }

    /// Position shift of `amount` on mode `mode` (0-based).
    static PauliVector q_shift(std::size_t n, std::size_t mode, Scalar amount = 1) {
        PauliVector v(n);
        v.coords_.at(mode) = std::move(amount);
        return v;
    }

    /// Momentum shift of `amount` on mode `mode` (0-based).
    static PauliVector p_shift(std::size_t n, std::size_t mode, Scalar amount = 1) {
        PauliVector v(n);
        v.coords_.at(n + mode) = std::move(amount);
        return v;
    }

    std::size_t num_modes() const {
        return n_;
    }
    const Scalar &s(std::size_t i) const {
        return coords_[i];
    }
    const Scalar &t(std::size_t i) const {
        return coords_[n_ + i];
    }
    std::span<const Scalar> s_part() const {
        return std::span<const Scalar>(coords_).first(n_);
    }
    std::span<const Scalar> t_part() const {
        return std::span<const Scalar>(coords_).last(n_);
    }
    std::span<const Scalar> coords() const {
        return coords_;
    }
    const Scalar &operator[](std::size_t i) const {
        return coords_[i];
    }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Scalar &x) { return x == 0; });
    }

    PauliVector &operator+=(const PauliVector &other) {
        check_same(other);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] += other.coords_[i];
        }
        return *this;
    }
    PauliVector &operator-=(const PauliVector &other) {
        check_same(other);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] -= other.coords_[i];
        }
        return *this;
    }
    PauliVector &operator*=(const Scalar &c) {
        for (auto &x : coords_) {
            x *= c;
        }
        return *this;
    }
    friend PauliVector operator+(PauliVector a, const PauliVector &b) {
        return a += b;
    }
    friend PauliVector operator-(PauliVector a, const PauliVector &b) {
        return a -= b;
    }
    friend PauliVector operator-(PauliVector a) {
        return a *= Scalar(-1);
    }
    friend PauliVector operator*(const Scalar &c, PauliVector a) {
        return a *= c;
    }
    bool operator==(const PauliVector &other) const = default;

    /// `(1,1,1|0,0,0)`.
    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i > 0) {
                out += i == n_ ? "|" : ",";
            }
            out += to_string(coords_[i]);
        }
        return out + ")";
    }

   private:
    void check_same(const PauliVector &other) const {
        if (other.n_ != n_) {
            throw DimensionMismatch(n_, other.n_);
        }
    }

    std::size_t n_ = 0;
    std::vector<Scalar> coords_;
};

/// omega(v, w) = sum_i (v.s_i w.t_i - w.s_i v.t_i) over any pair of
/// coordinate vectors laid out as (s | t).
template <class T>
T symplectic_product(std::span<const T> v, std::span<const T> w) {
    if (v.size() != w.size() || v.size() % 2 != 0) {
        throw DimensionMismatch(v.size() / 2, w.size() / 2);
    }
    const std::size_t n = v.size() / 2;
    T acc = T(0);
    for (std::size_t i = 0; i < n; ++i) {
        acc += v[i] * w[n + i];
        acc -= w[i] * v[n + i];
    }
    return acc;
}

inline Scalar symplectic_form(const PauliVector &v, const PauliVector &w) {
    if (v.num_modes() != w.num_modes()) {
        throw DimensionMismatch(v.num_modes(), w.num_modes());
    }
    return symplectic_product<Scalar>(v.coords(), w.coords());
}

/// Displacement operator U(v) with a scalar phase e^{i pi phase}.
class HeisenbergWeylOp {
   public:
    explicit HeisenbergWeylOp(PauliVector vector, Scalar phase = 0)
        : vector_(std::move(vector)), phase_(reduce_mod(phase, Scalar(2))) {
    }

    const PauliVector &vector() const {
        return vector_;
    }
    /// In units of pi, within [0, 2).
    const Scalar &phase() const {
        return phase_;
    }
    bool operator==(const HeisenbergWeylOp &other) const = default;

   private:
    PauliVector vector_;
    Scalar phase_;
};

/// Phase (units of pi, mod 2) picked up by swapping: U(a)U(b) = e^{i pi c} U(b)U(a).
inline Scalar commutation_phase(const HeisenbergWeylOp &a, const HeisenbergWeylOp &b) {
    return reduce_mod(symplectic_form(a.vector(), b.vector()), Scalar(2));
}

/// U(a)U(b) = e^{i pi omega(a,b)/2} U(a+b), so that ab and ba differ by e^{i pi omega(a,b)}.
inline HeisenbergWeylOp multiply(const HeisenbergWeylOp &a, const HeisenbergWeylOp &b) {
    Scalar w = symplectic_form(a.vector(), b.vector());
    return HeisenbergWeylOp(a.vector() + b.vector(), a.phase() + b.phase() + w / 2);
}

/// A linear subspace of the 2n-dimensional phase space, stored as its reduced
/// row-echelon basis. Two subspaces are equal iff their bases are equal.
class Subspace {
   public:
    static Subspace zero(std::size_t n) {
        Subspace w;
        w.n_ = n;
        return w;
    }

    static Subspace full(std::size_t n) {
        std::vector<PauliVector> rows;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            std::vector<Scalar> c(2 * n, Scalar(0));
            c[i] = 1;
            rows.push_back(PauliVector::from_coords(std::move(c)));
        }
        return from_rows(n, rows);
    }

    static Subspace from_rows(std::size_t n, std::span<const PauliVector> rows) {
        if (n == 0) {
            throw std::invalid_argument("subspace needs at least one mode");
        }
        linalg::Matrix<Scalar> m;
        for (const auto &r : rows) {
            if (r.num_modes() != n) {
                throw DimensionMismatch(n, r.num_modes());
            }
            m.emplace_back(r.coords().begin(), r.coords().end());
        }
        Subspace w;
        w.n_ = n;
        w.pivots_ = linalg::rref(m);
        for (auto &row : m) {
            w.basis_.push_back(PauliVector::from_coords(std::move(row)));
        }
        return w;
    }

    std::size_t num_modes() const {
        return n_;
    }
    std::size_t dim() const {
        return basis_.size();
    }
    const std::vector<PauliVector> &basis() const {
        return basis_;
    }

    /// Reduces v against the echelon basis; the result is zero iff v is in the span.
    PauliVector reduce(PauliVector v) const {
        if (v.num_modes() != n_) {
            throw DimensionMismatch(n_, v.num_modes());
        }
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            Scalar c = v[pivots_[r]];
            if (c != 0) {
                v -= c * basis_[r];
            }
        }
        return v;
    }

    bool contains(const PauliVector &v) const {
        return reduce(v).is_zero();
    }

    bool contains(const Subspace &other) const {
        return std::all_of(
            other.basis_.begin(), other.basis_.end(), [&](const PauliVector &v) { return contains(v); });
    }

    bool operator==(const Subspace &other) const {
        return n_ == other.n_ && basis_ == other.basis_;
    }

   private:
    std::size_t n_ = 0;
    std::vector<PauliVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical basis of the span. `n` is required when `rows` may be empty.
inline Subspace span(std::span<const PauliVector> rows, std::optional<std::size_t> n = std::nullopt) {
    if (!n) {
        if (rows.empty()) {
            throw std::invalid_argument("span of an empty list needs an explicit mode count");
        }
        n = rows.front().num_modes();
    }
    return Subspace::from_rows(*n, rows);
}

/// Coefficient rows of the linear functionals v -> omega(v, u) for u in rows:
/// omega(v, u) = sum_i v.s_i u.t_i - u.s_i v.t_i, i.e. the row (u.t | -u.s).
inline linalg::Matrix<Scalar> symplectic_dual_rows(std::span<const PauliVector> rows) {
    linalg::Matrix<Scalar> m;
    for (const auto &u : rows) {
        std::vector<Scalar> row;
        row.reserve(2 * u.num_modes());
        for (const auto &x : u.t_part()) {
            row.push_back(x);
        }
        for (const auto &x : u.s_part()) {
            row.push_back(-x);
        }
        m.push_back(std::move(row));
    }
    return m;
}

/// W^omega = { v : omega(v, u) = 0 for all u in W }; dim W + dim W^omega = 2n.
inline Subspace symplectic_complement(const Subspace &w) {
    const std::size_t n = w.num_modes();
    if (w.dim() == 0) {
        return Subspace::full(n);
    }
    auto kernel = linalg::nullspace(symplectic_dual_rows(w.basis()), 2 * n);
    std::vector<PauliVector> rows;
    for (auto &k : kernel) {
        rows.push_back(PauliVector::from_coords(std::move(k)));
    }
    return Subspace::from_rows(n, rows);
}

inline bool is_isotropic(const Subspace &w) {
    const auto &b = w.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (symplectic_form(b[i], b[j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

struct HyperbolicPair {
    PauliVector x;
    PauliVector z;
    bool operator==(const HyperbolicPair &) const = default;
};

/// Builds pairs (x_i, z_i) in `w_omega` whose classes form a basis of
/// w_omega / w with omega(x_i, z_j) = delta_ij and omega(x_i, x_j) =
/// omega(z_i, z_j) = 0.
///
/// The quotient is first spanned by the rows of `w_omega`'s canonical basis that
/// are independent of `w` (taken in order). The pair search always takes the
/// lexicographically first (i, j) with omega != 0, scales z by 1/omega, and
/// projects the pair out of the remaining vectors.
inline std::vector<HyperbolicPair> symplectic_gram_schmidt(const Subspace &w_omega, const Subspace &w) {
    const std::size_t n = w_omega.num_modes();
    if (w.num_modes() != n) {
        throw DimensionMismatch(n, w.num_modes());
    }
    if (!is_isotropic(w)) {
        throw std::invalid_argument("symplectic_gram_schmidt: w is not isotropic");
    }
    if (!w_omega.contains(w)) {
        throw std::invalid_argument("symplectic_gram_schmidt: w is not contained in w_omega");
    }
    if ((w_omega.dim() - w.dim()) % 2 != 0) {
        throw std::invalid_argument("symplectic_gram_schmidt: quotient dimension is odd");
    }

    std::vector<PauliVector> pool;
    std::vector<PauliVector> spanning = w.basis();
    for (const auto &v : w_omega.basis()) {
        if (!Subspace::from_rows(n, spanning).contains(v)) {
            spanning.push_back(v);
            pool.push_back(v);
        }
    }

    std::vector<HyperbolicPair> pairs;
    while (!pool.empty()) {
        std::optional<std::pair<std::size_t, std::size_t>> hit;
        Scalar value;
        for (std::size_t i = 0; i < pool.size() && !hit; ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                value = symplectic_form(pool[i], pool[j]);
                if (value != 0) {
                    hit = std::make_pair(i, j);
                    break;
                }
            }
        }
        if (!hit) {
            throw std::invalid_argument("symplectic_gram_schmidt: quotient is degenerate");
        }
        PauliVector x = pool[hit->first];
        PauliVector z = pool[hit->second];
        z *= Scalar(1) / value;
        pool.erase(pool.begin() + hit->second);
        pool.erase(pool.begin() + hit->first);
        for (auto &v : pool) {
            // Afterwards omega(v, x) = omega(v, z) = 0.
            Scalar vz = symplectic_form(v, z);
            Scalar vx = symplectic_form(v, x);
            v -= vz * x;
            v += vx * z;
        }
        pairs.push_back({std::move(x), std::move(z)});
    }
    return pairs;
}

enum class FourierConvention {
    /// (s | t) -> (-t | s): a symplectic map (preserves omega, order four).
    symplectic,
    /// (s | t) -> (t | s): negates omega.
    swap,
};

inline PauliVector fourier_conjugate(const PauliVector &v, FourierConvention convention = FourierConvention::symplectic) {
    std::vector<Scalar> s(v.t_part().begin(), v.t_part().end());
    std::vector<Scalar> t(v.s_part().begin(), v.s_part().end());
    if (convention == FourierConvention::symplectic) {
        for (auto &x : s) {
            x = -x;
        }
    }
    return PauliVector(std::move(s), std::move(t));
}

}  // namespace cvstab
