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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cvstab/errors.hpp"
#include "cvstab/symplectic.hpp"

namespace cvstab {

/// A continuous-variable stabilizer code on n modes, given by k linearly
/// independent, pairwise symplectically orthogonal generator rows. The
/// stabilizer group is { U(sum_i a_i u_i) : a_i real }.
///
/// Instances only come out of `validate`, so every StabilizerCode is valid.
/// The second stabilizer condition (-I not in S) holds automatically: the
/// group is a connected one-parameter family of displacements and U(v) is a
/// multiple of the identity only for v = 0.
class StabilizerCode {
   public:
    std::size_t num_modes() const {
        return n_;
    }
    std::size_t num_generators() const {
        return generators_.size();
    }
    std::size_t num_logical_modes() const {
        return n_ - generators_.size();
    }
    const std::vector<PauliVector> &generators() const {
        return generators_;
    }
    const std::string &name() const {
        return name_;
    }
    /// W, the span of the generators.
    const Subspace &stabilizer_space() const {
        return stabilizer_;
    }
    /// W^omega, vectors commuting with every generator.
    const Subspace &normalizer_space() const {
        return normalizer_;
    }

    StabilizerCode renamed(std::string name) const {
        StabilizerCode c = *this;
        c.name_ = std::move(name);
        return c;
    }

   private:
    friend StabilizerCode validate(std::size_t n, std::vector<PauliVector> generators, std::string name);

    std::size_t n_ = 0;
    std::vector<PauliVector> generators_;
    std::string name_;
    Subspace stabilizer_;
    Subspace normalizer_;
};

/// Checks mode counts, then pairwise isotropy (first failing pair in
/// lexicographic order), then independence (first row in the span of its
/// predecessors). `n` is explicit so that k = 0 codes can be expressed.
inline StabilizerCode validate(std::size_t n, std::vector<PauliVector> generators, std::string name = {}) {
    if (n == 0) {
        throw std::invalid_argument("a code needs at least one mode");
    }
    for (const auto &g : generators) {
        if (g.num_modes() != n) {
            throw DimensionMismatch(n, g.num_modes());
        }
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            Scalar w = symplectic_form(generators[i], generators[j]);
            if (w != 0) {
                throw NonIsotropic(i + 1, j + 1, w);
            }
        }
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        std::span<const PauliVector> prefix(generators.data(), i + 1);
        if (Subspace::from_rows(n, prefix).dim() != i + 1) {
            throw RankDeficient(i + 1);
        }
    }
    StabilizerCode code;
    code.n_ = n;
    code.stabilizer_ = Subspace::from_rows(n, generators);
    code.normalizer_ = symplectic_complement(code.stabilizer_);
    code.generators_ = std::move(generators);
    code.name_ = std::move(name);
    return code;
}

inline StabilizerCode validate(std::vector<PauliVector> generators, std::string name = {}) {
    if (generators.empty()) {
        throw std::invalid_argument("validate: empty generator list needs an explicit mode count");
    }
    std::size_t n = generators.front().num_modes();
    return validate(n, std::move(generators), std::move(name));
}

/// The code with no stabilizers on n modes (every mode is logical).
inline StabilizerCode trivial_code(std::size_t n) {
    return validate(n, {}, "trivial-" + std::to_string(n));
}

enum class LogicalSource {
    derived,
    catalog,
    file,
};

inline const char *to_string(LogicalSource source) {
    switch (source) {
        case LogicalSource::derived:
            return "derived";
        case LogicalSource::catalog:
            return "catalog";
        case LogicalSource::file:
            return "file";
    }
    return "?";
}

/// n - k hyperbolic pairs (x_i, z_i) in W^omega, outside W, with
/// omega(x_i, z_j) = delta_ij and omega(x_i, x_j) = omega(z_i, z_j) = 0.
/// U(s x_i) and U(t z_i) act as position and momentum shifts on logical mode i.
class LogicalBasis {
   public:
    std::size_t size() const {
        return pairs_.size();
    }
    const std::vector<HyperbolicPair> &pairs() const {
        return pairs_;
    }
    const HyperbolicPair &operator[](std::size_t i) const {
        return pairs_[i];
    }
    LogicalSource source() const {
        return source_;
    }

   private:
    friend LogicalBasis make_logical_basis(const StabilizerCode &, std::vector<HyperbolicPair>, LogicalSource);

    std::vector<HyperbolicPair> pairs_;
    LogicalSource source_ = LogicalSource::derived;
};

/// Accepts candidate logical pairs after rescaling each z_i by 1/omega(x_i, z_i),
/// then checks the full delta table and W^omega \ W membership exactly.
inline LogicalBasis make_logical_basis(
    const StabilizerCode &code, std::vector<HyperbolicPair> pairs, LogicalSource source) {
    const std::size_t n = code.num_modes();
    if (pairs.size() != code.num_logical_modes()) {
        throw InvalidLogicalBasis(
            "expected " + std::to_string(code.num_logical_modes()) + " logical pairs, got " +
            std::to_string(pairs.size()));
    }
    auto label = [](const char *kind, std::size_t i) { return std::string(kind) + std::to_string(i + 1); };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (const auto *v : {&pairs[i].x, &pairs[i].z}) {
            if (v->num_modes() != n) {
                throw DimensionMismatch(n, v->num_modes());
            }
        }
        Scalar c = symplectic_form(pairs[i].x, pairs[i].z);
        if (c == 0) {
            throw InvalidLogicalBasis("omega(" + label("x", i) + "," + label("z", i) + ") = 0");
        }
        if (c != 1) {
            pairs[i].z *= Scalar(1) / c;
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (const auto &[v, kind] : {std::pair{&pairs[i].x, "x"}, std::pair{&pairs[i].z, "z"}}) {
            if (!code.normalizer_space().contains(*v)) {
                throw InvalidLogicalBasis(label(kind, i) + " does not commute with the stabilizer");
            }
            if (code.stabilizer_space().contains(*v)) {
                throw InvalidLogicalBasis(label(kind, i) + " lies in the stabilizer");
            }
        }
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            Scalar xz = symplectic_form(pairs[i].x, pairs[j].z);
            if (xz != (i == j ? 1 : 0)) {
                throw InvalidLogicalBasis(
                    "omega(" + label("x", i) + "," + label("z", j) + ") = " + to_string(xz));
            }
            if (j > i) {
                if (symplectic_form(pairs[i].x, pairs[j].x) != 0) {
                    throw InvalidLogicalBasis("omega(" + label("x", i) + "," + label("x", j) + ") != 0");
                }
                if (symplectic_form(pairs[i].z, pairs[j].z) != 0) {
                    throw InvalidLogicalBasis("omega(" + label("z", i) + "," + label("z", j) + ") != 0");
                }
            }
        }
    }
    LogicalBasis basis;
    basis.pairs_ = std::move(pairs);
    basis.source_ = source;
    return basis;
}

/// Derived logical basis: symplectic Gram-Schmidt on W^omega / W. Deterministic.
inline LogicalBasis logical_basis(const StabilizerCode &code) {
    auto pairs = symplectic_gram_schmidt(code.normalizer_space(), code.stabilizer_space());
    return make_logical_basis(code, std::move(pairs), LogicalSource::derived);
}

/// Logical coordinates (a_1, b_1, ..., a_m, b_m) with a_i = omega(v, z_i) and
/// b_i = omega(x_i, v). For v in W^omega, v = sum_i a_i x_i + b_i z_i mod W.
template <class T>
std::vector<T> logical_coordinates(const LogicalBasis &basis, std::span<const T> v) {
    std::vector<T> out;
    out.reserve(2 * basis.size());
    for (const auto &pair : basis.pairs()) {
        std::vector<T> x, z;
        for (const auto &c : pair.x.coords()) x.push_back(scalar_cast<T>(c));
        for (const auto &c : pair.z.coords()) z.push_back(scalar_cast<T>(c));
        out.push_back(symplectic_product(v, std::span<const T>(z)));
        out.push_back(symplectic_product(std::span<const T>(x), v));
    }
    return out;
}

struct Classification {
    enum class Kind {
        stabilizer,
        logical,
        outside,
    };
    Kind kind;
    /// Logical coordinates (a_1, b_1, ...) over (x_1, z_1, ...); set for
    /// `logical`, all zero for `stabilizer`, empty for `outside`.
    std::vector<Scalar> coefficients;
};

inline const char *to_string(Classification::Kind kind) {
    switch (kind) {
        case Classification::Kind::stabilizer:
            return "stabilizer";
        case Classification::Kind::logical:
            return "logical";
        case Classification::Kind::outside:
            return "outside";
    }
    return "?";
}

/// Sorts v into W (stabilizer), W^omega \ W (logical) or the rest (a
/// detectable displacement).
inline Classification contains_logical(const StabilizerCode &code, const LogicalBasis &basis, const PauliVector &v) {
    if (v.num_modes() != code.num_modes()) {
        throw DimensionMismatch(code.num_modes(), v.num_modes());
    }
    for (const auto &u : code.generators()) {
        if (symplectic_form(u, v) != 0) {
            return {Classification::Kind::outside, {}};
        }
    }
    auto coeffs = logical_coordinates<Scalar>(basis, v.coords());
    if (code.stabilizer_space().contains(v)) {
        return {Classification::Kind::stabilizer, std::move(coeffs)};
    }
    return {Classification::Kind::logical, std::move(coeffs)};
}

/// Replaces each single-mode component (s_b, t_b) of `outer_vector` by
/// s_b x_in + t_b z_in on block b.
inline PauliVector embed_through_inner(const PauliVector &outer_vector, const HyperbolicPair &inner_logical) {
    const std::size_t n_out = outer_vector.num_modes();
    const std::size_t n_in = inner_logical.x.num_modes();
    std::vector<Scalar> coords(2 * n_out * n_in, Scalar(0));
    const std::size_t n = n_out * n_in;
    for (std::size_t b = 0; b < n_out; ++b) {
        for (std::size_t i = 0; i < n_in; ++i) {
            Scalar s = outer_vector.s(b) * inner_logical.x.s(i) + outer_vector.t(b) * inner_logical.z.s(i);
            Scalar t = outer_vector.s(b) * inner_logical.x.t(i) + outer_vector.t(b) * inner_logical.z.t(i);
            coords[b * n_in + i] = std::move(s);
            coords[n + b * n_in + i] = std::move(t);
        }
    }
    return PauliVector::from_coords(std::move(coords));
}

/// Places `v` (on n_in modes) into block `block` of an n_out * n_in mode vector.
inline PauliVector embed_in_block(const PauliVector &v, std::size_t block, std::size_t n_out) {
    const std::size_t n_in = v.num_modes();
    const std::size_t n = n_out * n_in;
    std::vector<Scalar> coords(2 * n, Scalar(0));
    for (std::size_t i = 0; i < n_in; ++i) {
        coords[block * n_in + i] = v.s(i);
        coords[n + block * n_in + i] = v.t(i);
    }
    return PauliVector::from_coords(std::move(coords));
}

struct ConcatenatedCode {
    StabilizerCode code;
    LogicalBasis basis;
};

/// Each outer mode is re-encoded by the inner code. Physical modes are laid
/// out block by block (outer mode b owns modes b*n_in .. b*n_in + n_in - 1).
/// Generators: the inner generators on every block (block order), then the
/// outer generators pushed through the inner logical pair; the outer logical
/// basis is pushed through the same way.
inline ConcatenatedCode concatenate(
    const StabilizerCode &outer, const LogicalBasis &outer_basis, const StabilizerCode &inner) {
    if (inner.num_logical_modes() != 1) {
        throw Unsupported(
            "concatenation needs an inner code with exactly one logical mode, got " +
            std::to_string(inner.num_logical_modes()));
    }
    const HyperbolicPair inner_logical = logical_basis(inner)[0];
    const std::size_t n_out = outer.num_modes();
    std::vector<PauliVector> generators;
    for (std::size_t b = 0; b < n_out; ++b) {
        for (const auto &g : inner.generators()) {
            generators.push_back(embed_in_block(g, b, n_out));
        }
    }
    for (const auto &g : outer.generators()) {
        generators.push_back(embed_through_inner(g, inner_logical));
    }
    std::string name = outer.name() + "*" + inner.name();
    StabilizerCode code = validate(n_out * inner.num_modes(), std::move(generators), name);
    std::vector<HyperbolicPair> pairs;
    for (const auto &p : outer_basis.pairs()) {
        pairs.push_back({embed_through_inner(p.x, inner_logical), embed_through_inner(p.z, inner_logical)});
    }
    LogicalBasis basis = make_logical_basis(code, std::move(pairs), LogicalSource::derived);
    return {std::move(code), std::move(basis)};
}

inline StabilizerCode concatenate(const StabilizerCode &outer, const StabilizerCode &inner) {
    return concatenate(outer, logical_basis(outer), inner).code;
}

/// The nullifier m_j = sum_i (s_ij p_i + t_ij q_i) of generator u_j; it
/// vanishes on the code space.
struct SyndromeObservable {
    PauliVector coefficients;

    /// `q1 - q2`, `p1 + p2 - 3/2 q4`. Momentum terms first, then position.
    std::string str() const {
        std::string out;
        auto term = [&](const Scalar &c, char quadrature, std::size_t mode) {
            if (c == 0) {
                return;
            }
            Scalar mag = c < 0 ? Scalar(-c) : c;
            if (out.empty()) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (mag != 1) {
                out += to_string(mag) + " ";
            }
            out += quadrature;
            out += std::to_string(mode + 1);
        };
        const std::size_t n = coefficients.num_modes();
        for (std::size_t i = 0; i < n; ++i) {
            term(coefficients.s(i), 'p', i);
        }
        for (std::size_t i = 0; i < n; ++i) {
            term(coefficients.t(i), 'q', i);
        }
        return out.empty() ? "0" : out;
    }
};

inline std::vector<SyndromeObservable> syndrome_observables(const StabilizerCode &code) {
    std::vector<SyndromeObservable> out;
    for (const auto &g : code.generators()) {
        out.push_back({g});
    }
    return out;
}

}  // namespace cvstab
