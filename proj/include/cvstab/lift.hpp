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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cvstab/code.hpp"
#include "cvstab/code_format.hpp"
#include "cvstab/errors.hpp"

namespace cvstab {

using BitRow = std::vector<std::uint8_t>;

/// GF(2) stabilizer check matrix in (X part | Z part) layout. Rows commute
/// under the binary symplectic form; independence is not enforced here and is
/// caught when a lifted code is validated.
class BinaryCheckMatrix {
   public:
    BinaryCheckMatrix(std::size_t n, std::vector<BitRow> rows) : n_(n), rows_(std::move(rows)) {
        if (n_ == 0) {
            throw std::invalid_argument("binary check matrix needs at least one qubit");
        }
        for (const auto &r : rows_) {
            if (r.size() != 2 * n_) {
                throw DimensionMismatch(n_, r.size() / 2);
            }
            for (auto b : r) {
                if (b > 1) {
                    throw std::invalid_argument("binary entries must be 0 or 1");
                }
            }
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = i + 1; j < rows_.size(); ++j) {
                if (binary_form(rows_[i], rows_[j]) != 0) {
                    throw NonCommuting(i + 1, j + 1);
                }
            }
        }
    }

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t num_rows() const {
        return rows_.size();
    }
    const std::vector<BitRow> &rows() const {
        return rows_;
    }

    /// sum_i (a.x_i b.z_i + b.x_i a.z_i) mod 2.
    static int binary_form(const BitRow &a, const BitRow &b) {
        const std::size_t n = a.size() / 2;
        int acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            acc ^= (a[i] & b[n + i]) ^ (b[i] & a[n + i]);
        }
        return acc;
    }

   private:
    std::size_t n_;
    std::vector<BitRow> rows_;
};

/// One I/X/Y/Z string: X sets the x bit, Z the z bit, Y both.
inline BitRow parse_pauli_string(std::string_view text) {
    BitRow row(2 * text.size(), 0);
    const std::size_t n = text.size();
    for (std::size_t i = 0; i < n; ++i) {
        switch (text[i]) {
            case 'I':
            case '_':
                break;
            case 'X':
                row[i] = 1;
                break;
            case 'Z':
                row[n + i] = 1;
                break;
            case 'Y':
                row[i] = 1;
                row[n + i] = 1;
                break;
            default:
                throw std::invalid_argument(
                    std::string("bad Pauli character '") + text[i] + "' in '" + std::string(text) + "'");
        }
    }
    return row;
}

inline BinaryCheckMatrix parse_pauli_strings(const std::vector<std::string> &lines) {
    if (lines.empty()) {
        throw std::invalid_argument("no Pauli strings");
    }
    std::vector<BitRow> rows;
    for (const auto &l : lines) {
        if (l.size() != lines.front().size()) {
            throw DimensionMismatch(lines.front().size(), l.size());
        }
        rows.push_back(parse_pauli_string(l));
    }
    return BinaryCheckMatrix(lines.front().size(), std::move(rows));
}

/// A binary code file: either Pauli strings, one per line, optionally
/// followed by `logical x <string>` / `logical z <string>` lines; or a `bits 1`
/// block mirroring the cvstab grammar with 0/1 entries.
struct BinaryCodeDocument {
    BinaryCheckMatrix checks;
    std::vector<BitRow> logicals;
    /// 'x' or 'z' per logical, in file order.
    std::vector<char> logical_kinds;
};

inline BinaryCodeDocument parse_binary_code(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) {
        throw ParseError(1, "empty binary code file");
    }
    auto to_bits = [](const PauliVector &v, std::size_t line) {
        BitRow r;
        for (const auto &x : v.coords()) {
            if (x != 0 && x != 1) {
                throw ParseError(line, "bit entries must be 0 or 1");
            }
            r.push_back(x == 1 ? 1 : 0);
        }
        return r;
    };
    std::vector<BitRow> rows;
    std::vector<BitRow> logicals;
    std::vector<char> kinds;
    std::size_t n = 0;
    if (lines.front().second.front() == "bits") {
        const auto &[head_line, head] = lines.front();
        if (head.size() != 2 || head[1] != "1") {
            throw ParseError(head_line, "unsupported format version (expected 'bits 1')");
        }
        // Same grammar as cvstab apart from the header line and the 0/1 restriction.
        std::string rewritten;
        std::size_t number = 0;
        std::string_view rest = text;
        while (!rest.empty()) {
            ++number;
            auto eol = rest.find('\n');
            std::string_view line = rest.substr(0, eol);
            rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
            rewritten += number == head_line ? std::string("cvstab 1") : std::string(line);
            rewritten += '\n';
        }
        CodeDocument doc = parse_code_text(rewritten);
        n = doc.n;
        for (std::size_t i = 0; i < doc.rows.size(); ++i) {
            rows.push_back(to_bits(doc.rows[i], head_line));
        }
        for (const auto &p : doc.logicals) {
            logicals.push_back(to_bits(p.x, head_line));
            kinds.push_back('x');
            logicals.push_back(to_bits(p.z, head_line));
            kinds.push_back('z');
        }
    } else {
        for (const auto &[number, words] : lines) {
            try {
                if (words.front() == "logical") {
                    if (words.size() != 3 || (words[1] != "x" && words[1] != "z")) {
                        throw std::invalid_argument("expected 'logical x|z <pauli string>'");
                    }
                    logicals.push_back(parse_pauli_string(words[2]));
                    kinds.push_back(words[1][0]);
                    if (words[2].size() != n) {
                        throw std::invalid_argument("logical length differs from the check rows");
                    }
                    continue;
                }
                if (words.size() != 1) {
                    throw std::invalid_argument("expected one Pauli string per line");
                }
                if (!logicals.empty()) {
                    throw std::invalid_argument("check rows must precede logical lines");
                }
                if (n == 0) {
                    n = words[0].size();
                } else if (words[0].size() != n) {
                    throw std::invalid_argument("inconsistent Pauli string length");
                }
                rows.push_back(parse_pauli_string(words[0]));
            } catch (const ParseError &) {
                throw;
            } catch (const std::invalid_argument &e) {
                throw ParseError(number, e.what());
            }
        }
    }
    return {BinaryCheckMatrix(n, std::move(rows)), std::move(logicals), std::move(kinds)};
}

/// Entries in {-1, 0, +1}, nonzero exactly where the binary matrix is.
using SignAssignment = std::vector<std::vector<std::int8_t>>;

enum class LiftStatus {
    found,
    unsat,
    budget_exceeded,
};

inline const char *to_string(LiftStatus status) {
    switch (status) {
        case LiftStatus::found:
            return "found";
        case LiftStatus::unsat:
            return "UNSAT";
        case LiftStatus::budget_exceeded:
            return "BUDGET";
    }
    return "?";
}

struct LiftOutcome {
    LiftStatus status;
    SignAssignment assignment;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultLiftBudget = 10'000'000;

/// Real rows = elementwise product of bits and signs, validated as a CV code.
inline StabilizerCode verify_lift(const BinaryCheckMatrix &h, const SignAssignment &signs, std::string name = {}) {
    if (signs.size() != h.num_rows()) {
        throw DimensionMismatch(h.num_rows(), signs.size());
    }
    const std::size_t n = h.num_qubits();
    std::vector<PauliVector> rows;
    for (std::size_t r = 0; r < h.num_rows(); ++r) {
        if (signs[r].size() != 2 * n) {
            throw DimensionMismatch(n, signs[r].size() / 2);
        }
        std::vector<Scalar> coords;
        for (std::size_t c = 0; c < 2 * n; ++c) {
            int sign = signs[r][c];
            if (sign < -1 || sign > 1 || (sign != 0) != (h.rows()[r][c] != 0)) {
                throw std::invalid_argument(
                    "sign assignment does not match the binary support at row " + std::to_string(r + 1));
            }
            coords.emplace_back(sign);
        }
        rows.push_back(PauliVector::from_coords(std::move(coords)));
    }
    return validate(n, std::move(rows), std::move(name));
}

namespace detail {

/// Depth-first search over the signs of the nonzero entries, row-major. The
/// first nonzero of every row is pinned to +1 (negating a row preserves the
/// stabilizer group). After each assignment the running value of every
/// affected pair form must still be reachable by the terms left to assign.
class SignSearch {
   public:
    SignSearch(const BinaryCheckMatrix &h, std::uint64_t budget) : h_(h), budget_(budget) {
        const std::size_t n = h.num_qubits();
        const std::size_t k = h.num_rows();
        signs_.assign(k, std::vector<std::int8_t>(2 * n, 0));
        partial_.assign(k, std::vector<int>(k, 0));
        for (std::size_t r = 0; r < k; ++r) {
            bool first = true;
            for (std::size_t c = 0; c < 2 * n; ++c) {
                if (h.rows()[r][c]) {
                    vars_.push_back({r, c, first});
                    first = false;
                }
            }
        }
        // remaining_[v][i]: terms of pair (i, row(v)) contributed by later variables of the same row.
        remaining_.assign(vars_.size(), std::vector<int>(k, 0));
        for (std::size_t v = vars_.size(); v-- > 0;) {
            const auto &var = vars_[v];
            if (v + 1 < vars_.size() && vars_[v + 1].row == var.row) {
                for (std::size_t i = 0; i < var.row; ++i) {
                    remaining_[v][i] =
                        remaining_[v + 1][i] + (partner_bit(i, vars_[v + 1].row, vars_[v + 1].col) ? 1 : 0);
                }
            }
        }
    }

    LiftOutcome run() {
        for (std::size_t r = 0; r < h_.num_rows(); ++r) {
            bool any = false;
            for (auto b : h_.rows()[r]) {
                any |= b != 0;
            }
            if (!any) {
                throw RankDeficient(r + 1);
            }
        }
        LiftStatus status = search(0);
        LiftOutcome out{status, {}, nodes_};
        if (status == LiftStatus::found) {
            out.assignment = signs_;
        }
        return out;
    }

   private:
    struct Var {
        std::size_t row;
        std::size_t col;
        bool pinned;
    };

    /// Whether variable (row, col) has a nonzero partner entry in `other` for omega(other, row).
    bool partner_bit(std::size_t other, std::size_t row, std::size_t col) const {
        (void)row;
        const std::size_t n = h_.num_qubits();
        return col < n ? h_.rows()[other][n + col] != 0 : h_.rows()[other][col - n] != 0;
    }

    /// Contribution of entry (row, col) with value `sign` to omega(u_other, u_row), other < row.
    int contribution(std::size_t other, std::size_t col, int sign) const {
        const std::size_t n = h_.num_qubits();
        if (col < n) {
            return -sign * signs_[other][n + col];
        }
        return sign * signs_[other][col - n];
    }

    LiftStatus search(std::size_t v) {
        if (v == vars_.size()) {
            try {
                verify_lift(h_, signs_);
                return LiftStatus::found;
            } catch (const RankDeficient &) {
                return LiftStatus::unsat;
            }
        }
        const Var &var = vars_[v];
        bool exhausted_budget = false;
        for (int sign : {1, -1}) {
            if (sign == -1 && var.pinned) {
                break;
            }
            if (nodes_ >= budget_) {
                return LiftStatus::budget_exceeded;
            }
            ++nodes_;
            signs_[var.row][var.col] = static_cast<std::int8_t>(sign);
            bool feasible = true;
            for (std::size_t i = 0; i < var.row; ++i) {
                partial_[i][var.row] += contribution(i, var.col, sign);
                if (std::abs(partial_[i][var.row]) > remaining_[v][i]) {
                    feasible = false;
                }
            }
            if (feasible) {
                LiftStatus s = search(v + 1);
                if (s == LiftStatus::found) {
                    return s;
                }
                exhausted_budget |= s == LiftStatus::budget_exceeded;
            }
            for (std::size_t i = 0; i < var.row; ++i) {
                partial_[i][var.row] -= contribution(i, var.col, sign);
            }
            signs_[var.row][var.col] = 0;
            if (exhausted_budget) {
                return LiftStatus::budget_exceeded;
            }
        }
        return LiftStatus::unsat;
    }

    const BinaryCheckMatrix &h_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Var> vars_;
    SignAssignment signs_;
    std::vector<std::vector<int>> partial_;
    std::vector<std::vector<int>> remaining_;
};

}  // namespace detail

/// Finds signs making the real rows pairwise symplectically orthogonal and
/// independent. Every GF(2)-commuting pair has an even number of overlapping
/// terms, so each real pair form is a sum of an even number of +-1 terms to be
/// balanced to zero. Deterministic; the first solution in search order wins.
inline LiftOutcome lift_signs(const BinaryCheckMatrix &h, std::uint64_t max_nodes = kDefaultLiftBudget) {
    return detail::SignSearch(h, max_nodes).run();
}

struct LogicalLiftOutcome {
    LiftStatus status;
    std::vector<PauliVector> logicals;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Signs for one binary vector so that omega(v, u_j) = 0 for every generator.
inline LiftStatus lift_one_logical(
    const BitRow &bits, const StabilizerCode &code, std::uint64_t budget, std::uint64_t &nodes, PauliVector &out) {
    const std::size_t n = code.num_modes();
    const auto &gens = code.generators();
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < 2 * n; ++c) {
        if (bits[c]) {
            cols.push_back(c);
        }
    }
    // coef[v][j]: d omega(v, u_j) / d entry cols[v].
    std::vector<std::vector<Scalar>> coef(cols.size(), std::vector<Scalar>(gens.size()));
    for (std::size_t v = 0; v < cols.size(); ++v) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            coef[v][j] = cols[v] < n ? gens[j].t(cols[v]) : Scalar(-gens[j].s(cols[v] - n));
        }
    }
    // slack[v][j]: sum of |coef| over variables after v.
    std::vector<std::vector<Scalar>> slack(cols.size() + 1, std::vector<Scalar>(gens.size(), Scalar(0)));
    for (std::size_t v = cols.size(); v-- > 0;) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            slack[v][j] = slack[v + 1][j] + abs(coef[v][j]);
        }
    }
    std::vector<Scalar> partial(gens.size(), Scalar(0));
    std::vector<int> signs(cols.size(), 0);
    bool budget_hit = false;
    auto search = [&](auto &&self, std::size_t v) -> bool {
        if (v == cols.size()) {
            return true;
        }
        for (int sign : {1, -1}) {
            if (sign == -1 && v == 0) {
                break;
            }
            if (nodes >= budget) {
                budget_hit = true;
                return false;
            }
            ++nodes;
            signs[v] = sign;
            bool feasible = true;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                partial[j] += sign * coef[v][j];
                if (abs(partial[j]) > slack[v + 1][j]) {
                    feasible = false;
                }
            }
            bool found = feasible && self(self, v + 1);
            if (found) {
                return true;
            }
            for (std::size_t j = 0; j < gens.size(); ++j) {
                partial[j] -= sign * coef[v][j];
            }
            if (budget_hit) {
                return false;
            }
        }
        return false;
    };
    if (!search(search, 0)) {
        return budget_hit ? LiftStatus::budget_exceeded : LiftStatus::unsat;
    }
    std::vector<Scalar> coords(2 * n, Scalar(0));
    for (std::size_t v = 0; v < cols.size(); ++v) {
        coords[cols[v]] = signs[v];
    }
    out = PauliVector::from_coords(std::move(coords));
    return LiftStatus::found;
}

}  // namespace detail

/// Signs each binary logical vector independently so that it commutes with the
/// code's generators. The budget is shared across all vectors. Pairing and
/// normalization are left to make_logical_basis.
inline LogicalLiftOutcome lift_logicals(
    const std::vector<BitRow> &logicals, const StabilizerCode &code, std::uint64_t max_nodes = kDefaultLiftBudget) {
    LogicalLiftOutcome out{LiftStatus::found, {}, 0};
    for (const auto &bits : logicals) {
        if (bits.size() != 2 * code.num_modes()) {
            throw DimensionMismatch(code.num_modes(), bits.size() / 2);
        }
        PauliVector v;
        LiftStatus s = detail::lift_one_logical(bits, code, max_nodes, out.nodes, v);
        if (s != LiftStatus::found) {
            out.status = s;
            out.logicals.clear();
            return out;
        }
        out.logicals.push_back(std::move(v));
    }
    return out;
}

}  // namespace cvstab
