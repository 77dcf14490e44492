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
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cvstab/code.hpp"

namespace cvstab {

/// Contents of a `cvstab 1` text file.
///
///     cvstab 1
///     n 3
///     k 2
///     row 0 0 0 | 1 -1 0
///     row 0 0 0 | 0 1 -1
///     logical x 1 1 1 | 0 0 0
///     logical z 0 0 0 | 1 0 0
///
/// `#` starts a comment; blank lines are ignored. Logical lines are optional
/// and come in (x, z) pairs.
struct CodeDocument {
    std::size_t n = 0;
    std::vector<PauliVector> rows;
    std::vector<HyperbolicPair> logicals;
};

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w) {
        out.push_back(w);
    }
    return out;
}

/// Numbered, comment-stripped, non-blank lines.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (!words.empty()) {
            out.emplace_back(number, std::move(words));
        }
    }
    return out;
}

inline std::size_t parse_count(std::size_t line, const std::string &word) {
    if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos || word.size() > 9) {
        throw ParseError(line, "expected a non-negative integer, got '" + word + "'");
    }
    return std::stoul(word);
}

/// Parses `<s_1> ... <s_n> | <t_1> ... <t_n>` from words[first..].
inline PauliVector parse_vector_words(
    std::size_t line, const std::vector<std::string> &words, std::size_t first, std::size_t n) {
    if (words.size() != first + 2 * n + 1 || words[first + n] != "|") {
        throw ParseError(line, "expected " + std::to_string(n) + " entries, '|', " + std::to_string(n) + " entries");
    }
    std::vector<Scalar> s;
    std::vector<Scalar> t;
    for (std::size_t i = 0; i < n; ++i) {
        try {
            s.push_back(parse_scalar(words[first + i]));
            t.push_back(parse_scalar(words[first + n + 1 + i]));
        } catch (const std::invalid_argument &e) {
            throw ParseError(line, e.what());
        }
    }
    return PauliVector(std::move(s), std::move(t));
}

}  // namespace detail

inline CodeDocument parse_code_text(std::string_view text) {
    auto lines = detail::content_lines(text);
    std::size_t cursor = 0;
    auto expect = [&](const char *keyword) -> const std::pair<std::size_t, std::vector<std::string>> & {
        if (cursor >= lines.size()) {
            std::size_t last = lines.empty() ? 1 : lines.back().first;
            throw ParseError(last, std::string("unexpected end of input, expected '") + keyword + "'");
        }
        const auto &entry = lines[cursor++];
        if (entry.second.front() != keyword) {
            throw ParseError(
                entry.first, std::string("expected '") + keyword + "', got '" + entry.second.front() + "'");
        }
        return entry;
    };
    const auto &header = expect("cvstab");
    if (header.second.size() != 2 || header.second[1] != "1") {
        throw ParseError(header.first, "unsupported format version (expected 'cvstab 1')");
    }
    const auto &n_line = expect("n");
    if (n_line.second.size() != 2) {
        throw ParseError(n_line.first, "expected 'n <int>'");
    }
    CodeDocument doc;
    doc.n = detail::parse_count(n_line.first, n_line.second[1]);
    if (doc.n == 0) {
        throw ParseError(n_line.first, "n must be positive");
    }
    const auto &k_line = expect("k");
    if (k_line.second.size() != 2) {
        throw ParseError(k_line.first, "expected 'k <int>'");
    }
    std::size_t k = detail::parse_count(k_line.first, k_line.second[1]);
    for (std::size_t r = 0; r < k; ++r) {
        const auto &row = expect("row");
        doc.rows.push_back(detail::parse_vector_words(row.first, row.second, 1, doc.n));
    }
    while (cursor < lines.size()) {
        const auto &x_line = expect("logical");
        if (x_line.second.size() < 2 || x_line.second[1] != "x") {
            throw ParseError(x_line.first, "expected 'logical x'");
        }
        PauliVector x = detail::parse_vector_words(x_line.first, x_line.second, 2, doc.n);
        const auto &z_line = expect("logical");
        if (z_line.second.size() < 2 || z_line.second[1] != "z") {
            throw ParseError(z_line.first, "expected 'logical z'");
        }
        PauliVector z = detail::parse_vector_words(z_line.first, z_line.second, 2, doc.n);
        doc.logicals.push_back({std::move(x), std::move(z)});
    }
    return doc;
}

namespace detail {

inline std::string format_vector_words(const PauliVector &v) {
    std::string out;
    for (std::size_t i = 0; i < v.num_modes(); ++i) {
        out += " " + to_string(v.s(i));
    }
    out += " |";
    for (std::size_t i = 0; i < v.num_modes(); ++i) {
        out += " " + to_string(v.t(i));
    }
    return out;
}

}  // namespace detail

/// Renders a code (and optionally its logical basis) in the `cvstab 1` grammar.
inline std::string format_code_text(const StabilizerCode &code, const LogicalBasis *basis = nullptr) {
    std::string out = "cvstab 1\n";
    out += "n " + std::to_string(code.num_modes()) + "\n";
    out += "k " + std::to_string(code.num_generators()) + "\n";
    for (const auto &g : code.generators()) {
        out += "row" + detail::format_vector_words(g) + "\n";
    }
    if (basis != nullptr) {
        for (const auto &p : basis->pairs()) {
            out += "logical x" + detail::format_vector_words(p.x) + "\n";
            out += "logical z" + detail::format_vector_words(p.z) + "\n";
        }
    }
    return out;
}

}  // namespace cvstab
