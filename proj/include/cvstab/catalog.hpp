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

#include <string>
#include <string_view>
#include <vector>

#include "cvstab/code.hpp"

namespace cvstab {

struct CatalogEntry {
    StabilizerCode code;
    LogicalBasis basis;
};

inline const std::vector<std::string> &builtin_names() {
    static const std::vector<std::string> names = {
        "three-mode-q",
        "three-mode-p",
        "nine-mode",
        "five-mode-braunstein",
        "eight-mode-gottesman",
    };
    return names;
}

inline bool is_builtin(std::string_view name) {
    for (const auto &n : builtin_names()) {
        if (n == name) {
            return true;
        }
    }
    return false;
}

namespace detail {

inline CatalogEntry three_mode_q() {
    // Stabilized by Z(t) Z(-t) I and I Z(t) Z(-t); protects against one position shift.
    auto code = validate(
        {
            PauliVector({0, 0, 0}, {1, -1, 0}),
            PauliVector({0, 0, 0}, {0, 1, -1}),
        },
        "three-mode-q");
    // x = (1,1,1|0,0,0) is the derived Gram-Schmidt x verbatim.
    return {code, logical_basis(code)};
}

inline CatalogEntry three_mode_p() {
    // The position code with the roles of X and Z exchanged.
    auto code = validate(
        {
            PauliVector({1, -1, 0}, {0, 0, 0}),
            PauliVector({0, 1, -1}, {0, 0, 0}),
        },
        "three-mode-p");
    return {code, logical_basis(code)};
}

inline CatalogEntry nine_mode() {
    // Position code outside, momentum code on each of its modes.
    auto code = validate(
        {
            PauliVector({1, -1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}),
            PauliVector({0, 1, -1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}),
            PauliVector({0, 0, 0, 1, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}),
            PauliVector({0, 0, 0, 0, 1, -1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}),
            PauliVector({0, 0, 0, 0, 0, 0, 1, -1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}),
            PauliVector({0, 0, 0, 0, 0, 0, 0, 1, -1}, {0, 0, 0, 0, 0, 0, 0, 0, 0}),
            PauliVector({0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, -1, -1, -1, 0, 0, 0}),
            PauliVector({0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1, -1, -1, -1}),
        },
        "nine-mode");
    // X(t)^{x9} and Z(t)^{x9}. omega(x, z) = 9, so z is stored rescaled by 1/9.
    std::vector<HyperbolicPair> pairs = {{
        PauliVector({1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0}),
        PauliVector({0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 1, 1, 1}),
    }};
    return {code, make_logical_basis(code, std::move(pairs), LogicalSource::catalog)};
}

inline CatalogEntry five_mode_braunstein() {
    auto code = validate(
        {
            PauliVector({1, 0, 0, -1, -1}, {0, 0, 1, -1, 0}),
            PauliVector({0, 1, 0, 0, 1}, {1, 0, 0, 1, 0}),
            PauliVector({0, 0, 1, 1, 0}, {1, 0, 0, 0, 1}),
            PauliVector({0, 0, 0, 0, 0}, {0, -1, 1, -1, 1}),
        },
        "five-mode-braunstein");
    // X = Z(t) X(t) X(t) I I; Z is its mode-wise swap X(t) Z(t) Z(t) I I.
    std::vector<HyperbolicPair> pairs = {{
        PauliVector({0, 1, 1, 0, 0}, {1, 0, 0, 0, 0}),
        PauliVector({1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}),
    }};
    return {code, make_logical_basis(code, std::move(pairs), LogicalSource::catalog)};
}

inline CatalogEntry eight_mode_gottesman() {
    auto code = validate(
        {
            PauliVector({1, 1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0}),
            PauliVector({0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, -1, -1, -1, -1}),
            PauliVector({0, 1, 0, 1, 1, 0, 1, 0}, {0, 0, 0, 0, -1, -1, 1, 1}),
            PauliVector({0, 1, 0, 1, 0, 1, 0, 1}, {0, 0, 1, -1, 0, 0, 1, -1}),
            PauliVector({0, 1, 1, 0, 1, 0, 0, 1}, {0, 1, 0, -1, 0, 1, 0, -1}),
        },
        "eight-mode-gottesman");
    // The published X3 has a bare "Z" on mode 4. Z(-t) is the only entry
    // c in {-1, 0, 1} for which X3 commutes with all five generators; it
    // also gives the standard delta table against the other five operators.
    std::vector<HyperbolicPair> pairs = {
        {
            PauliVector({1, -1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, -1}),
            PauliVector({0, 0, 0, 0, 0, 0, 0, 0}, {0, -1, 0, 1, 0, -1, 0, 1}),
        },
        {
            PauliVector({1, 0, -1, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0, 1, 0}),
            PauliVector({0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, -1, -1, 0, 0, 1, 1}),
        },
        {
            PauliVector({1, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, -1, 0, 1, 0, 0}),
            PauliVector({0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, -1, -1}),
        },
    };
    return {code, make_logical_basis(code, std::move(pairs), LogicalSource::catalog)};
}

}  // namespace detail

/// Catalog codes with their logical operators. Printed operators are used
/// where they exist; otherwise the basis is derived (and flagged as such).
inline CatalogEntry builtin(std::string_view name) {
    if (name == "three-mode-q") {
        return detail::three_mode_q();
    }
    if (name == "three-mode-p") {
        return detail::three_mode_p();
    }
    if (name == "nine-mode") {
        return detail::nine_mode();
    }
    if (name == "five-mode-braunstein") {
        return detail::five_mode_braunstein();
    }
    if (name == "eight-mode-gottesman") {
        return detail::eight_mode_gottesman();
    }
    throw UnknownCode(std::string(name));
}

}  // namespace cvstab
