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
#include <stdexcept>
#include <string>

#include "cvstab/scalar.hpp"

namespace cvstab {

struct DimensionMismatch : std::invalid_argument {
    DimensionMismatch(std::size_t expected, std::size_t actual)
        : std::invalid_argument(
              "mode count mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(actual)),
          expected(expected),
          actual(actual) {
    }
    std::size_t expected;
    std::size_t actual;
};

/// Generators `first` and `second` (1-based) have nonzero symplectic form `value`.
struct NonIsotropic : std::invalid_argument {
    NonIsotropic(std::size_t first, std::size_t second, Scalar value)
        : std::invalid_argument(
              "NonIsotropic(" + std::to_string(first) + "," + std::to_string(second) + "," + to_string(value) + ")"),
          first(first),
          second(second),
          value(std::move(value)) {
    }
    std::size_t first;
    std::size_t second;
    Scalar value;
};

/// Row `row` (1-based) lies in the span of the rows before it.
struct RankDeficient : std::invalid_argument {
    explicit RankDeficient(std::size_t row)
        : std::invalid_argument("RankDeficient(" + std::to_string(row) + ")"), row(row) {
    }
    std::size_t row;
};

/// Rows `first` and `second` (1-based) of a binary check matrix anticommute.
struct NonCommuting : std::invalid_argument {
    NonCommuting(std::size_t first, std::size_t second)
        : std::invalid_argument("NonCommuting(" + std::to_string(first) + "," + std::to_string(second) + ")"),
          first(first),
          second(second) {
    }
    std::size_t first;
    std::size_t second;
};

struct InvalidLogicalBasis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    ParseError(std::size_t line, const std::string &message)
        : std::invalid_argument("line " + std::to_string(line) + ": " + message), line(line) {
    }
    std::size_t line;
};

struct UnknownCode : std::invalid_argument {
    explicit UnknownCode(const std::string &name) : std::invalid_argument("unknown builtin code '" + name + "'") {
    }
};

struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace cvstab
