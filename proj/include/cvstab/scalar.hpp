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

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace cvstab {

/// Exact rational scalar. Always held in lowest terms with a positive denominator.
/// Expression templates are off so that generic code may deduce `auto`
/// results.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Scalar = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Scalar make_scalar(std::int64_t numerator, std::int64_t denominator = 1) {
    if (denominator == 0) {
        throw std::invalid_argument("zero denominator");
    }
    return Scalar(Integer(numerator), Integer(denominator));
}

inline bool is_integer(const Scalar &x) {
    return boost::multiprecision::denominator(x) == 1;
}

inline double to_double(const Scalar &x) {
    return x.convert_to<double>();
}

/// Parses `-3`, `3/2`, `+4` or an exact decimal such as `0.25`.
template <class T>
T scalar_cast(const Scalar &x) {
    if constexpr (std::is_same_v<T, Scalar>) {
        return x;
    } else {
        return static_cast<T>(to_double(x));
    }
}

inline Scalar parse_scalar(std::string_view text) {
    auto fail = [&]() -> Scalar { throw std::invalid_argument("bad rational token '" + std::string(text) + "'"); };
    if (text.empty()) {
        return fail();
    }
    std::string_view body = text;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto digits = [](std::string_view s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    Scalar result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!digits(num) || !digits(den)) {
            return fail();
        }
        Integer d{std::string(den)};
        if (d == 0) {
            return fail();
        }
        result = Scalar(Integer(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !digits(whole)) || (!frac.empty() && !digits(frac))) {
            return fail();
        }
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
        Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
        result = Scalar(w * scale + f, scale);
    } else {
        if (!digits(body)) {
            return fail();
        }
        result = Scalar(Integer(std::string(body)));
    }
    return negative ? Scalar(-result) : result;
}

/// `-1`, `0`, `3/2`.
inline std::string to_string(const Scalar &x) {
    return x.str();
}

/// Floor division for rationals: the largest integer not exceeding x.
inline Integer floor_integer(const Scalar &x) {
    const Integer &num = boost::multiprecision::numerator(x);
    const Integer &den = boost::multiprecision::denominator(x);
    Integer q = num / den;
    if (num % den != 0 && num < 0) {
        q -= 1;
    }
    return q;
}

/// Reduces x into the half-open interval [0, m).
inline Scalar reduce_mod(const Scalar &x, const Scalar &m) {
    Scalar q = Scalar(floor_integer(x / m));
    return x - q * m;
}

}  // namespace cvstab
