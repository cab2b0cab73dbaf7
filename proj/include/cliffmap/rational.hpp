// Copyright 2026 The cliffmap Authors
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

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cliffmap {

/// Exact non-negative-denominator fraction, used for average weights.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d = 1) : num(n), den(d) {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    /// Parses "p/q" or "p".
    static Rational parse(const std::string &text) {
        auto slash = text.find('/');
        try {
            size_t used = 0;
            int64_t n = std::stoll(text.substr(0, slash), &used);
            if (used != (slash == std::string::npos ? text.size() : slash)) {
                throw std::invalid_argument(text);
            }
            if (slash == std::string::npos) {
                return Rational(n);
            }
            std::string rest = text.substr(slash + 1);
            int64_t d = std::stoll(rest, &used);
            if (used != rest.size()) {
                throw std::invalid_argument(text);
            }
            return Rational(n, d);
        } catch (const std::logic_error &) {
            throw std::invalid_argument("not a rational number: '" + text + "'");
        }
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num == b.num && a.den == b.den;
    }
    friend auto operator<=>(const Rational &a, const Rational &b) {
        return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        return Rational(a.num * b.den, a.den * b.num);
    }
};

}  // namespace cliffmap
