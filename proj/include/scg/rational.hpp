/*
 * Copyright 2026 The scgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace scg {

/// Exact arbitrary-precision rational. All weights, utilities and factors use it.
using Rational = mpq_class;

/// Canonical a / b.
inline Rational frac(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

/// Parses "p/q", an integer, or a finite decimal ("1.618" -> 809/500).
/// Throws ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when integral).
std::string to_string(const Rational& value);

/// Rounded decimal with a fixed number of places, for human-facing tables.
std::string to_decimal(const Rational& value, int places);

/// Exact test of x >= sqrt(2) * y for x, y >= 0, via x^2 >= 2 y^2.
bool geq_sqrt2_times(const Rational& x, const Rational& y);

/// Smallest p / denominator with p / denominator >= (r + sqrt(r (r + 4))) / 2.
Rational golden_threshold_ceiling(const Rational& r, long denominator);

/// A rational or +infinity. Used for improvement factors and the imbalance ratio.
class Extended {
public:
    Extended() = default;
    Extended(Rational value) : value_(std::move(value)) {}
    Extended(long value) : value_(value) {}

    static Extended infinity();

    bool is_infinite() const { return infinite_; }
    /// Throws ArgumentError when infinite.
    const Rational& value() const;

    friend bool operator==(const Extended& a, const Extended& b);
    friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);

private:
    Rational value_{0};
    bool infinite_ = false;
};

/// num / den with the improvement-factor conventions: x/0 = +inf for x > 0, 0/0 = 1.
Extended ratio(const Rational& num, const Rational& den);

/// "inf" or the canonical rational string.
std::string to_string(const Extended& value);

/// Accepts "inf" / "infinity" in addition to rational syntax.
Extended parse_extended(std::string_view text);

} // namespace scg
