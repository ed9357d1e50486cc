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

#include "scg/rational.hpp"

#include <cctype>
#include <cmath>

#include "scg/error.hpp"

namespace scg {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    const std::string original(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("not a rational: '" + original + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0)
            throw ParseError("zero denominator: '" + original + "'");
        result = Rational(mpz_class(std::string(num), 10), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw ParseError("not a rational: '" + original + "'");
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
        mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
        result = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(s))
            throw ParseError("not a rational: '" + original + "'");
        result = Rational(mpz_class(std::string(s), 10));
    }
    result.canonicalize();
    if (negative)
        result = -result;
    return result;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

std::string to_decimal(const Rational& value, int places)
{
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;
    mpz_class num = abs(value.get_num()) * scale;
    const mpz_class& den = value.get_den();
    // round half away from zero
    mpz_class scaled = (2 * num + den) / (2 * den);
    mpz_class whole = scaled / scale;
    mpz_class frac = scaled % scale;
    std::string out = (value < 0 && scaled != 0) ? "-" : "";
    out += whole.get_str();
    if (places > 0) {
        std::string f = frac.get_str();
        out += '.';
        out += std::string(places - f.size(), '0');
        out += f;
    }
    return out;
}

bool geq_sqrt2_times(const Rational& x, const Rational& y)
{
    if (x < 0 || y < 0)
        throw ArgumentError("geq_sqrt2_times requires nonnegative operands");
    return x * x >= 2 * y * y;
}

Rational golden_threshold_ceiling(const Rational& r, long denominator)
{
    if (r < 0 || denominator <= 0)
        throw ArgumentError("golden_threshold_ceiling: r >= 0 and denominator > 0 required");
    const Rational disc = r * (r + 4);
    auto at_or_above = [&](const mpz_class& p) {
        Rational x = Rational(2 * p, denominator) - r;
        return x >= 0 && x * x >= disc;
    };
    const double approx = (r.get_d() + std::sqrt(disc.get_d())) / 2.0;
    mpz_class p(std::ceil(approx * static_cast<double>(denominator)));
    while (at_or_above(p - 1))
        --p;
    while (!at_or_above(p))
        ++p;
    Rational out(p, denominator);
    out.canonicalize();
    return out;
}

Extended Extended::infinity()
{
    Extended e;
    e.infinite_ = true;
    return e;
}

const Rational& Extended::value() const
{
    if (infinite_)
        throw ArgumentError("value() of an infinite quantity");
    return value_;
}

bool operator==(const Extended& a, const Extended& b)
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b)
{
    if (a.infinite_ || b.infinite_) {
        if (a.infinite_ == b.infinite_)
            return std::strong_ordering::equal;
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Extended ratio(const Rational& num, const Rational& den)
{
    if (den == 0)
        return num > 0 ? Extended::infinity() : Extended(Rational(1));
    return Extended(Rational(num / den));
}

std::string to_string(const Extended& value)
{
    return value.is_infinite() ? "inf" : to_string(value.value());
}

Extended parse_extended(std::string_view text)
{
    std::string_view s = trim(text);
    if (s == "inf" || s == "infinity" || s == "+inf")
        return Extended::infinity();
    return Extended(parse_rational(s));
}

} // namespace scg
