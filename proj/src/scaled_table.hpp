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

// Dense utility tables for exhaustive enumeration. Every value is multiplied by a
// common positive scale so comparisons and ratios are unchanged. The int64 form
// is used when all scaled magnitudes fit comfortably; otherwise Rational.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scg/game.hpp"
#include "scg/rational.hpp"

namespace scg::detail {

__extension__ typedef __int128 i128;

template <class V>
struct Wide;
template <>
struct Wide<std::int64_t> {
    using type = i128;
    static i128 of(std::int64_t v) { return v; }
};
template <>
struct Wide<Rational> {
    using type = Rational;
    static const Rational& of(const Rational& v) { return v; }
};

template <class V>
struct UtilityTable {
    int n = 0;
    int m = 0;
    std::vector<V> intrinsic;  // n * m
    std::vector<std::vector<std::pair<int, V>>> gains;
    Rational scale{1};

    V utility(const Profile& s, int i, int k) const
    {
        V u = intrinsic[static_cast<std::size_t>(i) * m + k];
        for (const auto& [j, g] : gains[i])
            if (s[j] == k)
                u += g;
        return u;
    }
    V utility(const Profile& s, int i) const { return utility(s, i, s[i]); }

    V welfare(const Profile& s) const
    {
        V total{0};
        for (int i = 0; i < n; ++i)
            total += utility(s, i);
        return total;
    }

    /// Fills buckets[k] = u_i(k, s_{-i}) for every k.
    void deviation_buckets(const Profile& s, int i, std::vector<V>& buckets) const
    {
        buckets.assign(intrinsic.begin() + static_cast<std::ptrdiff_t>(i) * m,
                       intrinsic.begin() + static_cast<std::ptrdiff_t>(i + 1) * m);
        for (const auto& [j, g] : gains[i])
            buckets[s[j]] += g;
    }

    Rational to_rational(const V& v) const
    {
        if constexpr (std::is_same_v<V, Rational>)
            return v / scale;
        else {
            Rational r(mpz_class(std::to_string(v)), scale.get_num());
            r.canonicalize();
            return r;
        }
    }
};

/// alpha as a ratio of table-width integers.
template <class V>
struct ScaledRatio {
    typename Wide<V>::type num;
    typename Wide<V>::type den;
};

template <class V>
ScaledRatio<V> scaled_ratio(const Rational& alpha)
{
    if constexpr (std::is_same_v<V, Rational>)
        return {Rational(alpha.get_num()), Rational(alpha.get_den())};
    else
        return {static_cast<i128>(alpha.get_num().get_si()), static_cast<i128>(alpha.get_den().get_si())};
}

inline bool fits_small(const Rational& r)
{
    const mpz_class limit = mpz_class(1) << 40;
    return abs(r.get_num()) < limit && r.get_den() < limit;
}

/// best / cur > alpha, with x/0 = +inf for x > 0 and 0/0 = 1.
template <class V>
bool factor_exceeds(const V& best, const V& cur, const ScaledRatio<V>& alpha)
{
    using W = Wide<V>;
    if (cur == 0) {
        if (best > 0)
            return true;
        return alpha.num < alpha.den;
    }
    return W::of(best) * alpha.den > alpha.num * W::of(cur);
}

/// Three-way compare of factors b1/c1 and b2/c2 under the same conventions.
template <class V>
int compare_factor(V b1, V c1, V b2, V c2)
{
    using W = Wide<V>;
    auto normalize = [](V& b, V& c) {
        if (c == 0 && b == 0) {
            b = V{1};
            c = V{1};
        }
    };
    normalize(b1, c1);
    normalize(b2, c2);
    bool inf1 = c1 == 0;
    bool inf2 = c2 == 0;
    if (inf1 || inf2)
        return inf1 == inf2 ? 0 : (inf1 ? 1 : -1);
    auto lhs = W::of(b1) * W::of(c2);
    auto rhs = W::of(b2) * W::of(c1);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

UtilityTable<Rational> make_rational_table(const Game& game);
std::optional<UtilityTable<std::int64_t>> make_integer_table(const Game& game);

/// Calls `f(table)` with the integer table when the game and every extra ratio
/// fit; otherwise with the rational table.
template <class F>
decltype(auto) with_table(const Game& game, std::initializer_list<const Rational*> ratios, F&& f)
{
    bool small = true;
    for (const Rational* r : ratios)
        small = small && fits_small(*r);
    if (small)
        if (auto t = make_integer_table(game))
            return f(*t);
    return f(make_rational_table(game));
}

} // namespace scg::detail
