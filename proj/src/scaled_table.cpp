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

#include "scaled_table.hpp"

namespace scg::detail {

UtilityTable<Rational> make_rational_table(const Game& game)
{
    UtilityTable<Rational> t;
    t.n = game.players();
    t.m = game.strategies();
    for (const auto& row : game.intrinsic_matrix())
        t.intrinsic.insert(t.intrinsic.end(), row.begin(), row.end());
    t.gains.resize(t.n);
    for (int i = 0; i < t.n; ++i)
        for (const auto& nb : game.neighbors(i))
            t.gains[i].emplace_back(nb.player, nb.gain);
    return t;
}

std::optional<UtilityTable<std::int64_t>> make_integer_table(const Game& game)
{
    const mpz_class den_limit = mpz_class(1) << 40;
    const mpz_class total_limit = mpz_class(1) << 60;

    mpz_class scale = 1;
    auto absorb = [&](const Rational& v) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den().get_mpz_t());
        return scale < den_limit;
    };
    for (const auto& row : game.intrinsic_matrix())
        for (const auto& w : row)
            if (!absorb(w))
                return std::nullopt;
    for (int i = 0; i < game.players(); ++i)
        for (const auto& nb : game.neighbors(i))
            if (!absorb(nb.gain))
                return std::nullopt;

    // Any utility or welfare is bounded by the sum of every value in the table.
    mpz_class bound = 0;
    auto scaled = [&](const Rational& v) {
        mpz_class s = v.get_num() * (scale / v.get_den());
        bound += abs(s);
        return s;
    };

    UtilityTable<std::int64_t> t;
    t.n = game.players();
    t.m = game.strategies();
    t.scale = Rational(scale);
    t.gains.resize(t.n);
    std::vector<mpz_class> values;
    for (const auto& row : game.intrinsic_matrix())
        for (const auto& w : row)
            values.push_back(scaled(w));
    std::vector<std::vector<std::pair<int, mpz_class>>> gains(t.n);
    for (int i = 0; i < t.n; ++i)
        for (const auto& nb : game.neighbors(i))
            gains[i].emplace_back(nb.player, scaled(nb.gain));
    if (bound >= total_limit)
        return std::nullopt;

    for (const auto& v : values)
        t.intrinsic.push_back(v.get_si());
    for (int i = 0; i < t.n; ++i)
        for (const auto& [j, g] : gains[i])
            t.gains[i].emplace_back(j, g.get_si());
    return t;
}

} // namespace scg::detail
