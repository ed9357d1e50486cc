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

#include "scg/analysis.hpp"

#include <algorithm>

#include "scaled_table.hpp"
#include "scg/error.hpp"

namespace scg {

namespace {

using detail::UtilityTable;

template <class V>
StrongDeviationReport strong_on_table(const UtilityTable<V>& t, const Profile& s, const Rational& alpha)
{
    const auto a = detail::scaled_ratio<V>(alpha);
    std::vector<V> current(t.n);
    for (int i = 0; i < t.n; ++i)
        current[i] = t.utility(s, i);

    StrongDeviationReport report;
    Profile alt(t.n, 0);
    do {
        if (alt == s)
            continue;
        ++report.checked;
        bool violated = true;
        for (int i = 0; i < t.n && violated; ++i)
            if (alt[i] != s[i] && !detail::factor_exceeds(t.utility(alt, i), current[i], a))
                violated = false;
        if (!violated)
            continue;
        report.stable = false;
        report.alternative = alt;
        for (int i = 0; i < t.n; ++i) {
            if (alt[i] == s[i])
                continue;
            report.coalition.push_back(i);
            report.factors.push_back(ratio(t.to_rational(t.utility(alt, i)), t.to_rational(current[i])));
        }
        return report;
    } while (next_profile(alt, t.m));
    return report;
}

template <class V>
EquilibriumCensus census_on_table(const UtilityTable<V>& t, const Rational& alpha, const CensusOptions& options)
{
    const auto a = detail::scaled_ratio<V>(alpha);
    EquilibriumCensus census;
    census.alpha = alpha;

    Profile s(t.n, 0);
    std::vector<V> buckets;
    bool first = true;
    V opt_welfare{0};
    Profile opt_profile;
    V min_b{0}, min_c{0};

    do {
        V w{0};
        V max_b{0}, max_c{0};  // 0/0 reads as factor 1
        for (int i = 0; i < t.n; ++i) {
            t.deviation_buckets(s, i, buckets);
            const V& cur = buckets[s[i]];
            w += cur;
            const V& best = *std::max_element(buckets.begin(), buckets.end());
            if (detail::compare_factor(best, cur, max_b, max_c) > 0) {
                max_b = best;
                max_c = cur;
            }
        }
        if (first || w > opt_welfare) {
            opt_welfare = w;
            opt_profile = s;
        }
        if (first || detail::compare_factor(max_b, max_c, min_b, min_c) < 0) {
            min_b = max_b;
            min_c = max_c;
        }
        first = false;

        const bool eq = !detail::factor_exceeds(max_b, max_c, a);
        if (eq || options.keep_all_rows) {
            CensusEntry e{s, t.to_rational(w), ratio(t.to_rational(max_b), t.to_rational(max_c)), eq, std::nullopt};
            if (eq)
                census.equilibria.push_back(e);
            if (options.keep_all_rows)
                census.rows.push_back(std::move(e));
        }
    } while (next_profile(s, t.m));

    census.optimum = {opt_profile, t.to_rational(opt_welfare)};
    census.min_max_factor = ratio(t.to_rational(min_b), t.to_rational(min_c));

    if (options.strong_flags) {
        for (auto& e : census.equilibria) {
            e.is_strong = strong_on_table(t, e.profile, alpha).stable;
            if (options.keep_all_rows)
                for (auto& row : census.rows)
                    if (row.profile == e.profile)
                        row.is_strong = e.is_strong;
        }
        if (options.keep_all_rows)
            for (auto& row : census.rows)
                if (!row.is_strong)
                    row.is_strong = false;
    }

    for (std::size_t k = 0; k < census.equilibria.size(); ++k) {
        const Rational& w = census.equilibria[k].welfare;
        if (!census.best || w > census.equilibria[*census.best].welfare)
            census.best = k;
        if (!census.worst || w < census.equilibria[*census.worst].welfare)
            census.worst = k;
    }
    if (census.exists()) {
        census.price_of_anarchy = ratio(census.optimum.welfare, census.equilibria[*census.worst].welfare);
        census.price_of_stability = ratio(census.optimum.welfare, census.equilibria[*census.best].welfare);
    }
    return census;
}

template <class V>
Optimum optimum_on_table(const UtilityTable<V>& t)
{
    Profile s(t.n, 0);
    Profile best = s;
    V best_w = t.welfare(s);
    while (next_profile(s, t.m)) {
        V w = t.welfare(s);
        if (w > best_w) {
            best_w = w;
            best = s;
        }
    }
    return {best, t.to_rational(best_w)};
}

} // namespace

void require_enumerable(int players, int strategies)
{
    if (profile_count(players, strategies, kEnumerationLimit) > kEnumerationLimit)
        throw SizeError("m^n exceeds the enumeration limit of " + std::to_string(kEnumerationLimit) +
                        " profiles (n = " + std::to_string(players) + ", m = " + std::to_string(strategies) + ")");
}

DeviationReport deviation_report(const Game& game, const Profile& s)
{
    game.validate_profile(s);
    DeviationReport r;
    for (int i = 0; i < game.players(); ++i) {
        r.players.push_back(best_response(game, s, i));
        if (i == 0 || r.players.back().factor > r.max_factor) {
            r.max_factor = r.players.back().factor;
            r.witness = i;
        }
    }
    return r;
}

StrongDeviationReport verify_approx_strong(const Game& game, const Profile& s, const Rational& alpha)
{
    game.validate_profile(s);
    require_enumerable(game.players(), game.strategies());
    return detail::with_table(game, {&alpha}, [&](const auto& t) { return strong_on_table(t, s, alpha); });
}

Optimum brute_force_optimum(const Game& game)
{
    require_enumerable(game.players(), game.strategies());
    return detail::with_table(game, {}, [&](const auto& t) { return optimum_on_table(t); });
}

EquilibriumCensus equilibrium_census(const Game& game, const Rational& alpha, const CensusOptions& options)
{
    if (alpha < 1)
        throw ArgumentError("census alpha must be at least 1");
    require_enumerable(game.players(), game.strategies());
    return detail::with_table(game, {&alpha}, [&](const auto& t) { return census_on_table(t, alpha, options); });
}

Rational welfare_lower_bound(const Rational& alpha, const Extended& gamma, const Extended& m)
{
    if (alpha < golden_approx() || alpha > 2)
        throw ArgumentError("alpha must lie in [1618/1000, 2], got " + to_string(alpha));
    if (gamma < Extended(1))
        throw ArgumentError("gamma must be at least 1");
    if (!m.is_infinite() && (m.value() < 1 || m.value().get_den() != 1))
        throw ArgumentError("m must be a positive integer or inf");

    const Rational inv_m = m.is_infinite() ? Rational(0) : Rational(1 / m.value());
    // The balancing point of the two guarantees lies beyond A_T = OPT when
    // alpha < 1 + 1/m (only m = 1 in range); the minimum then sits at A_T = OPT.
    if (alpha < 1 + inv_m)
        return std::max(Rational(alpha - 1), inv_m);

    const bool balanced = !gamma.is_infinite() && (m.is_infinite() || gamma.value() + 1 <= alpha * m.value());
    if (balanced) {
        const Rational g1 = gamma.value() + 1;
        return (alpha - 1) / (1 + (g1 / alpha) * (alpha - (1 + inv_m)));
    }
    const Rational anchored = gamma.is_infinite() ? Rational(0) : Rational(alpha / (gamma.value() + 1));
    const Rational spread = m.is_infinite() ? Rational(0) : Rational((alpha - 1) / ((m.value() - 1) + (alpha - 1)));
    return std::max(anchored, spread);
}

PaymentPlan payment_stabilize(const Game& game, const Profile& s, const Rational& optimum_welfare)
{
    if (optimum_welfare <= 0)
        throw ArgumentError("optimum welfare must be positive");
    game.validate_profile(s);
    PaymentPlan plan;
    for (int i = 0; i < game.players(); ++i) {
        BestResponse br = best_response(game, s, i);
        Rational gap = br.utility - br.current;
        if (gap < 0)
            gap = 0;
        plan.total += gap;
        plan.payments.push_back(std::move(gap));
        plan.targets.push_back(br.strategy);
    }
    plan.optimum_welfare = optimum_welfare;
    plan.nu = plan.total / optimum_welfare;
    plan.intrinsic_total = instance_stats(game).intrinsic_total;
    plan.within_intrinsic_bound = plan.total <= plan.intrinsic_total;
    return plan;
}

Extended augmented_max_factor(const Game& game, const Profile& s, const std::vector<Rational>& payments)
{
    game.validate_profile(s);
    if (static_cast<int>(payments.size()) != game.players())
        throw ArgumentError("one payment per player required");
    Extended worst(1);
    for (int i = 0; i < game.players(); ++i) {
        Rational stay = utility(game, s, i) + payments[i];
        Rational best = stay;
        for (int k = 0; k < game.strategies(); ++k)
            if (k != s[i])
                best = std::max(best, deviation_utility(game, s, i, k));
        worst = std::max(worst, ratio(best, stay));
    }
    return worst;
}

Rational uniform_deviation_welfare(const Game& game, const Profile& s)
{
    game.validate_profile(s);
    Rational sum;
    for (int i = 0; i < game.players(); ++i)
        for (int k = 0; k < game.strategies(); ++k)
            sum += deviation_utility(game, s, i, k);
    return sum / game.strategies();
}

bool semi_smoothness_check(const Game& game, const Profile& s, const Rational& optimum_welfare)
{
    return uniform_deviation_welfare(game, s) >= optimum_welfare / game.strategies();
}

bool semi_smoothness_check(const Game& game, const Profile& s)
{
    return semi_smoothness_check(game, s, brute_force_optimum(game).welfare);
}

bool mip_check(const Game& game, const Profile& s)
{
    return intrinsic_welfare(game, s) * game.strategies() >= instance_stats(game).intrinsic_total;
}

} // namespace scg
