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

#include "scg/dynamics.hpp"

#include <sstream>

#include "dynamics_core.hpp"
#include "json_util.hpp"
#include "scg/error.hpp"

namespace scg {

namespace {

auto game_utility(const Game& game)
{
    return [&game](const Profile& s, int i, int k) { return deviation_utility(game, s, i, k); };
}

void require_strategies(const Game& game, int m, const char* what)
{
    if (game.strategies() != m)
        throw ArgumentError(std::string(what) + " requires m = " + std::to_string(m) + ", got " +
                            std::to_string(game.strategies()));
}

// Algorithm-1 stabilization restricted to the players currently in {a, b}.
void stabilize_pair(const Game& game, Profile& s, int a, int b)
{
    auto sweep = [&](int from, int to) {
        for (;;) {
            bool moved = false;
            for (int i = 0; i < game.players(); ++i) {
                if (s[i] != from)
                    continue;
                if (deviation_utility(game, s, i, to) > deviation_utility(game, s, i, from)) {
                    s[i] = to;
                    moved = true;
                    break;
                }
            }
            if (!moved)
                return;
        }
    };
    sweep(a, b);
    sweep(b, a);
}

} // namespace

Threshold Threshold::exact(Rational alpha)
{
    if (alpha < 1)
        throw ArgumentError("threshold alpha must be at least 1, got " + to_string(alpha));
    Threshold t;
    t.alpha_ = std::move(alpha);
    return t;
}

Threshold Threshold::sqrt2()
{
    Threshold t;
    t.sqrt2_ = true;
    return t;
}

bool Threshold::admits(const Rational& u_new, const Rational& u_old) const
{
    if (!(u_new > u_old))
        return false;
    if (sqrt2_)
        return geq_sqrt2_times(u_new, u_old);
    return u_new >= alpha_ * u_old;
}

std::string Threshold::describe() const
{
    return sqrt2_ ? "sqrt2" : to_string(alpha_);
}

std::string to_string(Termination t)
{
    switch (t) {
    case Termination::converged:
        return "converged";
    case Termination::cycle_detected:
        return "cycle-detected";
    case Termination::step_cap:
        return "step-cap";
    }
    return "unknown";
}

BestResponse best_response(const Game& game, const Profile& s, int i)
{
    game.validate_profile(s);
    if (i < 0 || i >= game.players())
        throw ArgumentError("player index out of range");
    return detail::best_response_with(game.strategies(), s, i, game_utility(game));
}

DynamicsTrace run_dynamics(const Game& game, Profile start, const MoveRule& rule,
                           std::optional<std::size_t> step_cap)
{
    game.validate_profile(start);
    std::size_t cap = step_cap.value_or(detail::default_step_cap(game.players(), game.strategies()));
    if (cap < 1)
        throw ArgumentError("step cap must be at least 1");
    return detail::run_dynamics_with(game.players(), game.strategies(), std::move(start), rule.threshold,
                                     cap, game_utility(game));
}

Profile algorithm1_two(const Game& game, Profile start)
{
    require_strategies(game, 2, "algorithm1_two");
    game.validate_profile(start);
    stabilize_pair(game, start, 0, 1);
    return start;
}

std::vector<int> maximal_improving_coalition(const Game& game, const Profile& s, int from, int to)
{
    game.validate_profile(s);
    std::vector<int> members = coalition(s, from);
    std::vector<char> in_group(game.players(), 0);
    for (int i : members)
        in_group[i] = 1;

    for (;;) {
        std::vector<int> kept;
        for (int i : members) {
            Rational joined = game.intrinsic(i, to);
            for (const auto& nb : game.neighbors(i))
                if (s[nb.player] == to || in_group[nb.player])
                    joined += nb.gain;
            if (joined > utility(game, s, i))
                kept.push_back(i);
        }
        if (kept.size() == members.size())
            return members;
        for (int i : members)
            in_group[i] = 0;
        for (int i : kept)
            in_group[i] = 1;
        members = std::move(kept);
    }
}

Profile strong_two(const Game& game)
{
    require_strategies(game, 2, "strong_two");
    Profile s = all_at(game.players(), 0);
    for (;;) {
        std::vector<int> group = maximal_improving_coalition(game, s, 0, 1);
        if (group.empty())
            return s;
        for (int i : group)
            s[i] = 1;
    }
}

Profile sqrt2_three(const Game& game)
{
    require_strategies(game, 3, "sqrt2_three");
    Profile s = all_at(game.players(), 0);
    stabilize_pair(game, s, 0, 1);
    for (;;) {
        bool moved = false;
        for (int i = 0; i < game.players(); ++i) {
            if (s[i] == 2)
                continue;
            Rational current = utility(game, s, i);
            Rational third = deviation_utility(game, s, i, 2);
            if (third > current && geq_sqrt2_times(third, current)) {
                s[i] = 2;
                stabilize_pair(game, s, 0, 1);
                moved = true;
                break;
            }
        }
        if (!moved)
            return s;
    }
}

OneShotResult one_shot_alpha_br(const Game& game, int k0, const Rational& alpha)
{
    if (alpha < 1)
        throw ArgumentError("one-shot requires alpha >= 1, got " + to_string(alpha));
    if (k0 < 0 || k0 >= game.strategies())
        throw ArgumentError("starting strategy out of range");
    return detail::one_shot_with(game.players(), game.strategies(), k0, Threshold::exact(alpha),
                                 game_utility(game));
}

HybridReport hybrid(const Game& game, const Rational& alpha, std::optional<Rational> optimum_welfare)
{
    if (alpha < golden_approx() || alpha > 2)
        throw ArgumentError("hybrid requires alpha in [1618/1000, 2], got " + to_string(alpha));
    if (optimum_welfare && *optimum_welfare < 0)
        throw ArgumentError("optimum welfare must be nonnegative");

    HybridReport r;
    r.alpha = alpha;
    r.complement_alpha = 1 / (alpha - 1);
    r.start_strategy = instance_stats(game).k_star;
    r.first = one_shot_alpha_br(game, r.start_strategy, r.alpha);
    r.second = one_shot_alpha_br(game, r.start_strategy, r.complement_alpha);
    r.first_welfare = welfare(game, r.first.profile).total;
    r.second_welfare = welfare(game, r.second.profile).total;
    if (r.first_welfare >= r.second_welfare) {
        r.chosen = r.first.profile;
        r.chosen_welfare = r.first_welfare;
    } else {
        r.chosen = r.second.profile;
        r.chosen_welfare = r.second_welfare;
    }
    if (optimum_welfare) {
        r.optimum_welfare = optimum_welfare;
        r.rho = *optimum_welfare == 0 ? Rational(1) : Rational(r.chosen_welfare / *optimum_welfare);
    }
    return r;
}

std::string trace_to_jsonl(const DynamicsTrace& trace)
{
    std::string out;
    for (const auto& mv : trace.moves) {
        detail::json line;
        line["player"] = mv.player;
        line["from"] = mv.from + 1;
        line["to"] = mv.to + 1;
        line["old"] = to_string(mv.old_utility);
        line["new"] = to_string(mv.new_utility);
        out += line.dump();
        out += '\n';
    }
    return out;
}

} // namespace scg
