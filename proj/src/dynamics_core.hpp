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

// Best-response and one-shot machinery over an abstract utility oracle
// u(profile, player, strategy) -> Rational, shared by the additive and the
// set-function game models so both run the identical move sequence.

#include <cstddef>

#include "scg/dynamics.hpp"

namespace scg::detail {

template <class Utility>
BestResponse best_response_with(int strategies, const Profile& s, int i, Utility&& u)
{
    BestResponse br;
    br.current = u(s, i, s[i]);
    br.strategy = s[i];
    br.utility = br.current;
    for (int k = 0; k < strategies; ++k) {
        if (k == s[i])
            continue;
        Rational v = u(s, i, k);
        if (v > br.utility) {
            br.utility = std::move(v);
            br.strategy = k;
        }
    }
    br.factor = ratio(br.utility, br.current);
    return br;
}

template <class Utility>
OneShotResult one_shot_with(int players, int strategies, int k0, const Threshold& gate, Utility&& u)
{
    OneShotResult out;
    Profile s(players, k0);
    for (;;) {
        bool moved = false;
        for (int i = 0; i < players; ++i) {
            if (s[i] != k0)
                continue;
            BestResponse br = best_response_with(strategies, s, i, u);
            if (br.strategy == k0 || !gate.admits(br.utility, br.current))
                continue;
            out.trace.moves.push_back({i, k0, br.strategy, br.current, br.utility});
            s[i] = br.strategy;
            moved = true;
            break;
        }
        if (!moved)
            break;
    }
    out.trace.terminal = s;
    out.trace.reason = Termination::converged;
    out.profile = std::move(s);
    return out;
}

} // namespace scg::detail

#include <set>

namespace scg::detail {

template <class Utility>
DynamicsTrace run_dynamics_with(int players, int strategies, Profile s, const Threshold& gate,
                                std::size_t step_cap, Utility&& u)
{
    DynamicsTrace trace;
    std::set<Profile> visited{s};
    for (;;) {
        int mover = -1;
        BestResponse br;
        for (int i = 0; i < players; ++i) {
            br = best_response_with(strategies, s, i, u);
            if (br.strategy != s[i] && gate.admits(br.utility, br.current)) {
                mover = i;
                break;
            }
        }
        if (mover < 0) {
            trace.reason = Termination::converged;
            break;
        }
        if (trace.moves.size() >= step_cap) {
            trace.reason = Termination::step_cap;
            break;
        }
        trace.moves.push_back({mover, s[mover], br.strategy, br.current, br.utility});
        s[mover] = br.strategy;
        if (!visited.insert(s).second) {
            trace.reason = Termination::cycle_detected;
            break;
        }
    }
    trace.terminal = std::move(s);
    return trace;
}

inline std::size_t default_step_cap(int players, int strategies)
{
    constexpr std::size_t limit = 100'000'000;
    std::size_t count = profile_count(players, strategies, limit);
    if (count > limit / static_cast<std::size_t>(players))
        return limit;
    return count * static_cast<std::size_t>(players);
}

} // namespace scg::detail
