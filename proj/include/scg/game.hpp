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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scg/rational.hpp"

namespace scg {

/// One strategy per player, 0-based internally. Text surfaces print 1-based labels.
using Profile = std::vector<int>;

/// Pairwise relationship. `share_ij` is the fraction of `weight` that player i
/// receives when i and j pick the same strategy; j receives the rest.
struct Edge {
    int i = 0;
    int j = 0;
    Rational weight;
    Rational share_ij;

    Rational share_ji() const { return 1 - share_ij; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// What player `owner` receives from being co-located with `player`.
struct Neighbor {
    int player = 0;
    Rational gain;
    std::size_t edge = 0;
};

/// Social coordination game: intrinsic strategy preferences plus shared
/// coordination gains on weighted pairs. Immutable once constructed.
class Game {
public:
    /// Validates every invariant; throws ArgumentError on violation.
    Game(int strategies, std::vector<std::vector<Rational>> intrinsic, std::vector<Edge> edges);

    int players() const { return static_cast<int>(intrinsic_.size()); }
    int strategies() const { return strategies_; }

    const Rational& intrinsic(int i, int k) const { return intrinsic_[i][k]; }
    const std::vector<std::vector<Rational>>& intrinsic_matrix() const { return intrinsic_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Neighbor> neighbors(int i) const { return adjacency_[i]; }

    /// Throws ArgumentError unless `s` has one in-range strategy per player.
    void validate_profile(const Profile& s) const;

    friend bool operator==(const Game& a, const Game& b)
    {
        return a.strategies_ == b.strategies_ && a.intrinsic_ == b.intrinsic_ && a.edges_ == b.edges_;
    }

private:
    int strategies_;
    std::vector<std::vector<Rational>> intrinsic_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

struct PlayerUtility {
    Rational total;
    Rational intrinsic;
    Rational coordination;
};

/// Per-player utilities with the welfare split u = A + P.
struct UtilityBreakdown {
    std::vector<PlayerUtility> players;
    Rational total;
    Rational intrinsic;
    Rational coordination;
};

struct InstanceStats {
    std::vector<Rational> best;
    Rational intrinsic_total;     // A_T
    Rational coordination_total;  // P_T
    int k_star = 0;
    Extended imbalance;           // maximum relationship imbalance
};

PlayerUtility player_utility(const Game& game, const Profile& s, int i);

/// u_i(k, s_{-i}): utility of player i if she alone switches to k.
Rational deviation_utility(const Game& game, const Profile& s, int i, int k);

inline Rational utility(const Game& game, const Profile& s, int i)
{
    return player_utility(game, s, i).total;
}

UtilityBreakdown welfare(const Game& game, const Profile& s);
Rational intrinsic_welfare(const Game& game, const Profile& s);

InstanceStats instance_stats(const Game& game);

/// X_k(s): players choosing k, ascending.
std::vector<int> coalition(const Profile& s, int k);

Profile all_at(int players, int k);

/// "1,2,3" for the 0-based profile {0,1,2}.
std::string format_profile(const Profile& s);
/// Inverse of format_profile; validated against `strategies`.
Profile parse_profile(const std::string& text, int players, int strategies);

/// m^n, saturating at `cap + 1`.
std::size_t profile_count(int players, int strategies, std::size_t cap);

/// Advances `s` to the next profile in lexicographic order; false after the last.
bool next_profile(Profile& s, int strategies);

} // namespace scg
