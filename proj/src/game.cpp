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

#include "scg/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "scg/error.hpp"

namespace scg {

Game::Game(int strategies, std::vector<std::vector<Rational>> intrinsic, std::vector<Edge> edges)
    : strategies_(strategies), intrinsic_(std::move(intrinsic)), edges_(std::move(edges))
{
    if (strategies_ < 1)
        throw ArgumentError("strategy count must be at least 1");
    if (intrinsic_.empty())
        throw ArgumentError("game needs at least one player");
    const int n = players();
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(intrinsic_[i].size()) != strategies_)
            throw ArgumentError("intrinsic row " + std::to_string(i) + " has wrong length");
        for (const auto& w : intrinsic_[i])
            if (w < 0)
                throw ArgumentError("negative intrinsic preference for player " + std::to_string(i));
    }

    adjacency_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (edge.i < 0 || edge.i >= n || edge.j < 0 || edge.j >= n)
            throw ArgumentError("edge endpoint out of range");
        if (edge.i == edge.j)
            throw ArgumentError("self edge on player " + std::to_string(edge.i));
        if (!seen.insert(std::minmax(edge.i, edge.j)).second)
            throw ArgumentError("duplicate edge " + std::to_string(edge.i) + "-" + std::to_string(edge.j));
        if (edge.weight < 0)
            throw ArgumentError("negative edge weight");
        if (edge.share_ij < 0 || edge.share_ij > 1)
            throw ArgumentError("share out of range");
        adjacency_[edge.i].push_back({edge.j, edge.share_ij * edge.weight, e});
        adjacency_[edge.j].push_back({edge.i, edge.share_ji() * edge.weight, e});
    }
}

void Game::validate_profile(const Profile& s) const
{
    if (static_cast<int>(s.size()) != players())
        throw ArgumentError("profile length " + std::to_string(s.size()) + " != player count " +
                            std::to_string(players()));
    for (int k : s)
        if (k < 0 || k >= strategies_)
            throw ArgumentError("profile entry out of strategy range");
}

PlayerUtility player_utility(const Game& game, const Profile& s, int i)
{
    if (i < 0 || i >= game.players())
        throw ArgumentError("player index out of range");
    game.validate_profile(s);
    PlayerUtility out;
    out.intrinsic = game.intrinsic(i, s[i]);
    for (const auto& nb : game.neighbors(i))
        if (s[nb.player] == s[i])
            out.coordination += nb.gain;
    out.total = out.intrinsic + out.coordination;
    return out;
}

Rational deviation_utility(const Game& game, const Profile& s, int i, int k)
{
    if (k < 0 || k >= game.strategies())
        throw ArgumentError("strategy out of range");
    Rational u = game.intrinsic(i, k);
    for (const auto& nb : game.neighbors(i))
        if (nb.player != i && s[nb.player] == k)
            u += nb.gain;
    return u;
}

UtilityBreakdown welfare(const Game& game, const Profile& s)
{
    game.validate_profile(s);
    UtilityBreakdown out;
    out.players.reserve(game.players());
    for (int i = 0; i < game.players(); ++i) {
        out.players.push_back(player_utility(game, s, i));
        out.intrinsic += out.players.back().intrinsic;
        out.total += out.players.back().total;
    }
    for (const auto& e : game.edges())
        if (s[e.i] == s[e.j])
            out.coordination += e.weight;
    return out;
}

Rational intrinsic_welfare(const Game& game, const Profile& s)
{
    game.validate_profile(s);
    Rational a;
    for (int i = 0; i < game.players(); ++i)
        a += game.intrinsic(i, s[i]);
    return a;
}

InstanceStats instance_stats(const Game& game)
{
    InstanceStats st;
    const int n = game.players();
    const int m = game.strategies();
    std::vector<Rational> column(m);
    for (int i = 0; i < n; ++i) {
        Rational b = game.intrinsic(i, 0);
        for (int k = 0; k < m; ++k) {
            b = std::max(b, game.intrinsic(i, k));
            column[k] += game.intrinsic(i, k);
        }
        st.intrinsic_total += b;
        st.best.push_back(std::move(b));
    }
    for (int k = 1; k < m; ++k)
        if (column[k] > column[st.k_star])
            st.k_star = k;

    st.imbalance = Extended(Rational(1));
    for (const auto& e : game.edges()) {
        st.coordination_total += e.weight;
        if (e.weight <= 0)
            continue;
        const Rational a = e.share_ij;
        const Rational b = e.share_ji();
        Extended r = std::max(ratio(a, b), ratio(b, a));
        if (r > st.imbalance)
            st.imbalance = r;
    }
    return st;
}

std::vector<int> coalition(const Profile& s, int k)
{
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] == k)
            out.push_back(i);
    return out;
}

Profile all_at(int players, int k)
{
    return Profile(players, k);
}

std::string format_profile(const Profile& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s[i] + 1);
    }
    return out;
}

Profile parse_profile(const std::string& text, int players, int strategies)
{
    Profile s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto last = item.find_last_not_of(" \t");
        item.erase(last == std::string::npos ? 0 : last + 1);
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw ArgumentError("bad profile entry '" + item + "'");
            s.push_back(v - 1);
        } catch (const std::logic_error&) {
            throw ArgumentError("bad profile entry '" + item + "'");
        }
    }
    if (static_cast<int>(s.size()) != players)
        throw ArgumentError("profile has " + std::to_string(s.size()) + " entries, expected " +
                            std::to_string(players));
    for (int k : s)
        if (k < 0 || k >= strategies)
            throw ArgumentError("profile entry out of range 1.." + std::to_string(strategies));
    return s;
}

std::size_t profile_count(int players, int strategies, std::size_t cap)
{
    std::size_t total = 1;
    for (int i = 0; i < players; ++i) {
        if (total > cap / static_cast<std::size_t>(strategies))
            return cap + 1;
        total *= static_cast<std::size_t>(strategies);
    }
    return total;
}

bool next_profile(Profile& s, int strategies)
{
    for (int i = static_cast<int>(s.size()) - 1; i >= 0; --i) {
        if (++s[i] < strategies)
            return true;
        s[i] = 0;
    }
    return false;
}

} // namespace scg
