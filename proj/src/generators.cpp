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

#include "scg/generators.hpp"

#include <algorithm>
#include <random>

#include "scg/error.hpp"

namespace scg {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    long between(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    Rational weight(const WeightRange& range)
    {
        long num = between(0, range.max_numerator);
        long den = between(1, range.max_denominator);
        return frac(num, den);
    }

private:
    std::mt19937_64 rng_;
};

void check_range(const WeightRange& range)
{
    if (range.max_numerator < 0 || range.max_denominator < 1)
        throw ArgumentError("weight range needs max_numerator >= 0 and max_denominator >= 1");
}

void check_size(int n, int m)
{
    if (n < 1 || m < 1)
        throw ArgumentError("n and m must be positive");
}

std::vector<std::vector<Rational>> draw_intrinsic(Draw& d, int n, int m, const WeightRange& range)
{
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(m));
    for (auto& row : w)
        for (auto& x : row)
            x = d.weight(range);
    return w;
}

} // namespace

Rational sqrt2_approx()
{
    return frac(14142135, 10000000);
}

Game example1(const Rational& r)
{
    if (r <= 0)
        throw ArgumentError("r must be positive");
    std::vector<std::vector<Rational>> w(3, std::vector<Rational>(3));
    for (int p = 0; p < 3; ++p) {
        w[p][p] = sqrt2_approx() * r;
        w[p][(p + 1) % 3] = r;
    }
    std::vector<Edge> edges;
    for (int p = 0; p < 3; ++p)
        edges.push_back({p, (p + 1) % 3, r, Rational(1)});
    return Game(3, std::move(w), std::move(edges));
}

Game prop5(int m, const Rational& r, const Rational& eps)
{
    if (m < 2)
        throw ArgumentError("prop5 needs m >= 2");
    if (r < 1 || eps <= 0)
        throw ArgumentError("prop5 needs r >= 1 and eps > 0");
    std::vector<std::vector<Rational>> w(m, std::vector<Rational>(m));
    w[0][0] = r;
    for (int j = 1; j < m; ++j)
        w[j][j] = 2 * eps;
    std::vector<Edge> edges;
    for (int j = 1; j < m; ++j)
        edges.push_back({0, j, r + eps, r / (r + eps)});
    return Game(m, std::move(w), std::move(edges));
}

Game symmetric_pos_tight(int m, const Rational& r, const Rational& eps)
{
    if (m < 2)
        throw ArgumentError("symmetric_pos_tight needs m >= 2");
    if (r <= 0 || eps <= 0)
        throw ArgumentError("symmetric_pos_tight needs r > 0 and eps > 0");
    std::vector<std::vector<Rational>> w(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i)
        w[i][i] = r + eps;
    std::vector<Edge> edges;
    for (int j = 1; j < m; ++j)
        edges.push_back({0, j, 2 * r, frac(1, 2)});
    return Game(m, std::move(w), std::move(edges));
}

GeneralizedGame triangle_c(const Rational& c)
{
    if (c < 1)
        throw ArgumentError("c must be at least 1");
    const Rational c2 = c * c;
    const Rational c3 = c2 * c;
    const Rational zero(0);
    std::vector<UtilityEntry> entries;
    for (int p = 0; p < 3; ++p) {
        const int next = (p + 1) % 3;
        const int prev = (p + 2) % 3;
        auto add = [&](int t, std::vector<int> others, const Rational& u) {
            others.push_back(p);
            std::sort(others.begin(), others.end());
            entries.push_back({p, (p + t) % 3, std::move(others), u});
        };
        // Home strategy, then the next player's home, then the previous player's.
        add(0, {}, c2);
        add(0, {prev}, c2);
        add(0, {next}, c3);
        add(0, {next, prev}, c3);
        add(1, {}, c);
        add(1, {prev}, c);
        add(1, {next}, c3);
        add(1, {next, prev}, c3);
        add(2, {}, zero);
        add(2, {prev}, zero);
        add(2, {next}, zero);
        add(2, {next, prev}, c);
    }
    return GeneralizedGame(3, 3, entries);
}

Game random_game(int n, int m, std::uint64_t seed, WeightRange range, bool interior_shares)
{
    check_size(n, m);
    check_range(range);
    Draw d(seed);
    auto w = draw_intrinsic(d, n, m, range);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (d.between(0, 1) != 0)
                continue;
            Rational weight = d.weight(range);
            long q = interior_shares ? d.between(2, 5) : d.between(1, 4);
            long t = interior_shares ? d.between(1, q - 1) : d.between(0, q);
            edges.push_back({i, j, std::move(weight), frac(t, q)});
        }
    return Game(m, std::move(w), std::move(edges));
}

Game random_cc(int n, int m, std::uint64_t seed, long max_gamma, WeightRange range)
{
    check_size(n, m);
    check_range(range);
    if (max_gamma < 1)
        throw ArgumentError("max_gamma must be at least 1");
    Draw d(seed);
    std::vector<long> gamma(n);
    for (auto& g : gamma)
        g = d.between(1, max_gamma);
    auto w = draw_intrinsic(d, n, m, range);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (d.between(0, 1) != 0)
                continue;
            edges.push_back({i, j, d.weight(range), frac(gamma[i], gamma[i] + gamma[j])});
        }
    return Game(m, std::move(w), std::move(edges));
}

Game random_symmetric(int n, int m, std::uint64_t seed, WeightRange range)
{
    check_size(n, m);
    check_range(range);
    Draw d(seed);
    auto w = draw_intrinsic(d, n, m, range);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (d.between(0, 1) != 0)
                continue;
            edges.push_back({i, j, d.weight(range), frac(1, 2)});
        }
    return Game(m, std::move(w), std::move(edges));
}

GeneralizedGame random_supermodular(int n, int m, const Rational& r, std::uint64_t seed, WeightRange range)
{
    check_size(n, m);
    check_range(range);
    if (r < 1)
        throw ArgumentError("r must be at least 1");
    if (n > 10)
        throw SizeError("random_supermodular supports at most 10 players");
    Draw d(seed);
    auto w = draw_intrinsic(d, n, m, range);
    // g[i][k][j]: what i gains at k from partner j before amplification.
    std::vector<std::vector<std::vector<Rational>>> g(n, std::vector<std::vector<Rational>>(m, std::vector<Rational>(n)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < n; ++j)
                if (j != i)
                    g[i][k][j] = d.weight(range);

    std::vector<UtilityEntry> entries;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k)
            for (Subset set = 0; set < (Subset{1} << n); ++set) {
                if (!(set & (Subset{1} << i)))
                    continue;
                std::vector<int> members = members_of(set);
                if (m == 1 && static_cast<int>(members.size()) != n)
                    continue;
                Rational additive;
                for (int j : members)
                    if (j != i)
                        additive += g[i][k][j];
                const Rational lambda = members.size() <= 2 ? Rational(1) : r;
                entries.push_back({i, k, std::move(members), w[i][k] + lambda * additive});
            }
    return GeneralizedGame(n, m, entries, Extended(r));
}

OmegaGame random_omega(int n, int m, const Rational& omega, std::uint64_t seed)
{
    check_size(n, m);
    Draw d(seed);
    std::vector<Rational> a(n), b(n);
    for (auto& x : a)
        x = d.between(1, 5);
    for (auto& x : b)
        x = d.between(1, 5);
    std::vector<std::vector<PairLabel>> labels(n, std::vector<PairLabel>(n, PairLabel::zero));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long roll = d.between(0, 5);
            PairLabel l = roll == 0 ? PairLabel::conflict : (roll <= 2 ? PairLabel::one : PairLabel::zero);
            labels[i][j] = labels[j][i] = l;
        }
    return OmegaGame(m, std::move(a), std::move(b), std::move(labels), omega);
}

HypergraphGame random_hypergraph_cc(int n, int m, std::uint64_t seed, int extra_edges, long max_gamma)
{
    check_size(n, m);
    if (max_gamma < 1 || extra_edges < 0)
        throw ArgumentError("max_gamma must be at least 1 and extra_edges nonnegative");
    Draw d(seed);
    std::vector<long> gamma(n);
    for (auto& x : gamma)
        x = d.between(1, max_gamma);
    std::vector<Hyperedge> edges;
    const WeightRange range;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) {
            Rational w = d.weight(range);
            if (w != 0)
                edges.push_back({{i}, {k}, std::move(w), {Rational(1)}});
        }
    for (int e = 0; e < extra_edges && n >= 2; ++e) {
        const int size = static_cast<int>(std::min<long>(n, d.between(2, 3)));
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i)
            pool[i] = i;
        // Partial Fisher-Yates for the member set.
        for (int x = 0; x < size; ++x)
            std::swap(pool[x], pool[d.between(x, n - 1)]);
        std::vector<int> members(pool.begin(), pool.begin() + size);
        std::sort(members.begin(), members.end());
        std::vector<int> anchors;
        if (d.between(0, 2) == 0)
            anchors.push_back(static_cast<int>(d.between(0, m - 1)));
        long total = 0;
        for (int p : members)
            total += gamma[p];
        std::vector<Rational> shares;
        for (int p : members)
            shares.push_back(frac(gamma[p], total));
        Rational w = d.weight(range);
        edges.push_back({std::move(members), std::move(anchors), std::move(w), std::move(shares)});
    }
    return HypergraphGame(n, m, std::move(edges));
}

} // namespace scg
