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

#include "scg/generalized.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

#include "audit_core.hpp"
#include "dynamics_core.hpp"
#include "scg/error.hpp"
#include "scg/generators.hpp"

namespace scg {

namespace {

constexpr int kMaxSetPlayers = 62;
constexpr std::size_t kPairBudget = 100'000'000;

Subset colocated_set(const Profile& s, int i, int k)
{
    Subset set = Subset{1} << i;
    for (int j = 0; j < static_cast<int>(s.size()); ++j)
        if (j != i && s[j] == k)
            set |= Subset{1} << j;
    return set;
}

std::string describe_set(Subset set)
{
    std::string out = "{";
    for (int j : members_of(set))
        out += (out.size() > 1 ? "," : "") + std::to_string(j);
    return out + "}";
}

void check_profile_shape(const Profile& s, int n, int m)
{
    if (static_cast<int>(s.size()) != n)
        throw ArgumentError("profile has " + std::to_string(s.size()) + " entries, expected " + std::to_string(n));
    for (int v : s)
        if (v < 0 || v >= m)
            throw ArgumentError("strategy out of range in profile");
}

} // namespace

Subset subset_of(const std::vector<int>& players)
{
    Subset set = 0;
    for (int p : players) {
        if (p < 0 || p >= kMaxSetPlayers)
            throw ArgumentError("player index out of range in subset");
        set |= Subset{1} << p;
    }
    return set;
}

std::vector<int> members_of(Subset subset)
{
    std::vector<int> out;
    while (subset != 0) {
        out.push_back(std::countr_zero(subset));
        subset &= subset - 1;
    }
    return out;
}

// ---------------------------------------------------------------------------

GeneralizedGame::GeneralizedGame(int players, int strategies, const std::vector<UtilityEntry>& entries,
                                 std::optional<Extended> declared_r)
    : n_(players), m_(strategies), declared_r_(std::move(declared_r))
{
    if (n_ < 1 || n_ > kMaxSetPlayers)
        throw ArgumentError("generalized games support 1 to 62 players");
    if (m_ < 1)
        throw ArgumentError("at least one strategy required");
    if (declared_r_ && *declared_r_ < Extended(1))
        throw ArgumentError("declared r must be at least 1");
    tables_.resize(static_cast<std::size_t>(n_) * m_);
    for (const auto& e : entries) {
        if (e.player < 0 || e.player >= n_ || e.strategy < 0 || e.strategy >= m_)
            throw ArgumentError("utility entry out of range");
        if (!std::is_sorted(e.subset.begin(), e.subset.end()) ||
            std::adjacent_find(e.subset.begin(), e.subset.end()) != e.subset.end())
            throw ArgumentError("utility subset must be sorted without repeats");
        for (int j : e.subset)
            if (j < 0 || j >= n_)
                throw ArgumentError("utility subset names an unknown player");
        Subset set = subset_of(e.subset);
        if (!(set & (Subset{1} << e.player)))
            throw ArgumentError("utility subset must contain its own player");
        if (e.utility < 0)
            throw ArgumentError("utilities must be nonnegative");
        if (!tables_[index(e.player, e.strategy)].emplace(set, e.utility).second)
            throw ArgumentError("duplicate utility entry for player " + std::to_string(e.player));
    }
}

bool GeneralizedGame::covers(int i, int k, Subset colocated) const
{
    return tables_[index(i, k)].contains(colocated);
}

const Rational& GeneralizedGame::utility(int i, int k, Subset colocated) const
{
    const auto& t = tables_[index(i, k)];
    auto it = t.find(colocated);
    if (it == t.end())
        throw ModelError("no utility given for player " + std::to_string(i) + " at strategy " +
                         std::to_string(k + 1) + " with co-located set " + describe_set(colocated));
    return it->second;
}

const Rational& GeneralizedGame::deviation_utility(const Profile& s, int i, int k) const
{
    return utility(i, k, colocated_set(s, i, k));
}

Rational GeneralizedGame::welfare(const Profile& s) const
{
    Rational total;
    for (int i = 0; i < n_; ++i)
        total += utility(s, i);
    return total;
}

std::vector<UtilityEntry> GeneralizedGame::entries() const
{
    std::vector<UtilityEntry> out;
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < m_; ++k)
            for (const auto& [set, u] : tables_[index(i, k)])
                out.push_back({i, k, members_of(set), u});
    return out;
}

void GeneralizedGame::validate_profile(const Profile& s) const
{
    check_profile_shape(s, n_, m_);
}

Extended supermodularity_degree(const GeneralizedGame& game)
{
    std::size_t pairs = 0;
    for (int i = 0; i < game.players(); ++i)
        for (int k = 0; k < game.strategies(); ++k) {
            std::size_t c = game.table(i, k).size();
            pairs += c * (c + 1) / 2;
        }
    if (pairs > kPairBudget)
        throw SizeError("too many subset pairs for the supermodularity scan");

    Extended r(1);
    for (int i = 0; i < game.players(); ++i)
        for (int k = 0; k < game.strategies(); ++k) {
            const auto& t = game.table(i, k);
            for (auto a = t.begin(); a != t.end(); ++a)
                for (auto b = a; b != t.end(); ++b) {
                    auto joined = t.find(a->first | b->first);
                    if (joined == t.end())
                        continue;
                    Rational den = a->second + b->second;
                    if (den == 0 && joined->second == 0)
                        continue;
                    r = std::max(r, ratio(joined->second, den));
                }
        }
    return r;
}

GeneralizedGame to_generalized(const Game& game)
{
    const int n = game.players();
    const int m = game.strategies();
    if (n > 20 || static_cast<double>(n) * m * static_cast<double>(Subset{1} << (n - 1)) > 1e7)
        throw SizeError("additive table would exceed 10^7 entries");
    std::vector<UtilityEntry> entries;
    for (int i = 0; i < n; ++i) {
        std::vector<int> others;
        for (int j = 0; j < n; ++j)
            if (j != i)
                others.push_back(j);
        const Subset combos = Subset{1} << others.size();
        for (int k = 0; k < m; ++k)
            for (Subset pick = 0; pick < combos; ++pick) {
                Profile s(n, k == 0 ? 1 % m : 0);
                std::vector<int> subset{i};
                s[i] = k;
                for (std::size_t b = 0; b < others.size(); ++b)
                    if (pick & (Subset{1} << b)) {
                        s[others[b]] = k;
                        subset.push_back(others[b]);
                    }
                // Players outside the subset sit elsewhere; with m = 1 only the full set is reachable.
                if (m == 1 && subset.size() != static_cast<std::size_t>(n))
                    continue;
                std::sort(subset.begin(), subset.end());
                entries.push_back({i, k, std::move(subset), deviation_utility(game, s, i, k)});
            }
    }
    return GeneralizedGame(n, m, entries, Extended(1));
}

GeneralizedOneShot one_shot_generalized(const GeneralizedGame& game, int k0)
{
    if (k0 < 0 || k0 >= game.strategies())
        throw ArgumentError("k0 out of range");
    GeneralizedOneShot out;
    out.r = game.declared_r() ? *game.declared_r() : supermodularity_degree(game);
    if (out.r.is_infinite())
        throw UnsupportedError("supermodularity degree is unbounded; no finite gate exists");
    const Rational& r = out.r.value();
    out.alpha_used = golden_threshold_ceiling(r, 1'000'000);
    out.guarantee = std::max(out.alpha_used, Rational(r * (1 + 1 / out.alpha_used)));
    auto u = [&game](const Profile& s, int i, int k) { return game.deviation_utility(s, i, k); };
    OneShotResult run =
        detail::one_shot_with(game.players(), game.strategies(), k0, Threshold::exact(out.alpha_used), u);
    out.profile = std::move(run.profile);
    out.trace = std::move(run.trace);
    return out;
}

DeviationReport verify_generalized(const GeneralizedGame& game, const Profile& s)
{
    game.validate_profile(s);
    auto u = [&game](const Profile& p, int i, int k) { return game.deviation_utility(p, i, k); };
    DeviationReport r;
    for (int i = 0; i < game.players(); ++i) {
        r.players.push_back(detail::best_response_with(game.strategies(), s, i, u));
        if (i == 0 || r.players.back().factor > r.max_factor) {
            r.max_factor = r.players.back().factor;
            r.witness = i;
        }
    }
    return r;
}

Extended generalized_min_max_factor(const GeneralizedGame& game)
{
    require_enumerable(game.players(), game.strategies());
    Profile s(game.players(), 0);
    std::optional<Extended> best;
    do {
        Extended f = verify_generalized(game, s).max_factor;
        if (!best || f < *best)
            best = f;
    } while (next_profile(s, game.strategies()));
    return *best;
}

Extended triangle_nonexistence_check(const Rational& c)
{
    return generalized_min_max_factor(triangle_c(c));
}

DynamicsTrace run_generalized_dynamics(const GeneralizedGame& game, Profile start, const MoveRule& rule,
                                       std::optional<std::size_t> step_cap)
{
    game.validate_profile(start);
    auto u = [&game](const Profile& s, int i, int k) { return game.deviation_utility(s, i, k); };
    return detail::run_dynamics_with(game.players(), game.strategies(), std::move(start), rule.threshold,
                                     step_cap.value_or(detail::default_step_cap(game.players(), game.strategies())),
                                     u);
}

// ---------------------------------------------------------------------------

HypergraphGame::HypergraphGame(int players, int strategies, std::vector<Hyperedge> edges)
    : n_(players), m_(strategies), edges_(std::move(edges)), incident_(players)
{
    if (n_ < 1)
        throw ArgumentError("at least one player required");
    if (m_ < 1)
        throw ArgumentError("at least one strategy required");
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Hyperedge& h = edges_[e];
        const std::string at = "hyperedge " + std::to_string(e) + ": ";
        if (h.players.empty())
            throw ArgumentError(at + "needs at least one player");
        std::set<int> seen;
        for (int p : h.players)
            if (p < 0 || p >= n_ || !seen.insert(p).second)
                throw ArgumentError(at + "bad or repeated player");
        for (int k : h.anchors)
            if (k < 0 || k >= m_)
                throw ArgumentError(at + "anchor strategy out of range");
        if (h.weight < 0)
            throw ArgumentError(at + "negative weight");
        if (h.shares.size() != h.players.size())
            throw ArgumentError(at + "one share per player required");
        Rational sum;
        for (const auto& x : h.shares) {
            if (x < 0)
                throw ArgumentError(at + "negative share");
            sum += x;
        }
        if (sum != 1)
            throw ArgumentError(at + "shares must sum to 1");
        for (int p : h.players)
            incident_[p].push_back(e);
    }
}

const Rational& HypergraphGame::share(std::size_t e, int i) const
{
    static const Rational zero(0);
    const Hyperedge& h = edges_[e];
    for (std::size_t x = 0; x < h.players.size(); ++x)
        if (h.players[x] == i)
            return h.shares[x];
    return zero;
}

Rational HypergraphGame::deviation_utility(const Profile& s, int i, int k) const
{
    Rational u;
    for (std::size_t e : incident_[i]) {
        const Hyperedge& h = edges_[e];
        if (h.weight == 0)
            continue;
        bool pays = std::all_of(h.anchors.begin(), h.anchors.end(), [&](int a) { return a == k; }) &&
                    std::all_of(h.players.begin(), h.players.end(), [&](int p) { return p == i || s[p] == k; });
        if (pays)
            u += share(e, i) * h.weight;
    }
    return u;
}

Rational HypergraphGame::welfare(const Profile& s) const
{
    Rational total;
    for (int i = 0; i < n_; ++i)
        total += utility(s, i);
    return total;
}

void HypergraphGame::validate_profile(const Profile& s) const
{
    check_profile_shape(s, n_, m_);
}

HypergraphGame to_hypergraph(const Game& game)
{
    std::vector<Hyperedge> edges;
    for (int i = 0; i < game.players(); ++i)
        for (int k = 0; k < game.strategies(); ++k)
            if (game.intrinsic(i, k) != 0)
                edges.push_back({{i}, {k}, game.intrinsic(i, k), {Rational(1)}});
    for (const Edge& e : game.edges())
        edges.push_back({{e.i, e.j}, {}, e.weight, {e.share_ij, e.share_ji()}});
    return HypergraphGame(game.players(), game.strategies(), std::move(edges));
}

namespace {

bool couples_players(const Hyperedge& h)
{
    return h.weight > 0 && h.players.size() > 1;
}

} // namespace

CcResult hypergraph_cc_recover(const HypergraphGame& game)
{
    const int n = game.players();
    const auto& edges = game.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!couples_players(edges[e]))
            continue;
        for (const auto& x : edges[e].shares)
            if (x == 0)
                return {std::nullopt, CcFailure{e, "zero share for a player on a positive-weight edge"}};
    }

    PotentialCertificate cert;
    cert.gamma.assign(n, Rational(0));
    cert.component.assign(n, -1);
    for (int root = 0; root < n; ++root) {
        if (cert.component[root] >= 0)
            continue;
        const int c = static_cast<int>(cert.constrained.size());
        cert.constrained.push_back(false);
        cert.component[root] = c;
        cert.gamma[root] = 1;
        std::queue<int> todo;
        todo.push(root);
        while (!todo.empty()) {
            int p = todo.front();
            todo.pop();
            for (std::size_t e : game.incident(p)) {
                const Hyperedge& h = edges[e];
                if (!couples_players(h))
                    continue;
                cert.constrained[c] = true;
                const Rational& mine = game.share(e, p);
                for (std::size_t x = 0; x < h.players.size(); ++x) {
                    int q = h.players[x];
                    if (cert.component[q] >= 0)
                        continue;
                    cert.component[q] = c;
                    cert.gamma[q] = cert.gamma[p] * h.shares[x] / mine;
                    todo.push(q);
                }
            }
        }
    }

    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Hyperedge& h = edges[e];
        if (h.weight <= 0)
            continue;
        Rational sum;
        for (int p : h.players)
            sum += cert.gamma[p];
        for (std::size_t x = 0; x < h.players.size(); ++x) {
            Rational expected = cert.gamma[h.players[x]] / sum;
            if (expected != h.shares[x])
                return {std::nullopt, CcFailure{e, "inconsistent shares: player " + std::to_string(h.players[x]) +
                                                       " holds " + to_string(h.shares[x]) + " but gamma implies " +
                                                       to_string(expected)}};
        }
    }

    std::vector<std::optional<Rational>> smallest(cert.constrained.size());
    for (int i = 0; i < n; ++i) {
        auto& lo = smallest[cert.component[i]];
        if (!lo || cert.gamma[i] < *lo)
            lo = cert.gamma[i];
    }
    for (int i = 0; i < n; ++i)
        cert.gamma[i] /= *smallest[cert.component[i]];
    return {std::move(cert), std::nullopt};
}

namespace {

void check_hyper_certificate(const HypergraphGame& game, const PotentialCertificate& cert)
{
    if (static_cast<int>(cert.gamma.size()) != game.players())
        throw ArgumentError("certificate must carry one gamma per player");
    for (const Hyperedge& h : game.edges())
        if (h.weight > 0)
            for (int p : h.players)
                if (cert.gamma[p] <= 0)
                    throw ArgumentError("certificate gamma must be positive for player " + std::to_string(p));
}

Rational edge_term(const Hyperedge& h, const PotentialCertificate& cert)
{
    Rational sum;
    for (int p : h.players)
        sum += cert.gamma[p];
    return h.weight / sum;
}

bool edge_pays(const Hyperedge& h, const Profile& s, int i, int k)
{
    return std::all_of(h.anchors.begin(), h.anchors.end(), [&](int a) { return a == k; }) &&
           std::all_of(h.players.begin(), h.players.end(), [&](int p) { return (p == i ? k : s[p]) == k; });
}

} // namespace

Rational hypergraph_potential(const HypergraphGame& game, const Profile& s, const PotentialCertificate& cert)
{
    game.validate_profile(s);
    check_hyper_certificate(game, cert);
    Rational phi;
    for (const Hyperedge& h : game.edges())
        if (h.weight > 0 && edge_pays(h, s, h.players.front(), s[h.players.front()]))
            phi += edge_term(h, cert);
    return phi;
}

namespace {

auto hyper_deltas(const HypergraphGame& game, const PotentialCertificate& cert)
{
    auto du = [&game](const Profile& s, int i, int k) {
        return Rational(game.deviation_utility(s, i, k) - game.utility(s, i));
    };
    auto dp = [&game, &cert](const Profile& s, int i, int k) {
        Rational d;
        if (k == s[i])
            return d;
        for (std::size_t e : game.incident(i)) {
            const Hyperedge& h = game.edges()[e];
            if (h.weight <= 0)
                continue;
            if (edge_pays(h, s, i, k))
                d += edge_term(h, cert);
            else if (edge_pays(h, s, i, s[i]))
                d -= edge_term(h, cert);
        }
        return d;
    };
    return std::pair{du, dp};
}

} // namespace

AuditReport hypergraph_ordinal_audit(const HypergraphGame& game, const PotentialCertificate& cert,
                                     std::size_t trials, std::uint64_t seed)
{
    check_hyper_certificate(game, cert);
    auto [du, dp] = hyper_deltas(game, cert);
    return detail::audit_sampled(game.players(), game.strategies(), trials, seed, du, dp);
}

AuditReport hypergraph_exhaustive_audit(const HypergraphGame& game, const PotentialCertificate& cert)
{
    check_hyper_certificate(game, cert);
    auto [du, dp] = hyper_deltas(game, cert);
    return detail::audit_exhaustive(game.players(), game.strategies(), du, dp);
}

DynamicsTrace run_hypergraph_dynamics(const HypergraphGame& game, Profile start, const MoveRule& rule,
                                      std::optional<std::size_t> step_cap)
{
    game.validate_profile(start);
    auto u = [&game](const Profile& s, int i, int k) { return game.deviation_utility(s, i, k); };
    return detail::run_dynamics_with(game.players(), game.strategies(), std::move(start), rule.threshold,
                                     step_cap.value_or(detail::default_step_cap(game.players(), game.strategies())),
                                     u);
}

// ---------------------------------------------------------------------------

std::string to_string(PairLabel label)
{
    switch (label) {
    case PairLabel::zero:
        return "zero";
    case PairLabel::one:
        return "one";
    case PairLabel::conflict:
        return "conflict";
    }
    return "zero";
}

OmegaGame::OmegaGame(int strategies, std::vector<Rational> a, std::vector<Rational> b,
                     std::vector<std::vector<PairLabel>> labels, Rational omega)
    : m_(strategies), a_(std::move(a)), b_(std::move(b)), labels_(std::move(labels)), omega_(std::move(omega))
{
    const std::size_t n = a_.size();
    if (n == 0)
        throw ArgumentError("at least one player required");
    if (m_ < 1)
        throw ArgumentError("at least one strategy required");
    if (b_.size() != n || labels_.size() != n)
        throw ArgumentError("a, b and labels must have one entry per player");
    for (std::size_t i = 0; i < n; ++i) {
        if (a_[i] <= 0 || b_[i] <= 0)
            throw ArgumentError("a_i and b_i must be positive");
        if (labels_[i].size() != n)
            throw ArgumentError("labels must be an n x n matrix");
        for (std::size_t j = 0; j < i; ++j)
            if (labels_[i][j] != labels_[j][i])
                throw ArgumentError("labels must be symmetric");
    }
    if (omega_ < frac(1, 2) || omega_ > 1)
        throw ArgumentError("omega must lie in [1/2, 1]");
}

bool OmegaGame::feasible(const Profile& s) const
{
    const int n = players();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s[i] == s[j] && labels_[i][j] == PairLabel::conflict)
                return false;
    return true;
}

Rational OmegaGame::utility(const Profile& s, int i) const
{
    Rational full, partial;
    for (int j = 0; j < players(); ++j) {
        if (j == i || s[j] != s[i])
            continue;
        switch (labels_[i][j]) {
        case PairLabel::one:
            full += b_[j];
            break;
        case PairLabel::zero:
            partial += b_[j];
            break;
        case PairLabel::conflict:
            throw ArgumentError("utility is undefined in a state that co-locates a conflict pair");
        }
    }
    return a_[i] * (full + omega_ * partial);
}

void OmegaGame::validate_profile(const Profile& s) const
{
    check_profile_shape(s, players(), m_);
}

PotentialVector potential_vector(const OmegaGame& game, const Profile& s)
{
    game.validate_profile(s);
    PotentialVector pi(game.strategies());
    for (int i = 0; i < game.players(); ++i)
        pi[s[i]] += game.b(i);
    return pi;
}

std::strong_ordering lex_compare(const PotentialVector& x, const PotentialVector& y)
{
    if (x.size() != y.size())
        throw ArgumentError("potential vectors differ in length");
    PotentialVector a = x, b = y;
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < b[k])
            return std::strong_ordering::less;
        if (a[k] > b[k])
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

LexResult lex_strong_eq(const OmegaGame& game)
{
    require_enumerable(game.players(), game.strategies());
    LexResult best;
    Profile s(game.players(), 0);
    do {
        if (!game.feasible(s))
            continue;
        ++best.feasible_states;
        PotentialVector pi = potential_vector(game, s);
        if (best.feasible_states == 1 || lex_compare(pi, best.potential) > 0) {
            best.profile = s;
            best.potential = std::move(pi);
        }
    } while (next_profile(s, game.strategies()));
    if (best.feasible_states == 0)
        throw ModelError("every state co-locates a conflict pair");
    return best;
}

StrongDeviationReport verify_omega_strong(const OmegaGame& game, const Profile& s, const Rational& factor)
{
    game.validate_profile(s);
    if (factor < 1)
        throw ArgumentError("factor must be at least 1");
    if (!game.feasible(s))
        throw ArgumentError("profile co-locates a conflict pair");
    require_enumerable(game.players(), game.strategies());

    const int n = game.players();
    std::vector<Rational> current(n);
    for (int i = 0; i < n; ++i)
        current[i] = game.utility(s, i);

    StrongDeviationReport report;
    Profile alt(n, 0);
    do {
        if (alt == s || !game.feasible(alt))
            continue;
        ++report.checked;
        bool violated = true;
        for (int i = 0; i < n && violated; ++i)
            if (alt[i] != s[i] && !(game.utility(alt, i) > factor * current[i]))
                violated = false;
        if (!violated)
            continue;
        report.stable = false;
        report.alternative = alt;
        for (int i = 0; i < n; ++i)
            if (alt[i] != s[i]) {
                report.coalition.push_back(i);
                report.factors.push_back(ratio(game.utility(alt, i), current[i]));
            }
        return report;
    } while (next_profile(alt, game.strategies()));
    return report;
}

} // namespace scg
