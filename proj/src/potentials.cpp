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

#include "scg/potentials.hpp"

#include <algorithm>
#include <queue>

#include "audit_core.hpp"
#include "json_util.hpp"
#include "scg/error.hpp"

namespace scg {

namespace {

// Components of the positive-weight graph; constrained[c] marks components with an edge.
void label_components(const Game& game, PotentialCertificate& cert)
{
    const int n = game.players();
    cert.component.assign(n, -1);
    cert.constrained.clear();
    for (int root = 0; root < n; ++root) {
        if (cert.component[root] >= 0)
            continue;
        const int c = static_cast<int>(cert.constrained.size());
        cert.constrained.push_back(false);
        std::queue<int> todo;
        todo.push(root);
        cert.component[root] = c;
        while (!todo.empty()) {
            int p = todo.front();
            todo.pop();
            for (const Neighbor& nb : game.neighbors(p)) {
                if (game.edges()[nb.edge].weight <= 0)
                    continue;
                cert.constrained[c] = true;
                if (cert.component[nb.player] < 0) {
                    cert.component[nb.player] = c;
                    todo.push(nb.player);
                }
            }
        }
    }
}

} // namespace

CcResult cc_recover(const Game& game)
{
    const int n = game.players();
    const auto& edges = game.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].weight > 0 && (edges[e].share_ij == 0 || edges[e].share_ij == 1))
            return {std::nullopt, CcFailure{e, "share " + to_string(edges[e].share_ij) +
                                                   " on a positive-weight edge has no positive gamma pair"}};

    PotentialCertificate cert;
    label_components(game, cert);
    cert.gamma.assign(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        cert.gamma[root] = 1;
        std::queue<int> todo;
        todo.push(root);
        while (!todo.empty()) {
            int p = todo.front();
            todo.pop();
            for (const Neighbor& nb : game.neighbors(p)) {
                const Edge& e = edges[nb.edge];
                if (e.weight <= 0 || seen[nb.player])
                    continue;
                // gamma_j / gamma_i = share_ji / share_ij
                const Rational& mine = e.i == p ? e.share_ij : e.share_ji();
                const Rational theirs = e.i == p ? e.share_ji() : e.share_ij;
                cert.gamma[nb.player] = cert.gamma[p] * theirs / mine;
                seen[nb.player] = true;
                todo.push(nb.player);
            }
        }
    }

    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& edge = edges[e];
        if (edge.weight <= 0)
            continue;
        Rational expected = cert.gamma[edge.i] / (cert.gamma[edge.i] + cert.gamma[edge.j]);
        if (expected != edge.share_ij)
            return {std::nullopt, CcFailure{e, "inconsistent cycle: share_ij is " + to_string(edge.share_ij) +
                                                   " but the spanning tree implies " + to_string(expected)}};
    }

    std::vector<Rational> smallest(cert.constrained.size());
    std::vector<bool> have(cert.constrained.size(), false);
    for (int i = 0; i < n; ++i) {
        int c = cert.component[i];
        if (!have[c] || cert.gamma[i] < smallest[c]) {
            smallest[c] = cert.gamma[i];
            have[c] = true;
        }
    }
    for (int i = 0; i < n; ++i)
        cert.gamma[i] /= smallest[cert.component[i]];
    return {std::move(cert), std::nullopt};
}

namespace {

void check_certificate(const Game& game, const PotentialCertificate& cert)
{
    if (static_cast<int>(cert.gamma.size()) != game.players())
        throw ArgumentError("certificate must carry one gamma per player");
    for (const Edge& e : game.edges())
        if (e.weight > 0 && (cert.gamma[e.i] <= 0 || cert.gamma[e.j] <= 0))
            throw ArgumentError("certificate gamma must be positive for player " +
                                std::to_string(cert.gamma[e.i] <= 0 ? e.i : e.j));
}

Rational endpoint_sum(const PotentialCertificate& cert, const Edge& e)
{
    return cert.gamma[e.i] + cert.gamma[e.j];
}

} // namespace

Rational potential_value(const Game& game, const Profile& s, const PotentialCertificate& cert)
{
    game.validate_profile(s);
    check_certificate(game, cert);
    Rational phi;
    for (int i = 0; i < game.players(); ++i) {
        const Rational& w = game.intrinsic(i, s[i]);
        if (w != 0)
            phi += w / cert.gamma[i];
    }
    for (const Edge& e : game.edges())
        if (e.weight > 0 && s[e.i] == s[e.j])
            phi += e.weight / endpoint_sum(cert, e);
    return phi;
}

Rational potential_delta(const Game& game, const Profile& s, int i, int k, const PotentialCertificate& cert)
{
    const int from = s[i];
    if (k == from)
        return Rational(0);
    Rational delta;
    const Rational& a = game.intrinsic(i, from);
    const Rational& b = game.intrinsic(i, k);
    if (a != b)
        delta += (b - a) / cert.gamma[i];
    for (const Neighbor& nb : game.neighbors(i)) {
        const Edge& e = game.edges()[nb.edge];
        if (e.weight <= 0)
            continue;
        if (s[nb.player] == k)
            delta += e.weight / endpoint_sum(cert, e);
        else if (s[nb.player] == from)
            delta -= e.weight / endpoint_sum(cert, e);
    }
    return delta;
}

namespace {

auto utility_delta(const Game& game)
{
    return [&game](const Profile& s, int i, int k) {
        return Rational(deviation_utility(game, s, i, k) - deviation_utility(game, s, i, s[i]));
    };
}

auto phi_delta(const Game& game, const PotentialCertificate& cert)
{
    return [&game, &cert](const Profile& s, int i, int k) { return potential_delta(game, s, i, k, cert); };
}

} // namespace

AuditReport ordinal_audit(const Game& game, const PotentialCertificate& cert, std::size_t trials,
                          std::uint64_t seed)
{
    check_certificate(game, cert);
    return detail::audit_sampled(game.players(), game.strategies(), trials, seed, utility_delta(game),
                                 phi_delta(game, cert));
}

AuditReport exhaustive_audit(const Game& game, const PotentialCertificate& cert)
{
    check_certificate(game, cert);
    return detail::audit_exhaustive(game.players(), game.strategies(), utility_delta(game), phi_delta(game, cert));
}

std::string certificate_to_json(const PotentialCertificate& cert)
{
    detail::json arr = detail::json::array();
    for (const auto& g : cert.gamma)
        arr.push_back(detail::rational_json(g));
    return arr.dump() + "\n";
}

PotentialCertificate certificate_from_json(std::string_view text, const Game& game)
{
    detail::json doc = detail::parse_json(text);
    if (!doc.is_array())
        throw ParseError("certificate must be a JSON array");
    PotentialCertificate cert;
    for (std::size_t i = 0; i < doc.size(); ++i)
        cert.gamma.push_back(detail::rational_value(doc[i], "gamma[" + std::to_string(i) + "]"));
    if (static_cast<int>(cert.gamma.size()) != game.players())
        throw ParseError("certificate length does not match the number of players");
    label_components(game, cert);
    return cert;
}

} // namespace scg
