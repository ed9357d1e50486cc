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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scg/analysis.hpp"
#include "scg/dynamics.hpp"
#include "scg/game.hpp"
#include "scg/potentials.hpp"
#include "scg/rational.hpp"

namespace scg {

// ---------------------------------------------------------------------------
// Set-function utilities

/// Bit i set for player i.
using Subset = std::uint64_t;

Subset subset_of(const std::vector<int>& players);
std::vector<int> members_of(Subset subset);

struct UtilityEntry {
    int player = 0;
    int strategy = 0;
    std::vector<int> subset;  // sorted, contains `player`
    Rational utility;
};

/// Utilities u_i(k, S) given explicitly for the co-located sets S that matter.
/// Looking up a set that was never given is a ModelError, never a default.
class GeneralizedGame {
public:
    GeneralizedGame(int players, int strategies, const std::vector<UtilityEntry>& entries,
                    std::optional<Extended> declared_r = std::nullopt);

    int players() const { return n_; }
    int strategies() const { return m_; }
    const std::optional<Extended>& declared_r() const { return declared_r_; }

    const Rational& utility(int i, int k, Subset colocated) const;
    bool covers(int i, int k, Subset colocated) const;
    const std::map<Subset, Rational>& table(int i, int k) const { return tables_[index(i, k)]; }

    /// u_i(k, s_{-i}).
    const Rational& deviation_utility(const Profile& s, int i, int k) const;
    const Rational& utility(const Profile& s, int i) const { return deviation_utility(s, i, s[i]); }
    Rational welfare(const Profile& s) const;

    /// All entries ordered by (player, strategy, subset mask).
    std::vector<UtilityEntry> entries() const;
    void validate_profile(const Profile& s) const;

private:
    std::size_t index(int i, int k) const { return static_cast<std::size_t>(i) * m_ + k; }

    int n_;
    int m_;
    std::vector<std::map<Subset, Rational>> tables_;
    std::optional<Extended> declared_r_;
};

/// Max over players, strategies and covered S, T (both containing i, S u T covered)
/// of u_i(S u T) / (u_i(S) + u_i(T)), floored at 1; +inf on x/0 with x > 0.
Extended supermodularity_degree(const GeneralizedGame& game);

/// Explicit tables for an additive game: every subset containing i, for every k.
GeneralizedGame to_generalized(const Game& game);

struct GeneralizedOneShot {
    Profile profile;
    Extended r;
    Rational alpha_used;  // smallest p / 10^6 at or above (r + sqrt(r (r + 4))) / 2
    Rational guarantee;   // max(alpha_used, r (1 + 1 / alpha_used))
    DynamicsTrace trace;
};

/// One-shot best response from everyone at k0, gated at alpha_used. Uses the
/// declared r when present, else supermodularity_degree. Infinite r is unsupported.
GeneralizedOneShot one_shot_generalized(const GeneralizedGame& game, int k0);

/// Single-deviation factors for each player.
DeviationReport verify_generalized(const GeneralizedGame& game, const Profile& s);

/// Min over all profiles of the max single-deviation factor.
Extended generalized_min_max_factor(const GeneralizedGame& game);

/// generalized_min_max_factor of triangle_c(c).
Extended triangle_nonexistence_check(const Rational& c);

DynamicsTrace run_generalized_dynamics(const GeneralizedGame& game, Profile start, const MoveRule& rule,
                                       std::optional<std::size_t> step_cap = std::nullopt);

// ---------------------------------------------------------------------------
// Hypergraph games

/// Pays `weight` when every player member and every anchor share one strategy.
/// Anchors are strategies (0-based) that behave as members fixed in place.
struct Hyperedge {
    std::vector<int> players;
    std::vector<int> anchors;
    Rational weight;
    std::vector<Rational> shares;  // aligned with `players`, summing to 1
};

class HypergraphGame {
public:
    HypergraphGame(int players, int strategies, std::vector<Hyperedge> edges);

    int players() const { return n_; }
    int strategies() const { return m_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    const std::vector<std::size_t>& incident(int i) const { return incident_[i]; }

    /// u_i(k, s_{-i}).
    Rational deviation_utility(const Profile& s, int i, int k) const;
    Rational utility(const Profile& s, int i) const { return deviation_utility(s, i, s[i]); }
    Rational welfare(const Profile& s) const;
    void validate_profile(const Profile& s) const;

    /// Share of player i in edge e (0 when i is not a member).
    const Rational& share(std::size_t e, int i) const;

private:
    int n_;
    int m_;
    std::vector<Hyperedge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// Intrinsic preferences become single-player anchored edges; pairs become 2-member edges.
HypergraphGame to_hypergraph(const Game& game);

/// gamma with share^e_i = gamma_i / Sum_{j in e} gamma_j on every positive-weight
/// edge (anchors carry gamma 0). Failure names the edge.
CcResult hypergraph_cc_recover(const HypergraphGame& game);

/// Sum over paying edges of w_e / Sum_{j in e} gamma_j.
Rational hypergraph_potential(const HypergraphGame& game, const Profile& s, const PotentialCertificate& cert);

AuditReport hypergraph_ordinal_audit(const HypergraphGame& game, const PotentialCertificate& cert,
                                     std::size_t trials, std::uint64_t seed);
AuditReport hypergraph_exhaustive_audit(const HypergraphGame& game, const PotentialCertificate& cert);

DynamicsTrace run_hypergraph_dynamics(const HypergraphGame& game, Profile start, const MoveRule& rule,
                                      std::optional<std::size_t> step_cap = std::nullopt);

// ---------------------------------------------------------------------------
// Omega extension with conflict pairs

enum class PairLabel { zero, one, conflict };

std::string to_string(PairLabel label);

/// Player i co-located with j earns a_i b_j (label one), omega a_i b_j (label
/// zero); conflict pairs may never share a strategy.
class OmegaGame {
public:
    OmegaGame(int strategies, std::vector<Rational> a, std::vector<Rational> b,
              std::vector<std::vector<PairLabel>> labels, Rational omega);

    int players() const { return static_cast<int>(a_.size()); }
    int strategies() const { return m_; }
    const Rational& a(int i) const { return a_[i]; }
    const Rational& b(int i) const { return b_[i]; }
    PairLabel label(int i, int j) const { return labels_[i][j]; }
    const Rational& omega() const { return omega_; }

    bool feasible(const Profile& s) const;
    Rational utility(const Profile& s, int i) const;
    void validate_profile(const Profile& s) const;

private:
    int m_;
    std::vector<Rational> a_;
    std::vector<Rational> b_;
    std::vector<std::vector<PairLabel>> labels_;
    Rational omega_;
};

/// pi_k(s) = Sum_{i : s_i = k} b_i.
using PotentialVector = std::vector<Rational>;

PotentialVector potential_vector(const OmegaGame& game, const Profile& s);

/// Compares the non-increasing rearrangements lexicographically.
std::strong_ordering lex_compare(const PotentialVector& x, const PotentialVector& y);

struct LexResult {
    Profile profile;
    PotentialVector potential;
    std::size_t feasible_states = 0;
};

/// Feasible state with lexicographically largest potential vector (smallest
/// profile among ties). ModelError when no state is feasible.
LexResult lex_strong_eq(const OmegaGame& game);

/// Group deviations over feasible states only: a violation is a feasible s' where
/// every player that moved improves by a factor strictly greater than `factor`.
StrongDeviationReport verify_omega_strong(const OmegaGame& game, const Profile& s, const Rational& factor);

// ---------------------------------------------------------------------------
// JSON ("type": "generalized" | "hypergraph" | "omega"); strategies 1-based, players 0-based.

GeneralizedGame parse_generalized(std::string_view text);
std::string serialize_generalized(const GeneralizedGame& game);
HypergraphGame parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const HypergraphGame& game);
OmegaGame parse_omega(std::string_view text);
std::string serialize_omega(const OmegaGame& game);

} // namespace scg
