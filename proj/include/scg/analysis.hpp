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
#include <optional>
#include <vector>

#include "scg/dynamics.hpp"
#include "scg/game.hpp"
#include "scg/rational.hpp"

namespace scg {

/// Exhaustive routines refuse instances with more than this many profiles.
inline constexpr std::size_t kEnumerationLimit = 10'000'000;

/// Throws SizeError when m^n exceeds kEnumerationLimit.
void require_enumerable(int players, int strategies);

struct DeviationReport {
    std::vector<BestResponse> players;
    Extended max_factor{1};
    int witness = 0;  // lowest-index player attaining max_factor

    bool is_approx_equilibrium(const Rational& alpha) const { return max_factor <= Extended(alpha); }
};

DeviationReport deviation_report(const Game& game, const Profile& s);

struct StrongDeviationReport {
    bool stable = true;
    Profile alternative;          // first violating profile in lexicographic order
    std::vector<int> coalition;   // players whose strategy differs
    std::vector<Extended> factors;
    std::size_t checked = 0;
};

/// Walks every alternative profile; a violation is one where every player that
/// changed strategy improves by a factor strictly greater than alpha.
StrongDeviationReport verify_approx_strong(const Game& game, const Profile& s, const Rational& alpha);

struct Optimum {
    Profile profile;
    Rational welfare;
};

/// Exact welfare maximizer; ties go to the lexicographically smallest profile.
Optimum brute_force_optimum(const Game& game);

struct CensusEntry {
    Profile profile;
    Rational welfare;
    Extended max_factor;
    bool is_equilibrium = false;
    std::optional<bool> is_strong;
};

struct CensusOptions {
    bool strong_flags = false;  // run the strong verifier on every equilibrium found
    bool keep_all_rows = false; // keep one entry per profile, not only equilibria
};

struct EquilibriumCensus {
    Rational alpha;
    Optimum optimum;
    std::vector<CensusEntry> equilibria;
    std::vector<CensusEntry> rows;
    Extended min_max_factor;  // min over profiles of the max deviation factor
    std::optional<Extended> price_of_anarchy;
    std::optional<Extended> price_of_stability;
    std::optional<std::size_t> best, worst;  // indices into `equilibria`

    bool exists() const { return !equilibria.empty(); }
};

/// All alpha-approximate equilibria (alpha = 1: pure Nash) by m^n enumeration.
EquilibriumCensus equilibrium_census(const Game& game, const Rational& alpha, const CensusOptions& options = {});

/// Guaranteed fraction of OPT achieved by hybrid(alpha) given imbalance gamma and
/// m strategies (m may be +inf, meaning 1/m = 0).
Rational welfare_lower_bound(const Rational& alpha, const Extended& gamma, const Extended& m);

struct PaymentPlan {
    std::vector<Rational> payments;  // utility units, paid only for adhering
    std::vector<int> targets;        // best-response strategy each payment neutralizes
    Rational total;
    Rational optimum_welfare;
    Rational nu;                     // total / optimum_welfare
    Rational intrinsic_total;        // A_T
    bool within_intrinsic_bound = false;  // total <= A_T
};

/// Minimal per-player payments that make `s` a Nash equilibrium when each player
/// receives her payment only while she keeps her strategy in `s`.
PaymentPlan payment_stabilize(const Game& game, const Profile& s, const Rational& optimum_welfare);

/// Max improvement factor in the payment-augmented game.
Extended augmented_max_factor(const Game& game, const Profile& s, const std::vector<Rational>& payments);

/// Sum_i (1/m) Sum_k u_i(k, s_{-i}).
Rational uniform_deviation_welfare(const Game& game, const Profile& s);

/// uniform_deviation_welfare(s) >= optimum / m.
bool semi_smoothness_check(const Game& game, const Profile& s, const Rational& optimum_welfare);
/// As above, with the optimum found by enumeration.
bool semi_smoothness_check(const Game& game, const Profile& s);

/// A(s) >= A_T / m.
bool mip_check(const Game& game, const Profile& s);

} // namespace scg
