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
#include <string>
#include <vector>

#include "scg/game.hpp"
#include "scg/rational.hpp"

namespace scg {

/// Golden-ratio stand-in used wherever an algorithm needs phi: 1618/1000.
inline Rational golden_approx()
{
    return frac(1618, 1000);
}

/// Improvement gate: a move from u_old to u_new is allowed iff u_new > u_old and
/// u_new >= alpha * u_old. The sqrt(2) threshold is decided by squared comparison.
class Threshold {
public:
    /// alpha >= 1, else ArgumentError.
    static Threshold exact(Rational alpha);
    static Threshold sqrt2();

    bool is_sqrt2() const { return sqrt2_; }
    const Rational& alpha() const { return alpha_; }

    bool admits(const Rational& u_new, const Rational& u_old) const;
    std::string describe() const;

private:
    Rational alpha_{1};
    bool sqrt2_ = false;
};

struct BestResponse {
    int strategy = 0;
    Rational utility;
    Rational current;
    Extended factor;
};

/// argmax_k u_i(k, s_{-i}); ties go to the current strategy, then the lowest index.
/// factor = best / current with x/0 = +inf (x > 0) and 0/0 = 1.
BestResponse best_response(const Game& game, const Profile& s, int i);

struct Move {
    int player = 0;
    int from = 0;
    int to = 0;
    Rational old_utility;
    Rational new_utility;
};

enum class Termination { converged, cycle_detected, step_cap };

std::string to_string(Termination t);

struct DynamicsTrace {
    std::vector<Move> moves;
    Profile terminal;
    Termination reason = Termination::converged;
};

struct MoveRule {
    Threshold threshold = Threshold::exact(Rational(1));
};

/// Best-response dynamics. Each step applies the first (lowest-index) player whose
/// best response passes the gate. Stops on convergence, a revisited profile, or
/// after `step_cap` moves (default m^n * n, saturating).
DynamicsTrace run_dynamics(const Game& game, Profile start, const MoveRule& rule,
                           std::optional<std::size_t> step_cap = std::nullopt);

/// Two-strategy Nash construction: first let players leave strategy 1 for 2 while
/// that improves them, then the reverse. Requires m == 2.
Profile algorithm1_two(const Game& game, Profile start);

/// Maximal S subset of X_from(s) whose joint move to `to` strictly improves every
/// member, found as the fixed point of dropping non-improvers. Empty if none.
std::vector<int> maximal_improving_coalition(const Game& game, const Profile& s, int from, int to);

/// Strong Nash equilibrium for m == 2 by repeated maximal coalition moves out of
/// strategy 1, starting from everyone at strategy 1.
Profile strong_two(const Game& game);

/// sqrt(2)-approximate equilibrium for m == 3.
Profile sqrt2_three(const Game& game);

struct OneShotResult {
    Profile profile;
    DynamicsTrace trace;
};

/// Everyone starts at k0; players still at k0 may leave once, to their best
/// response, when it passes the gate for `alpha` (alpha >= 1).
OneShotResult one_shot_alpha_br(const Game& game, int k0, const Rational& alpha);

struct HybridReport {
    Rational alpha;
    Rational complement_alpha;  // 1 / (alpha - 1)
    int start_strategy = 0;     // k*
    OneShotResult first;        // one-shot at alpha
    OneShotResult second;       // one-shot at 1 / (alpha - 1)
    Rational first_welfare;
    Rational second_welfare;
    Profile chosen;
    Rational chosen_welfare;
    std::optional<Rational> optimum_welfare;
    std::optional<Rational> rho;  // chosen / optimum
};

/// Runs one-shot at alpha and at 1/(alpha - 1) from k* and keeps the higher welfare
/// (the alpha run on ties). alpha must lie in [1618/1000, 2].
HybridReport hybrid(const Game& game, const Rational& alpha,
                    std::optional<Rational> optimum_welfare = std::nullopt);

/// One JSON object per line: {"player","from","to","old","new"} with 1-based strategies.
std::string trace_to_jsonl(const DynamicsTrace& trace);

} // namespace scg
