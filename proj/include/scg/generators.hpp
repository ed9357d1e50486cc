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

// Deterministic instance families. Random families draw from std::mt19937_64(seed)
// with `lo + rng() % (hi - lo + 1)` for every integer, in the order documented
// next to each function, so fixtures can be reproduced from (kind, params, seed).

#include <cstdint>

#include "scg/game.hpp"
#include "scg/generalized.hpp"
#include "scg/rational.hpp"

namespace scg {

/// sqrt(2) stand-in for the three-cycle instance: 14142135 / 10^7.
Rational sqrt2_approx();

/// Three players, three strategies. Player p prefers strategy p (sqrt2_approx * r),
/// then p + 1 (r); edges (0,1), (1,2), (2,0) of weight r pay only their first endpoint.
Game example1(const Rational& r);

/// m players and strategies. Player 0 values strategy 0 at r and receives r from
/// each co-located partner; player j > 0 values strategy j at 2 eps and receives eps
/// from player 0. Each star edge (0, j) has weight r + eps, share r / (r + eps).
Game prop5(int m, const Rational& r, const Rational& eps);

/// m players and strategies. Player i values strategy i at r + eps; star edges
/// (0, j) of weight 2r split equally.
Game symmetric_pos_tight(int m, const Rational& r, const Rational& eps);

/// Three players with set-function utilities in powers of c under which every
/// profile lets some player improve by a factor of at least c. Requires c >= 1.
GeneralizedGame triangle_c(const Rational& c);

struct WeightRange {
    long max_numerator = 10;   // numerators drawn from [0, max_numerator]
    long max_denominator = 4;  // denominators drawn from [1, max_denominator]
};

/// Intrinsic w_i^k for i, k in row order; then for each pair i < j: a coin
/// (edge present iff rng() % 2 == 0), weight, and share t / q with q in [1, 4],
/// t in [0, q] (or q in [2, 5], t in [1, q - 1] when `interior_shares`).
Game random_game(int n, int m, std::uint64_t seed, WeightRange range = {}, bool interior_shares = false);

/// gamma_i in [1, max_gamma] first, then as random_game with share gamma_i / (gamma_i + gamma_j).
Game random_cc(int n, int m, std::uint64_t seed, long max_gamma = 4, WeightRange range = {});

/// As random_game with every share 1/2.
Game random_symmetric(int n, int m, std::uint64_t seed, WeightRange range = {});

/// u_i(k, S) = w_i^k + lambda(|S| - 1) Sum_{j in S, j != i} g_ijk with lambda(t) = 1
/// for t <= 1 and r beyond. Degree is at most r; r is declared on the game.
GeneralizedGame random_supermodular(int n, int m, const Rational& r, std::uint64_t seed, WeightRange range = {});

/// a_i, b_i in [1, 5]; each pair label is conflict with probability 1/6, else one
/// or zero evenly.
OmegaGame random_omega(int n, int m, const Rational& omega, std::uint64_t seed);

/// gamma_i in [1, max_gamma]; anchored single-player edges for intrinsic values, then
/// `extra_edges` hyperedges of 2 to 3 players (one in three anchored) with shares
/// proportional to gamma.
HypergraphGame random_hypergraph_cc(int n, int m, std::uint64_t seed, int extra_edges = 6, long max_gamma = 4);

} // namespace scg
