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

#include "scg/game.hpp"
#include "scg/rational.hpp"

namespace fixtures {

using scg::Edge;
using scg::Game;
using scg::Rational;

inline Rational q(long a, long b = 1)
{
    return scg::frac(a, b);
}

/// w_i^1 = 0, w_i^2 = 1, symmetric edge of weight 4.
inline Game coalition_game()
{
    return Game(2, {{q(0), q(1)}, {q(0), q(1)}}, {{0, 1, q(4), q(1, 2)}});
}

/// w_1^1 = 4, w_2^2 = 5, symmetric edge of weight 6.
inline Game hybrid_game()
{
    return Game(2, {{q(4), q(0)}, {q(0), q(5)}}, {{0, 1, q(6), q(1, 2)}});
}

/// Edge-free game with the given intrinsic rows.
inline Game isolated(std::vector<std::vector<Rational>> rows)
{
    const int m = static_cast<int>(rows.front().size());
    return Game(m, std::move(rows), {});
}

} // namespace fixtures
