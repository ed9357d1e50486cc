# Copyright 2026 The scgame Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
from fractions import Fraction

import pytest

import scgame


def small_game():
    # Two players, two strategies, one shared edge split evenly.
    return scgame.Game(2, [[1, 0], [0, 1]], [(0, 1, 4, Fraction(1, 2))])


def test_utilities_are_exact_fractions():
    g = small_game()
    assert scgame.utility(g, [0, 0], 0) == Fraction(3)
    assert scgame.utility(g, [0, 1], 0) == Fraction(1)
    w = scgame.welfare(g, [0, 0])
    assert w["total"] == w["intrinsic"] + w["coordination"] == 5
    assert isinstance(w["total"], Fraction)


def test_json_round_trip():
    g = scgame.random_game(5, 3, seed=4)
    assert scgame.Game.from_json(g.to_json()) == g


def test_three_player_game_has_no_equilibrium():
    c = scgame.census(scgame.example1(1))
    assert c["equilibria"] == []
    assert c["min_max_factor"] >= Fraction(14142, 10000)
    report = scgame.deviation_report(scgame.example1(1), [0, 1, 2])
    assert report["max_factor"] > 1


def test_bounds():
    assert scgame.welfare_lower_bound(2, 1, 4) == Fraction(4, 7)
    assert scgame.welfare_lower_bound(2, 1, None) == Fraction(1, 2)
    assert scgame.welfare_lower_bound("2", "1", float("inf")) == Fraction(1, 2)


def test_constructions_are_stable():
    g2 = scgame.random_game(6, 2, seed=9)
    assert scgame.deviation_report(g2, scgame.algorithm1_two(g2, [0] * 6))["max_factor"] <= 1
    assert scgame.verify_strong(g2, scgame.strong_two(g2))["stable"]

    g3 = scgame.random_game(5, 3, seed=9)
    s = scgame.sqrt2_three(g3)
    assert scgame.deviation_report(g3, s)["max_factor"] <= Fraction(141422, 100000)

    r = scgame.one_shot(g3, 0, 2)
    assert scgame.deviation_report(g3, r["profile"])["max_factor"] <= 2

    h = scgame.hybrid(g3, "1618/1000", opt_oracle=True)
    assert 0 < h["rho"] <= 1
    assert scgame.deviation_report(g3, h["profile"])["max_factor"] <= Fraction(1618, 1000)


def test_payments_stabilize_optimum():
    p = scgame.payment_stabilize(scgame.random_game(5, 3, seed=2, interior_shares=True))
    assert p["within_intrinsic_bound"]
    assert p["max_factor_after"] <= 1


def test_potential_certificate():
    g = scgame.random_cc(6, 3, seed=1)
    gamma = scgame.cc_recover(g)
    assert gamma is not None and min(gamma) == 1
    assert scgame.ordinal_audit(g, trials=2000)["violations"] == 0
    assert scgame.run_dynamics(g, [0] * 6)["reason"] == "converged"


def test_generalized_models():
    assert scgame.triangle_nonexistence_check(2) == 2
    assert math.isinf(scgame.supermodularity_degree(scgame.triangle_c(2)))
    with pytest.raises(scgame.UnsupportedError):
        scgame.one_shot_generalized(scgame.triangle_c(2))

    res = scgame.one_shot_generalized(scgame.random_supermodular(4, 2, 1, seed=3))
    assert res["max_factor"] <= res["guarantee"] < 2

    lex = scgame.lex_strong_eq(scgame.random_omega(4, 3, Fraction(3, 4), seed=5))
    assert lex["stable"]


def test_errors():
    with pytest.raises(scgame.SizeError):
        scgame.census(scgame.random_game(30, 3, seed=1))
    with pytest.raises(ValueError):
        scgame.Game.from_json("{not json")
    with pytest.raises(ValueError):
        scgame.Game(2, [[1, 0, 5]], [])
