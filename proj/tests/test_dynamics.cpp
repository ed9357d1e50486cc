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

#include "doctest.h"

#include "fixtures.hpp"
#include "scg/analysis.hpp"
#include "scg/dynamics.hpp"
#include "scg/error.hpp"
#include "scg/generators.hpp"

using namespace scg;
using fixtures::q;

TEST_CASE("best response on the cyclic three-player instance")
{
    Game g = example1(q(1));
    BestResponse br = best_response(g, {0, 1, 2}, 0);
    CHECK(br.strategy == 1);
    CHECK(br.utility == 2);
    CHECK(br.current == sqrt2_approx());
    CHECK(br.factor == Extended(2 / sqrt2_approx()));
    CHECK(to_decimal(br.factor.value(), 5) == "1.41421");
}

TEST_CASE("best response conventions")
{
    Game g = fixtures::isolated({{q(5), q(1)}});
    BestResponse stay = best_response(g, {0}, 0);
    CHECK(stay.strategy == 0);
    CHECK(stay.factor == Extended(1));

    Game zero = fixtures::isolated({{q(0), q(3)}});
    CHECK(best_response(zero, {0}, 0).factor.is_infinite());

    // Ties: stay first, then the lowest index.
    Game tie = fixtures::isolated({{q(1), q(2), q(2)}});
    CHECK(best_response(tie, {0}, 0).strategy == 1);
    CHECK(best_response(tie, {2}, 0).strategy == 2);
}

TEST_CASE("threshold gate")
{
    Threshold one = Threshold::exact(q(1));
    CHECK_FALSE(one.admits(q(2), q(2)));
    CHECK(one.admits(q(3), q(2)));
    CHECK(one.admits(q(1), q(0)));
    CHECK_FALSE(one.admits(q(0), q(0)));
    Threshold two = Threshold::exact(q(2));
    CHECK(two.admits(q(4), q(2)));
    CHECK_FALSE(two.admits(q(39, 10), q(2)));
    Threshold root = Threshold::sqrt2();
    CHECK(root.admits(q(3, 2), q(1)));
    CHECK_FALSE(root.admits(q(14142135, 10000000), q(1)));
    CHECK_THROWS_AS(Threshold::exact(q(1, 2)), ArgumentError);
}

TEST_CASE("run_dynamics cycles on the cyclic three-player instance from every start")
{
    Game g = example1(q(1));
    Profile start(3, 0);
    do {
        DynamicsTrace t = run_dynamics(g, start, MoveRule{});
        CHECK(t.reason == Termination::cycle_detected);
        CHECK(to_string(t.reason) == "cycle-detected");
    } while (next_profile(start, 3));
}

TEST_CASE("run_dynamics converges on CC instances and stops at once when stable")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Game g = random_cc(5, 3, seed);
        DynamicsTrace t = run_dynamics(g, all_at(5, 0), MoveRule{});
        CHECK(t.reason == Termination::converged);
        CHECK(deviation_report(g, t.terminal).max_factor <= Extended(1));
        DynamicsTrace again = run_dynamics(g, t.terminal, MoveRule{});
        CHECK(again.moves.empty());
        CHECK(again.reason == Termination::converged);
    }
}

TEST_CASE("run_dynamics honours the step cap")
{
    DynamicsTrace t = run_dynamics(example1(q(1)), {0, 1, 2}, MoveRule{}, 1);
    CHECK(t.reason == Termination::step_cap);
    CHECK(t.moves.size() == 1);
}

TEST_CASE("algorithm1_two")
{
    Game g(2, {{q(2), q(0)}, {q(0), q(2)}}, {{0, 1, q(1), q(1, 2)}});
    Profile s = algorithm1_two(g, {0, 0});
    CHECK(s == Profile{0, 1});
    CHECK(deviation_report(g, s).max_factor <= Extended(1));

    Game free = fixtures::isolated({{q(1), q(3)}, {q(4), q(2)}});
    CHECK(algorithm1_two(free, {0, 0}) == Profile{1, 0});

    CHECK(algorithm1_two(fixtures::coalition_game(), {0, 0}) == Profile{0, 0});
    CHECK_THROWS_AS(algorithm1_two(example1(q(1)), {0, 0, 0}), ArgumentError);
}

TEST_CASE("strong_two")
{
    Game g = fixtures::coalition_game();
    CHECK(maximal_improving_coalition(g, {0, 0}, 0, 1) == std::vector<int>{0, 1});
    CHECK(strong_two(g) == Profile{1, 1});
    CHECK(verify_approx_strong(g, {1, 1}, q(1)).stable);

    Game free = fixtures::isolated({{q(1), q(3)}, {q(4), q(2)}});
    CHECK(strong_two(free) == Profile{1, 0});

    Game dominant = fixtures::isolated({{q(5), q(1)}, {q(2), q(0)}});
    CHECK(strong_two(dominant) == Profile{0, 0});
    CHECK_THROWS_AS(strong_two(example1(q(1))), ArgumentError);
}

TEST_CASE("sqrt2_three")
{
    Game g = example1(q(1));
    Profile s = sqrt2_three(g);
    Extended f = deviation_report(g, s).max_factor;
    CHECK(f <= Extended(q(141422, 100000)));

    Game dominant = fixtures::isolated({{q(1), q(0), q(9)}, {q(0), q(2), q(5)}});
    Profile d = sqrt2_three(dominant);
    CHECK(d == Profile{2, 2});
    CHECK(deviation_report(dominant, d).max_factor == Extended(1));

    CHECK(sqrt2_three(fixtures::isolated({{q(1), q(7), q(3)}})) == Profile{1});
    CHECK_THROWS_AS(sqrt2_three(fixtures::coalition_game()), ArgumentError);
}

TEST_CASE("one-shot on the cyclic three-player instance")
{
    Game g = example1(q(1));
    OneShotResult gated = one_shot_alpha_br(g, 0, golden_approx());
    CHECK(gated.profile == Profile{0, 0, 0});
    CHECK(gated.trace.moves.empty());
    CHECK(to_decimal(welfare(g, gated.profile).total, 4) == "5.4142");
    CHECK(deviation_report(g, gated.profile).max_factor <= Extended(golden_approx()));

    OneShotResult plain = one_shot_alpha_br(g, 0, q(1));
    REQUIRE(plain.trace.moves.size() == 3);
    CHECK(plain.trace.moves[0].player == 1);
    CHECK(plain.trace.moves[0].to == 1);
    CHECK(plain.trace.moves[1].player == 0);
    CHECK(plain.trace.moves[1].to == 1);
    CHECK(plain.trace.moves[2].player == 2);
    CHECK(plain.trace.moves[2].to == 2);
    CHECK(plain.profile == Profile{1, 1, 2});
    CHECK(welfare(g, plain.profile).total == 2 + 2 * sqrt2_approx());

    // Replaying the gate at each recorded step.
    Profile s = all_at(3, 0);
    for (const Move& mv : plain.trace.moves) {
        CHECK(utility(g, s, mv.player) == mv.old_utility);
        CHECK(deviation_utility(g, s, mv.player, mv.to) == mv.new_utility);
        CHECK(Threshold::exact(q(1)).admits(mv.new_utility, mv.old_utility));
        s[mv.player] = mv.to;
    }

    CHECK_THROWS_AS(one_shot_alpha_br(g, 0, q(1, 2)), ArgumentError);
    CHECK_THROWS_AS(one_shot_alpha_br(g, 3, q(1)), ArgumentError);
}

TEST_CASE("one-shot on an edge-free game sends everyone to best(i)")
{
    Game g = fixtures::isolated({{q(1), q(4), q(2)}, {q(3), q(1), q(9)}, {q(5), q(0), q(0)}});
    CHECK(one_shot_alpha_br(g, 0, q(2)).profile == Profile{1, 2, 0});
}

TEST_CASE("hybrid")
{
    Game g = fixtures::hybrid_game();
    HybridReport r = hybrid(g, q(2), q(11));
    CHECK(r.start_strategy == 1);
    CHECK(r.first.profile == Profile{1, 1});
    CHECK(r.second.profile == Profile{0, 1});
    CHECK(r.second_welfare == 9);
    CHECK(r.chosen == Profile{1, 1});
    CHECK(r.chosen_welfare == 11);
    CHECK(r.rho == q(1));
    CHECK(brute_force_optimum(g).welfare == 11);

    Game ex = example1(q(1));
    HybridReport e = hybrid(ex, golden_approx());
    CHECK(e.complement_alpha == q(1000, 618));
    CHECK(e.first.profile == Profile{0, 0, 0});
    CHECK(e.second.profile == Profile{0, 0, 0});
    CHECK(e.chosen == Profile{0, 0, 0});
    CHECK_FALSE(e.rho.has_value());

    Game single = fixtures::isolated({{q(2)}, {q(3)}});
    HybridReport one = hybrid(single, q(2), q(5));
    CHECK(one.chosen == Profile{0, 0});
    CHECK(one.rho == q(1));

    CHECK_THROWS_AS(hybrid(g, q(3, 2)), ArgumentError);
    CHECK_THROWS_AS(hybrid(g, q(5, 2)), ArgumentError);
}

TEST_CASE("trace JSON lines")
{
    OneShotResult r = one_shot_alpha_br(fixtures::hybrid_game(), 1, q(1));
    CHECK(trace_to_jsonl(r.trace) == "{\"player\":0,\"from\":2,\"to\":1,\"old\":\"3\",\"new\":\"4\"}\n");
}
