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
#include "scg/error.hpp"
#include "scg/generators.hpp"
#include "scg/potentials.hpp"

using namespace scg;
using fixtures::q;

namespace {

Game ratio_triangle()
{
    return Game(2, {{q(1), q(0)}, {q(0), q(2)}, {q(1), q(1)}},
                {{0, 1, q(3), q(1, 3)}, {0, 2, q(2), q(1, 4)}, {1, 2, q(5), q(2, 5)}});
}

} // namespace

TEST_CASE("symmetric shares give unit gamma")
{
    CcResult r = cc_recover(random_symmetric(5, 3, 7));
    REQUIRE(r.ok());
    for (const auto& g : r.certificate->gamma)
        CHECK(g == 1);
}

TEST_CASE("ratio equations recover gamma proportional to (1,2,3)")
{
    CcResult r = cc_recover(ratio_triangle());
    REQUIRE(r.ok());
    CHECK(r.certificate->gamma == std::vector<Rational>{q(1), q(2), q(3)});
    CHECK(r.certificate->constrained == std::vector<bool>{true});
}

TEST_CASE("cyclic three-player instance fails on its first edge")
{
    CcResult r = cc_recover(example1(q(1)));
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->edge == 0);
    CHECK(r.failure->reason.find("share 1") != std::string::npos);
}

TEST_CASE("inconsistent cycle is reported")
{
    Game g(1, {{q(0)}, {q(0)}, {q(0)}}, {{0, 1, q(1), q(1, 2)}, {1, 2, q(1), q(1, 2)}, {0, 2, q(1), q(1, 3)}});
    CcResult r = cc_recover(g);
    REQUIRE_FALSE(r.ok());
    // Edges 0 and 2 form the spanning tree from player 0; edge 1 closes the cycle.
    CHECK(r.failure->edge == 1);
    CHECK(r.failure->reason.find("inconsistent") != std::string::npos);
}

TEST_CASE("zero-weight edges and isolated players are unconstrained")
{
    Game g(1, {{q(0)}, {q(0)}, {q(0)}}, {{0, 1, q(0), q(0)}, {1, 2, q(2), q(3, 4)}});
    CcResult r = cc_recover(g);
    REQUIRE(r.ok());
    CHECK(r.certificate->gamma == std::vector<Rational>{q(1), q(3), q(1)});
    CHECK(r.certificate->component[0] != r.certificate->component[1]);
    CHECK(r.certificate->constrained[r.certificate->component[0]] == false);
}

TEST_CASE("potential value")
{
    Game g(2, {{q(3), q(0)}, {q(0), q(0)}}, {{0, 1, q(4), q(1, 2)}});
    PotentialCertificate unit{{q(1), q(1)}, {0, 0}, {true}};
    CHECK(potential_value(g, {0, 0}, unit) == 5);

    Game free = fixtures::isolated({{q(3), q(1)}, {q(4), q(2)}});
    PotentialCertificate c{{q(2), q(4)}, {0, 1}, {false, false}};
    CHECK(potential_value(free, {0, 1}, c) == q(3, 2) + q(1, 2));

    PotentialCertificate short_cert{{q(1)}, {0}, {true}};
    CHECK_THROWS_AS(potential_value(g, {0, 0}, short_cert), ArgumentError);
    PotentialCertificate zero{{q(1), q(0)}, {0, 0}, {true}};
    CHECK_THROWS_AS(potential_value(g, {0, 0}, zero), ArgumentError);
}

TEST_CASE("potential increases with every improving move on the ratio instance")
{
    Game g = ratio_triangle();
    PotentialCertificate c = *cc_recover(g).certificate;
    AuditReport all = exhaustive_audit(g, c);
    CHECK(all.passed());
    CHECK(all.checked == 8 * 3 * 2);
    Profile s(3, 0);
    do {
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 2; ++k) {
                Profile t = s;
                t[i] = k;
                if (utility(g, t, i) > utility(g, s, i))
                    CHECK(potential_value(g, t, c) > potential_value(g, s, c));
                CHECK(potential_delta(g, s, i, k, c) == potential_value(g, t, c) - potential_value(g, s, c));
            }
    } while (next_profile(s, 2));
}

TEST_CASE("sampled audits")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Game g = random_cc(6, 3, seed);
        CcResult r = cc_recover(g);
        REQUIRE(r.ok());
        AuditReport a = ordinal_audit(g, *r.certificate, 10000, seed);
        CHECK(a.checked == 10000);
        CHECK(a.passed());
    }
    Game ex = example1(q(1));
    PotentialCertificate fake{{q(1), q(1), q(1)}, {0, 0, 0}, {true}};
    AuditReport bad = exhaustive_audit(ex, fake);
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.first.has_value());
    CHECK(sgn(bad.first->delta_utility) != sgn(bad.first->delta_potential));
    CHECK_FALSE(ordinal_audit(ex, fake, 2000, 3).passed());
}

TEST_CASE("staying put changes nothing")
{
    Game g = ratio_triangle();
    PotentialCertificate c = *cc_recover(g).certificate;
    CHECK(potential_delta(g, {0, 1, 0}, 1, 1, c) == 0);
}

TEST_CASE("symmetric games: unit-gamma potential is exact")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Game g = random_symmetric(5, 3, seed);
        PotentialCertificate c = *cc_recover(g).certificate;
        OneShotResult r = one_shot_alpha_br(g, 0, q(1));
        Profile s = all_at(5, 0);
        for (const Move& mv : r.trace.moves) {
            Profile t = s;
            t[mv.player] = mv.to;
            CHECK(potential_value(g, t, c) - potential_value(g, s, c) == mv.new_utility - mv.old_utility);
            s = t;
        }
    }
}

TEST_CASE("generated CC instances round-trip their shares")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Game g = random_cc(6, 2, seed, 5);
        CcResult r = cc_recover(g);
        REQUIRE(r.ok());
        const auto& gamma = r.certificate->gamma;
        for (const Edge& e : g.edges())
            if (e.weight > 0)
                CHECK(e.share_ij == gamma[e.i] / (gamma[e.i] + gamma[e.j]));
        for (std::size_t c = 0; c < r.certificate->constrained.size(); ++c) {
            Rational lo(-1);
            for (std::size_t i = 0; i < gamma.size(); ++i)
                if (r.certificate->component[i] == static_cast<int>(c) && (lo < 0 || gamma[i] < lo))
                    lo = gamma[i];
            CHECK(lo == 1);
        }
    }
}

TEST_CASE("certificate JSON")
{
    Game g = ratio_triangle();
    PotentialCertificate c = *cc_recover(g).certificate;
    std::string text = certificate_to_json(c);
    CHECK(text == "[\"1\",\"2\",\"3\"]\n");
    PotentialCertificate back = certificate_from_json(text, g);
    CHECK(back.gamma == c.gamma);
    CHECK(back.component == c.component);
    CHECK_THROWS_AS(certificate_from_json("[\"1\"]", g), ParseError);
}
