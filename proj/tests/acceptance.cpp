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

// Acceptance harness: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "scg/analysis.hpp"
#include "scg/dynamics.hpp"
#include "scg/error.hpp"
#include "scg/generalized.hpp"
#include "scg/generators.hpp"
#include "scg/potentials.hpp"

using namespace scg;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;  // printed below the verdict line
};

struct Tally {
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string first;

    void record(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok && violations++ == 0)
            first = what;
    }
    bool clean() const { return violations == 0; }
    std::string summary(const std::string& noun) const
    {
        std::string s = std::to_string(checked) + " " + noun + ", " + std::to_string(violations) + " violations";
        if (!clean())
            s += " (first: " + first + ")";
        return s;
    }
};

Rational q(long a, long b = 1)
{
    return frac(a, b);
}

Rational max_of(const Rational& a, const Rational& b)
{
    return a < b ? b : a;
}

std::size_t power(int m, int n)
{
    std::size_t p = 1;
    for (int i = 0; i < n; ++i)
        p *= static_cast<std::size_t>(m);
    return p;
}

// Shape (n, m) for a seed, with n in [min_n, max_n], m in [min_m, max_m] and
// m^n kept within `cap` by shrinking n.
struct Shape {
    int n;
    int m;
};

Shape shape_for(std::mt19937_64& rng, int min_n, int max_n, int min_m, int max_m, std::size_t cap = 100000)
{
    Shape s{min_n + static_cast<int>(rng() % (max_n - min_n + 1)), min_m + static_cast<int>(rng() % (max_m - min_m + 1))};
    while (s.n > 1 && power(s.m, s.n) > cap)
        --s.n;
    return s;
}

Profile random_profile(std::mt19937_64& rng, int n, int m)
{
    Profile s(n);
    for (int& v : s)
        v = static_cast<int>(rng() % m);
    return s;
}

std::string tag(std::uint64_t seed, const Shape& sh)
{
    return "seed " + std::to_string(seed) + ", n=" + std::to_string(sh.n) + ", m=" + std::to_string(sh.m);
}

// -- 1 ----------------------------------------------------------------------

Outcome welfare_table()
{
    struct Cell {
        Rational alpha;
        long gamma;
        bool m_infinite;
        double printed;
    };
    const Rational a2 = q(2);
    const Rational ag = golden_approx();
    const std::vector<Cell> cells{
        {a2, 1, false, 0.57},   {a2, 1, true, 0.5},    {ag, 1, false, 0.424}, {ag, 1, true, 0.35},
        {a2, 2, false, 0.47},   {a2, 2, true, 0.4},    {ag, 2, false, 0.37},  {ag, 2, true, 0.29},
        {a2, 10, false, 0.25},  {a2, 10, true, 0.15},  {ag, 10, false, 0.18}, {ag, 10, true, 0.12},
    };
    Outcome out;
    int matched = 0;
    for (const Cell& c : cells) {
        Extended m = c.m_infinite ? Extended::infinity() : Extended(4);
        Rational f = welfare_lower_bound(c.alpha, Extended(c.gamma), m);
        double got = f.get_d();
        bool ok = std::fabs(got - c.printed) <= 0.005;
        matched += ok;
        if (!ok) {
            out.pass = false;
            std::ostringstream note;
            note << "alpha=" << to_string(c.alpha) << " gamma=" << c.gamma << " m=" << (c.m_infinite ? "inf" : "4")
                 << ": computed " << to_decimal(f, 4) << ", table " << c.printed;
            out.notes.push_back(note.str());
        }
    }
    out.detail = std::to_string(matched) + "/12 cells within 0.005";
    return out;
}

// -- 2 ----------------------------------------------------------------------

Outcome example_without_equilibrium()
{
    Game g = example1(q(1));
    EquilibriumCensus c = equilibrium_census(g, q(1));
    Outcome out;
    out.pass = c.equilibria.empty() && c.min_max_factor >= Extended(q(14142, 10000));
    out.detail = std::to_string(c.equilibria.size()) + " Nash equilibria among 27 profiles, min max factor " +
                 to_decimal(c.min_max_factor.value(), 6);
    return out;
}

// -- 3 ----------------------------------------------------------------------

Outcome one_shot_stability()
{
    std::mt19937_64 rng(3);
    Tally t;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        Shape sh = shape_for(rng, 1, 8, 1, 4);
        Game g = random_game(sh.n, sh.m, seed, {}, seed % 2 == 0);
        const int k0 = static_cast<int>(rng() % sh.m);
        for (const Rational& a : {q(1), q(3, 2), q(2)}) {
            Profile s = one_shot_alpha_br(g, k0, a).profile;
            t.record(deviation_report(g, s).max_factor <= Extended(max_of(a, 1 / a + 1)),
                     tag(seed, sh) + ", alpha=" + to_string(a));
        }
    }
    return {t.clean(), t.summary("runs")};
}

// -- 4 and 5 share a corpus ---------------------------------------------------

struct CorpusItem {
    std::uint64_t seed;
    Shape shape;
    Game game;
};

std::vector<CorpusItem> finite_gamma_corpus()
{
    std::mt19937_64 rng(4);
    std::vector<CorpusItem> items;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Shape sh = shape_for(rng, 2, 8, 2, 4);
        Game g = seed % 2 == 0 ? random_game(sh.n, sh.m, seed, {}, true) : random_cc(sh.n, sh.m, seed);
        items.push_back({seed, sh, std::move(g)});
    }
    return items;
}

Outcome hybrid_welfare()
{
    Tally t;
    for (const CorpusItem& it : finite_gamma_corpus()) {
        InstanceStats st = instance_stats(it.game);
        if (st.imbalance.is_infinite()) {
            t.record(false, tag(it.seed, it.shape) + ": generator produced infinite imbalance");
            continue;
        }
        Optimum opt = brute_force_optimum(it.game);
        for (const Rational& a : {golden_approx(), q(2)}) {
            HybridReport h = hybrid(it.game, a);
            Rational bound = welfare_lower_bound(a, st.imbalance, Extended(it.shape.m));
            t.record(h.chosen_welfare >= bound * opt.welfare, tag(it.seed, it.shape) + ", alpha=" + to_string(a));
        }
    }
    return {t.clean(), t.summary("hybrid runs")};
}

Outcome stabilizing_payments()
{
    Tally t;
    for (const CorpusItem& it : finite_gamma_corpus()) {
        Optimum opt = brute_force_optimum(it.game);
        PaymentPlan p = payment_stabilize(it.game, opt.profile, opt.welfare);
        const std::string where = tag(it.seed, it.shape);
        t.record(p.nu * opt.welfare <= p.intrinsic_total, where + ": nu OPT > A_T");
        t.record(augmented_max_factor(it.game, opt.profile, p.payments) <= Extended(1), where + ": not stabilized");
        for (const Rational& a : {golden_approx(), q(2)}) {
            HybridReport h = hybrid(it.game, a, opt.welfare);
            t.record(h.rho && p.nu <= *h.rho / (a - 1), where + ", alpha=" + to_string(a) + ": nu > rho/(alpha-1)");
        }
    }
    return {t.clean(), t.summary("checks")};
}

// -- 6 ----------------------------------------------------------------------

Outcome potential_audits()
{
    std::mt19937_64 rng(6);
    Tally audits;
    Tally runs;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Shape sh = shape_for(rng, 2, 10, 2, 5, 10'000'000);
        Game g = random_cc(sh.n, sh.m, seed);
        CcResult cc = cc_recover(g);
        if (!cc.ok()) {
            audits.record(false, tag(seed, sh) + ": no certificate (" + cc.failure->reason + ")");
            continue;
        }
        AuditReport a = ordinal_audit(g, *cc.certificate, 10000, seed);
        audits.record(a.passed() && a.checked == 10000, tag(seed, sh));
        for (int start = 0; start < 10; ++start) {
            DynamicsTrace tr = run_dynamics(g, random_profile(rng, sh.n, sh.m), MoveRule{});
            runs.record(tr.reason == Termination::converged, tag(seed, sh) + ", start " + std::to_string(start));
        }
    }
    return {audits.clean() && runs.clean(), audits.summary("audits of 10^4 deviations") + "; " + runs.summary("dynamics runs")};
}

// -- 7 ----------------------------------------------------------------------

Outcome symmetric_stability_price()
{
    std::mt19937_64 rng(7);
    Tally t;
    std::size_t with_ne = 0;
    for (std::uint64_t seed = 1; with_ne < 200 && seed <= 2000; ++seed) {
        Shape sh = shape_for(rng, 2, 7, 2, 4);
        Game g = random_symmetric(sh.n, sh.m, seed);
        EquilibriumCensus c = equilibrium_census(g, q(1));
        if (!c.exists())
            continue;
        ++with_ne;
        t.record(*c.price_of_stability <= Extended(2 - q(1, sh.m)), tag(seed, sh));
    }
    Outcome out{t.clean() && with_ne >= 200, t.summary("instances with an equilibrium")};
    for (int m : {3, 4, 5}) {
        EquilibriumCensus c = equilibrium_census(symmetric_pos_tight(m, q(1), q(1, 10000)), q(1));
        const Rational target = 2 - q(1, m) - q(1, 100);
        bool ok = c.price_of_stability && *c.price_of_stability >= Extended(target);
        out.pass = out.pass && ok;
        out.notes.push_back("tight family m=" + std::to_string(m) + ": PoS " +
                            (c.price_of_stability ? to_decimal(c.price_of_stability->value(), 5) : std::string("none")) +
                            ", need >= " + to_decimal(target, 5) + (ok ? "" : "  FAIL"));
    }
    return out;
}

// -- 8 ----------------------------------------------------------------------

Outcome sqrt2_construction()
{
    std::mt19937_64 rng(8);
    Tally t;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Shape sh = shape_for(rng, 1, 9, 3, 3);
        Game g = random_game(sh.n, 3, seed, {}, seed % 2 == 0);
        Profile s = sqrt2_three(g);
        DeviationReport r = deviation_report(g, s);
        bool ok = r.is_approx_equilibrium(q(141422, 100000));
        for (const BestResponse& br : r.players)
            ok = ok && !(br.utility * br.utility > 2 * br.current * br.current);
        t.record(ok, tag(seed, sh));
    }
    return {t.clean(), t.summary("instances")};
}

// -- 9 ----------------------------------------------------------------------

Outcome strong_equilibria()
{
    std::mt19937_64 rng(9);
    Tally two;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Shape sh = shape_for(rng, 1, 10, 2, 2);
        Game g = random_game(sh.n, 2, seed);
        two.record(verify_approx_strong(g, strong_two(g), q(1)).stable, tag(seed, sh));
    }
    Tally one_shot;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Shape sh = shape_for(rng, 2, 7, 2, 4, 20000);
        Game g = random_game(sh.n, sh.m, seed);
        Profile s = one_shot_alpha_br(g, static_cast<int>(rng() % sh.m), q(1)).profile;
        one_shot.record(verify_approx_strong(g, s, q(2)).stable, tag(seed, sh));
    }
    Tally welfare_floor;
    CensusOptions opts;
    opts.strong_flags = true;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Shape sh = shape_for(rng, 2, 6, 2, 3, 5000);
        Game g = random_symmetric(sh.n, sh.m, seed);
        EquilibriumCensus c = equilibrium_census(g, q(1), opts);
        for (const CensusEntry& e : c.equilibria)
            if (e.is_strong.value_or(false))
                welfare_floor.record(2 * e.welfare >= c.optimum.welfare, tag(seed, sh) + " at " + format_profile(e.profile));
    }
    return {two.clean() && one_shot.clean() && welfare_floor.clean(),
            "two-strategy: " + two.summary("instances") + "; one-shot at 2: " + one_shot.summary("instances") +
                "; symmetric: " + welfare_floor.summary("strong equilibria")};
}

// -- 10 ---------------------------------------------------------------------

Outcome generalized_models()
{
    Outcome out;
    for (const Rational& c : {q(3, 2), q(2), q(3)}) {
        Extended got = triangle_nonexistence_check(c);
        bool ok = got == Extended(c);
        out.pass = out.pass && ok;
        out.notes.push_back("triangle c=" + to_string(c) + ": min max factor " + to_string(got) + (ok ? "" : "  FAIL"));
    }

    std::mt19937_64 rng(10);
    Tally bounded;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Shape sh = shape_for(rng, 1, 6, 1, 3);
        const Rational r = seed % 2 == 0 ? q(2) : q(1);
        GeneralizedGame g = random_supermodular(sh.n, sh.m, r, seed);
        GeneralizedOneShot res = one_shot_generalized(g, static_cast<int>(rng() % sh.m));
        DeviationReport check = verify_generalized(g, res.profile);
        bounded.record(check.max_factor < Extended(r + 1) && check.is_approx_equilibrium(res.guarantee),
                       tag(seed, sh) + ", r=" + to_string(r));
    }

    Tally lex;
    std::size_t skipped = 0;
    for (const Rational& omega : {q(1, 2), q(3, 4), q(1)}) {
        std::size_t done = 0;
        for (std::uint64_t seed = 1; done < 100 && seed <= 1000; ++seed) {
            Shape sh = shape_for(rng, 2, 6, 2, 3);
            OmegaGame g = random_omega(sh.n, sh.m, omega, seed);
            LexResult res;
            try {
                res = lex_strong_eq(g);
            } catch (const ModelError&) {
                ++skipped;  // every profile co-locates a conflict pair
                continue;
            }
            ++done;
            lex.record(verify_omega_strong(g, res.profile, 1 / omega).stable,
                       tag(seed, sh) + ", omega=" + to_string(omega));
        }
        if (done < 100)
            lex.record(false, "omega=" + to_string(omega) + ": only " + std::to_string(done) + " feasible games");
    }
    out.pass = out.pass && bounded.clean() && lex.clean();
    out.detail = "bounded one-shot: " + bounded.summary("games") + "; lexicographic: " + lex.summary("games");
    if (skipped > 0)
        out.notes.push_back(std::to_string(skipped) + " omega games without a feasible profile were redrawn");
    return out;
}

// -- 11 ---------------------------------------------------------------------

Outcome anarchy_price()
{
    std::mt19937_64 rng(11);
    Tally smooth;
    Tally floor;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Shape sh = shape_for(rng, 1, 7, 1, 4, 20000);
        Game g = random_game(sh.n, sh.m, seed, {}, seed % 3 == 0);
        EquilibriumCensus c = equilibrium_census(g, q(1));
        for (int trial = 0; trial < 5; ++trial)
            smooth.record(semi_smoothness_check(g, random_profile(rng, sh.n, sh.m), c.optimum.welfare), tag(seed, sh));
        for (const CensusEntry& e : c.equilibria)
            floor.record(e.welfare * sh.m >= c.optimum.welfare, tag(seed, sh) + " at " + format_profile(e.profile));
    }
    return {smooth.clean() && floor.clean() && smooth.checked >= 1000,
            "semi-smoothness: " + smooth.summary("pairs") + "; welfare floor: " + floor.summary("equilibria")};
}

// -- observation --------------------------------------------------------------

std::vector<std::string> stability_price_family()
{
    std::vector<std::string> lines;
    for (int m : {2, 3, 4, 5}) {
        EquilibriumCensus c = equilibrium_census(prop5(m, q(1), q(1, 100)), q(1));
        std::string pos = c.price_of_stability ? to_decimal(c.price_of_stability->value(), 4) : "none";
        lines.push_back("prop5 family m=" + std::to_string(m) + " r=1 eps=1/100: " +
                        std::to_string(c.equilibria.size()) + " equilibria, PoS " + pos);
    }
    return lines;
}

struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double time_limit_s;  // 0: none
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance checks"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-11)")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "welfare fraction table", welfare_table, 1.0},
        {2, "three-player game without equilibrium", example_without_equilibrium, 1.0},
        {3, "one-shot stability factor", one_shot_stability, 60.0},
        {4, "hybrid welfare fraction", hybrid_welfare, 0},
        {5, "stabilizing payments", stabilizing_payments, 0},
        {6, "ordinal potential and convergence", potential_audits, 0},
        {7, "symmetric price of stability", symmetric_stability_price, 0},
        {8, "sqrt(2) construction", sqrt2_construction, 0},
        {9, "strong equilibria", strong_equilibria, 0},
        {10, "generalized utilities", generalized_models, 0},
        {11, "price of anarchy", anarchy_price, 0},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only)
            continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what(), {}};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            out.pass = false;
            out.notes.push_back("time limit " + std::to_string(c.time_limit_s) + " s exceeded");
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << "criterion " << c.id << " " << (out.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << out.detail
                  << " [" << timing << "]\n";
        for (const std::string& n : out.notes)
            std::cout << "    " << n << "\n";
        failed += !out.pass;
    }
    if (only == 0)
        for (const std::string& line : stability_price_family())
            std::cout << "note: " << line << "\n";
    std::cout.flush();
    return failed == 0 ? 0 : 1;
}
