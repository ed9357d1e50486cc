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

// scg: command-line front end for generating, solving and checking social
// coordination games.
//
// Exit codes: 0 success, 2 argument or parse error, 3 instance too large to
// enumerate, 4 verification failed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "scg/analysis.hpp"
#include "scg/dynamics.hpp"
#include "scg/error.hpp"
#include "scg/generalized.hpp"
#include "scg/generators.hpp"
#include "scg/instance_io.hpp"
#include "scg/potentials.hpp"
#include "scg/reports.hpp"

namespace {

using namespace scg;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kTooLarge = 3;
constexpr int kFailed = 4;

struct Options {
    std::string in;
    std::string out;
    std::string alpha;
    std::string gamma;
    std::string m_list;
    std::string profile;
    std::string format;
    std::string trace;
    std::uint64_t seed = 1;
    int k0 = 1;
    bool opt_oracle = false;

    // gen
    std::string kind;
    int n = 4;
    int m = 3;
    std::string r = "1";
    std::string eps = "1/100";
    std::string c = "2";
    std::string omega = "1";
    long max_num = 10;
    long max_den = 4;
    long max_gamma = 4;
    int hyperedges = 6;
    bool interior = false;

    // solve / verify
    std::string algorithm;
    std::string check;

    // census
    bool strong = false;
    bool all_rows = false;

    // bounds
    bool asymptotic = false;
    std::string alpha_range;

    // audit-potential
    std::size_t trials = 10000;
    bool exhaustive = false;
    std::string certificate;

    // search-no-sne
    int search_players = 4;
    int search_count = 200;
};

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty())
        std::cout << text;
    else
        save_text(o.out, text);
}

std::string require_input(const Options& o)
{
    if (o.in.empty())
        throw ArgumentError("--in PATH is required");
    return load_text(o.in);
}

std::string expect_type(const std::string& text, const std::string& wanted)
{
    std::string type = instance_type(text);
    if (type != wanted)
        throw ArgumentError("this command needs a \"" + wanted + "\" instance, got \"" + type + "\"");
    return text;
}

Rational alpha_or(const Options& o, const Rational& fallback)
{
    return o.alpha.empty() ? fallback : parse_rational(o.alpha);
}

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            parts.push_back(item);
    return parts;
}

Extended parse_m(const std::string& text)
{
    Extended m = parse_extended(text);
    if (!m.is_infinite() && (m.value().get_den() != 1 || m.value() < 1))
        throw ArgumentError("--m takes positive integers or inf");
    return m;
}

int strategy_index(int label, int strategies)
{
    if (label < 1 || label > strategies)
        throw ArgumentError("--k0 must lie in 1.." + std::to_string(strategies));
    return label - 1;
}

bool want_csv(const Options& o)
{
    if (o.format.empty() || o.format == "json")
        return false;
    if (o.format == "csv")
        return true;
    throw ArgumentError("--format takes json or csv");
}

// ---------------------------------------------------------------------------

int run_gen(const Options& o)
{
    const WeightRange range{o.max_num, o.max_den};
    const std::string& k = o.kind;
    if (k == "example1")
        emit(o, serialize_instance(example1(parse_rational(o.r))));
    else if (k == "prop5")
        emit(o, serialize_instance(prop5(o.m, parse_rational(o.r), parse_rational(o.eps))));
    else if (k == "symmetric_pos_tight")
        emit(o, serialize_instance(symmetric_pos_tight(o.m, parse_rational(o.r), parse_rational(o.eps))));
    else if (k == "triangle_c")
        emit(o, serialize_generalized(triangle_c(parse_rational(o.c))));
    else if (k == "random")
        emit(o, serialize_instance(random_game(o.n, o.m, o.seed, range, o.interior)));
    else if (k == "random_cc")
        emit(o, serialize_instance(random_cc(o.n, o.m, o.seed, o.max_gamma, range)));
    else if (k == "random_symmetric")
        emit(o, serialize_instance(random_symmetric(o.n, o.m, o.seed, range)));
    else if (k == "random_supermodular")
        emit(o, serialize_generalized(random_supermodular(o.n, o.m, parse_rational(o.r), o.seed, range)));
    else if (k == "random_omega")
        emit(o, serialize_omega(random_omega(o.n, o.m, parse_rational(o.omega), o.seed)));
    else if (k == "random_hypergraph_cc")
        emit(o, serialize_hypergraph(random_hypergraph_cc(o.n, o.m, o.seed, o.hyperedges, o.max_gamma)));
    else
        throw ArgumentError("unknown generator '" + k + "'");
    return kOk;
}

std::string with_factor(const std::string& report, const std::string& factor)
{
    auto doc = nlohmann::ordered_json::parse(report);
    doc["factor"] = factor;
    return doc.dump(2) + "\n";
}

int run_solve(const Options& o)
{
    const std::string text = require_input(o);
    const std::string& a = o.algorithm;

    if (a == "lexstrong") {
        OmegaGame g = parse_omega(expect_type(text, "omega"));
        LexResult r = lex_strong_eq(g);
        const Rational factor = 1 / g.omega();
        StrongDeviationReport check = verify_omega_strong(g, r.profile, factor);
        emit(o, lex_json(r, check, factor));
        return check.stable ? kOk : kFailed;
    }
    if (a == "oneshot-gen") {
        GeneralizedGame g = parse_generalized(expect_type(text, "generalized"));
        GeneralizedOneShot r = one_shot_generalized(g, strategy_index(o.k0, g.strategies()));
        DeviationReport check = verify_generalized(g, r.profile);
        if (!o.trace.empty())
            save_text(o.trace, trace_to_jsonl(r.trace));
        emit(o, generalized_json(r, check));
        return check.is_approx_equilibrium(r.guarantee) ? kOk : kFailed;
    }

    Game g = parse_instance(expect_type(text, "scg"));
    auto finish = [&](const std::string& name, const Profile& s, const std::string& factor) {
        emit(o, with_factor(profile_json(name, s, welfare(g, s).total), factor));
        return kOk;
    };
    if (a == "algorithm1") {
        Profile start = o.profile.empty() ? all_at(g.players(), 0) : parse_profile(o.profile, g.players(), g.strategies());
        return finish(a, algorithm1_two(g, start), "1");
    }
    if (a == "strong2")
        return finish(a, strong_two(g), "1");
    if (a == "sqrt2")
        return finish(a, sqrt2_three(g), "141422/100000");
    if (a == "oneshot") {
        const Rational alpha = alpha_or(o, Rational(1));
        OneShotResult r = one_shot_alpha_br(g, strategy_index(o.k0, g.strategies()), alpha);
        if (!o.trace.empty())
            save_text(o.trace, trace_to_jsonl(r.trace));
        return finish(a, r.profile, to_string(std::max(alpha, Rational(1 / alpha + 1))));
    }
    if (a == "hybrid") {
        const Rational alpha = alpha_or(o, golden_approx());
        std::optional<Rational> opt;
        if (o.opt_oracle)
            opt = brute_force_optimum(g).welfare;
        HybridReport r = hybrid(g, alpha, opt);
        emit(o, with_factor(hybrid_json(r), to_string(alpha)));
        return kOk;
    }
    throw ArgumentError("unknown algorithm '" + a + "'");
}

int run_verify(const Options& o)
{
    const std::string text = require_input(o);
    if (o.profile.empty())
        throw ArgumentError("--profile is required");
    const Rational alpha = alpha_or(o, Rational(1));

    if (o.check == "generalized") {
        GeneralizedGame g = parse_generalized(expect_type(text, "generalized"));
        Profile s = parse_profile(o.profile, g.players(), g.strategies());
        DeviationReport r = verify_generalized(g, s);
        emit(o, deviation_json(r, s, alpha));
        return r.is_approx_equilibrium(alpha) ? kOk : kFailed;
    }
    if (o.check == "strong" && instance_type(text) == "omega") {
        OmegaGame g = parse_omega(text);
        Profile s = parse_profile(o.profile, g.players(), g.strategies());
        StrongDeviationReport r = verify_omega_strong(g, s, alpha);
        emit(o, strong_json(r, s, alpha));
        return r.stable ? kOk : kFailed;
    }
    Game g = parse_instance(expect_type(text, "scg"));
    Profile s = parse_profile(o.profile, g.players(), g.strategies());
    if (o.check == "nash") {
        DeviationReport r = deviation_report(g, s);
        emit(o, deviation_json(r, s, alpha));
        return r.is_approx_equilibrium(alpha) ? kOk : kFailed;
    }
    if (o.check == "strong") {
        StrongDeviationReport r = verify_approx_strong(g, s, alpha);
        emit(o, strong_json(r, s, alpha));
        return r.stable ? kOk : kFailed;
    }
    throw ArgumentError("unknown check '" + o.check + "'");
}

int run_census(const Options& o)
{
    Game g = parse_instance(expect_type(require_input(o), "scg"));
    CensusOptions opts;
    opts.strong_flags = o.strong;
    opts.keep_all_rows = o.all_rows;
    EquilibriumCensus c = equilibrium_census(g, alpha_or(o, Rational(1)), opts);
    emit(o, want_csv(o) ? census_csv(c) : census_json(c));
    return kOk;
}

int run_payments(const Options& o)
{
    Game g = parse_instance(expect_type(require_input(o), "scg"));
    Optimum opt = brute_force_optimum(g);
    Profile s = o.profile.empty() ? opt.profile : parse_profile(o.profile, g.players(), g.strategies());
    PaymentPlan p = payment_stabilize(g, s, opt.welfare);
    emit(o, want_csv(o) ? payments_csv(p, s) : payments_json(p, s));
    return kOk;
}

int run_bounds(const Options& o)
{
    std::vector<Rational> alphas;
    std::vector<Extended> gammas;
    std::vector<Extended> ms;
    for (const auto& a : split(o.alpha))
        alphas.push_back(parse_rational(a));
    if (!o.alpha_range.empty()) {
        // lo:hi:count, evenly spaced and inclusive.
        auto first = o.alpha_range.find(':');
        auto second = o.alpha_range.find(':', first == std::string::npos ? first : first + 1);
        if (first == std::string::npos || second == std::string::npos)
            throw ArgumentError("--alpha-range takes lo:hi:count");
        Rational lo = parse_rational(o.alpha_range.substr(0, first));
        Rational hi = parse_rational(o.alpha_range.substr(first + 1, second - first - 1));
        long count = std::stol(o.alpha_range.substr(second + 1));
        if (count < 2 || hi < lo)
            throw ArgumentError("--alpha-range needs count >= 2 and lo <= hi");
        for (long x = 0; x < count; ++x)
            alphas.push_back(lo + (hi - lo) * Rational(x) / Rational(count - 1));
    }
    for (const auto& g : split(o.gamma))
        gammas.push_back(parse_extended(g));
    for (const auto& m : split(o.m_list))
        ms.push_back(parse_m(m));
    if (o.asymptotic)
        ms.push_back(Extended::infinity());

    const bool single_point = alphas.size() == 1 && gammas.size() == 1 && ms.size() == 1 && o.format.empty();
    if (alphas.empty())
        alphas = {Rational(2), golden_approx()};
    if (gammas.empty())
        gammas = {Extended(1), Extended(2), Extended(10)};
    if (ms.empty())
        ms = {Extended(4), Extended::infinity()};

    std::vector<BoundRow> rows = bounds_table(alphas, gammas, ms);
    if (single_point)
        emit(o, to_string(rows.front().fraction) + "\n");
    else if (o.format == "json")
        emit(o, bounds_json(rows));
    else if (o.format.empty() || o.format == "csv")
        emit(o, bounds_csv(rows));
    else
        throw ArgumentError("--format takes json or csv");
    return kOk;
}

int run_audit(const Options& o)
{
    const std::string text = require_input(o);
    const std::string type = instance_type(text);
    if (type == "hypergraph") {
        HypergraphGame h = parse_hypergraph(text);
        CcResult r = hypergraph_cc_recover(h);
        if (!r.ok()) {
            emit(o, cc_failure_json(*r.failure));
            return kFailed;
        }
        AuditReport a = o.exhaustive ? hypergraph_exhaustive_audit(h, *r.certificate)
                                     : hypergraph_ordinal_audit(h, *r.certificate, o.trials, o.seed);
        emit(o, audit_json(a, *r.certificate));
        return a.passed() ? kOk : kFailed;
    }
    Game g = parse_instance(expect_type(text, "scg"));
    PotentialCertificate cert;
    if (!o.certificate.empty()) {
        cert = certificate_from_json(load_text(o.certificate), g);
    } else {
        CcResult r = cc_recover(g);
        if (!r.ok()) {
            emit(o, cc_failure_json(*r.failure));
            return kFailed;
        }
        cert = *r.certificate;
    }
    AuditReport a = o.exhaustive ? exhaustive_audit(g, cert) : ordinal_audit(g, cert, o.trials, o.seed);
    emit(o, audit_json(a, cert));
    return a.passed() ? kOk : kFailed;
}

int run_search(const Options& o)
{
    // Random symmetric three-strategy instances; report the first without a strong equilibrium.
    CensusOptions opts;
    opts.strong_flags = true;
    for (int t = 0; t < o.search_count; ++t) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(t);
        Game g = random_symmetric(o.search_players, 3, seed, {o.max_num, o.max_den});
        EquilibriumCensus c = equilibrium_census(g, Rational(1), opts);
        bool any_strong = std::any_of(c.equilibria.begin(), c.equilibria.end(),
                                      [](const CensusEntry& e) { return e.is_strong.value_or(false); });
        if (!any_strong) {
            std::cerr << "seed " << seed << ": " << c.equilibria.size() << " Nash equilibria, none strong\n";
            emit(o, serialize_instance(g));
            return kOk;
        }
    }
    std::cerr << "no instance without a strong equilibrium among " << o.search_count << " seeds\n";
    return kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Social coordination games: generators, solvers and verifiers"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_in = [&](CLI::App* cmd) { cmd->add_option("--in", o.in, "Instance JSON file"); };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "Write the result here instead of stdout"); };

    CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("kind", o.kind,
                    "example1 | prop5 | symmetric_pos_tight | triangle_c | random | random_cc | "
                    "random_symmetric | random_supermodular | random_omega | random_hypergraph_cc")
        ->required();
    gen->add_option("--n", o.n, "Players (random families)");
    gen->add_option("--m", o.m, "Strategies");
    gen->add_option("--r", o.r, "Scale r (rational)");
    gen->add_option("--eps", o.eps, "epsilon (rational)");
    gen->add_option("--c", o.c, "Triangle factor c (rational)");
    gen->add_option("--omega", o.omega, "omega in [1/2, 1]");
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("--max-num", o.max_num, "Largest weight numerator");
    gen->add_option("--max-den", o.max_den, "Largest weight denominator");
    gen->add_option("--max-gamma", o.max_gamma, "Largest gamma for CC families");
    gen->add_option("--hyperedges", o.hyperedges, "Extra hyperedges for random_hypergraph_cc");
    gen->add_flag("--interior", o.interior, "Draw shares strictly inside (0, 1)");
    add_out(gen);
    gen->callback([&] { action = [&] { return run_gen(o); }; });

    CLI::App* solve = app.add_subcommand("solve", "Run a construction");
    solve->add_option("algorithm", o.algorithm, "algorithm1 | strong2 | sqrt2 | oneshot | hybrid | lexstrong | oneshot-gen")
        ->required();
    add_in(solve);
    add_out(solve);
    solve->add_option("--alpha", o.alpha, "Gate alpha (p/q)");
    solve->add_option("--k0", o.k0, "Starting strategy for one-shot runs (1-based)");
    solve->add_option("--profile", o.profile, "Start profile for algorithm1");
    solve->add_option("--trace", o.trace, "Write the move trace as JSON lines");
    solve->add_flag("--opt-oracle", o.opt_oracle, "Compute the optimum by enumeration and report rho");
    solve->callback([&] { action = [&] { return run_solve(o); }; });

    CLI::App* verify = app.add_subcommand("verify", "Check a profile");
    verify->add_option("check", o.check, "nash | strong | generalized")->required();
    add_in(verify);
    add_out(verify);
    verify->add_option("--profile", o.profile, "Profile, comma-separated 1-based strategies");
    verify->add_option("--alpha", o.alpha, "Approximation factor (default 1)");
    verify->callback([&] { action = [&] { return run_verify(o); }; });

    CLI::App* census = app.add_subcommand("census", "Enumerate all approximate equilibria");
    add_in(census);
    add_out(census);
    census->add_option("--alpha", o.alpha, "Approximation factor (default 1)");
    census->add_flag("--strong", o.strong, "Flag which equilibria are strong");
    census->add_flag("--all", o.all_rows, "One row per profile");
    census->add_option("--format", o.format, "json | csv");
    census->callback([&] { action = [&] { return run_census(o); }; });

    CLI::App* payments = app.add_subcommand("payments", "Payments that stabilize a profile");
    add_in(payments);
    add_out(payments);
    payments->add_option("--profile", o.profile, "Profile to stabilize (default: the optimum)");
    payments->add_option("--format", o.format, "json | csv");
    payments->callback([&] { action = [&] { return run_payments(o); }; });

    CLI::App* bounds = app.add_subcommand("bounds", "Guaranteed welfare fractions of the hybrid algorithm");
    add_out(bounds);
    bounds->add_option("--alpha", o.alpha, "Comma-separated alphas");
    bounds->add_option("--alpha-range", o.alpha_range, "lo:hi:count evenly spaced alphas");
    bounds->add_option("--gamma", o.gamma, "Comma-separated imbalances (rational or inf)");
    bounds->add_option("--m", o.m_list, "Comma-separated strategy counts (integer or inf)");
    bounds->add_flag("--asymptotic", o.asymptotic, "Add the m -> inf limit");
    bounds->add_option("--format", o.format, "csv | json");
    bounds->callback([&] { action = [&] { return run_bounds(o); }; });

    CLI::App* audit = app.add_subcommand("audit-potential", "Recover gamma and audit the potential");
    add_in(audit);
    add_out(audit);
    audit->add_option("--trials", o.trials, "Sampled deviations");
    audit->add_option("--seed", o.seed, "Sampling seed");
    audit->add_option("--certificate", o.certificate, "Audit this gamma array instead of recovering one");
    audit->add_flag("--exhaustive", o.exhaustive, "Check every single deviation");
    audit->callback([&] { action = [&] { return run_audit(o); }; });

    CLI::App* search = app.add_subcommand("search-no-sne", "Scan random symmetric 3-strategy games for one without a strong equilibrium");
    add_out(search);
    search->add_option("--n", o.search_players, "Players");
    search->add_option("--trials", o.search_count, "Seeds to scan");
    search->add_option("--seed", o.seed, "First seed");
    search->add_option("--max-num", o.max_num, "Largest weight numerator");
    search->add_option("--max-den", o.max_den, "Largest weight denominator");
    search->callback([&] { action = [&] { return run_search(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kTooLarge;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
