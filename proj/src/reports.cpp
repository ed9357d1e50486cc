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

#include "scg/reports.hpp"

#include "json_util.hpp"

namespace scg {

using detail::json;

namespace {

json extended_json(const Extended& v)
{
    return to_string(v);
}

json rationals(const std::vector<Rational>& values)
{
    json arr = json::array();
    for (const auto& v : values)
        arr.push_back(detail::rational_json(v));
    return arr;
}

json entry_json(const CensusEntry& e)
{
    json row = {{"profile", format_profile(e.profile)},
                {"welfare", detail::rational_json(e.welfare)},
                {"max_factor", extended_json(e.max_factor)},
                {"is_nash", e.is_equilibrium}};
    if (e.is_strong)
        row["is_strong"] = *e.is_strong;
    return row;
}

std::string dump(const json& doc)
{
    return doc.dump(2) + "\n";
}

} // namespace

std::string csv_field(const std::string& value)
{
    if (value.find_first_of(",\"\r\n") == std::string::npos)
        return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string census_csv(const EquilibriumCensus& census)
{
    std::string out = "profile,welfare,max_factor,is_nash,is_strong\r\n";
    const auto& rows = census.rows.empty() ? census.equilibria : census.rows;
    for (const auto& e : rows) {
        out += csv_field(format_profile(e.profile)) + "," + to_string(e.welfare) + "," + to_string(e.max_factor) +
               "," + (e.is_equilibrium ? "true" : "false") + "," +
               (e.is_strong ? (*e.is_strong ? "true" : "false") : "") + "\r\n";
    }
    return out;
}

std::string census_json(const EquilibriumCensus& census)
{
    json doc;
    doc["alpha"] = detail::rational_json(census.alpha);
    doc["optimum"] = {{"profile", format_profile(census.optimum.profile)},
                      {"welfare", detail::rational_json(census.optimum.welfare)}};
    doc["exists"] = census.exists();
    doc["count"] = census.equilibria.size();
    doc["min_max_factor"] = extended_json(census.min_max_factor);
    doc["price_of_anarchy"] = census.price_of_anarchy ? extended_json(*census.price_of_anarchy) : json(nullptr);
    doc["price_of_stability"] = census.price_of_stability ? extended_json(*census.price_of_stability) : json(nullptr);
    json eq = json::array();
    for (const auto& e : census.equilibria)
        eq.push_back(entry_json(e));
    doc["equilibria"] = std::move(eq);
    if (!census.rows.empty()) {
        json rows = json::array();
        for (const auto& e : census.rows)
            rows.push_back(entry_json(e));
        doc["rows"] = std::move(rows);
    }
    return dump(doc);
}

std::string deviation_json(const DeviationReport& report, const Profile& s, const Rational& alpha)
{
    json doc;
    doc["profile"] = format_profile(s);
    doc["alpha"] = detail::rational_json(alpha);
    doc["stable"] = report.is_approx_equilibrium(alpha);
    doc["max_factor"] = extended_json(report.max_factor);
    doc["max_factor_decimal"] =
        report.max_factor.is_infinite() ? std::string("inf") : to_decimal(report.max_factor.value(), 6);
    doc["witness"] = report.witness;
    json players = json::array();
    for (std::size_t i = 0; i < report.players.size(); ++i) {
        const auto& br = report.players[i];
        players.push_back({{"player", i},
                           {"current", detail::rational_json(br.current)},
                           {"best_strategy", br.strategy + 1},
                           {"best_utility", detail::rational_json(br.utility)},
                           {"factor", extended_json(br.factor)}});
    }
    doc["players"] = std::move(players);
    return dump(doc);
}

std::string strong_json(const StrongDeviationReport& report, const Profile& s, const Rational& alpha)
{
    json doc;
    doc["profile"] = format_profile(s);
    doc["alpha"] = detail::rational_json(alpha);
    doc["stable"] = report.stable;
    doc["checked"] = report.checked;
    if (!report.stable) {
        json factors = json::array();
        for (const auto& f : report.factors)
            factors.push_back(extended_json(f));
        doc["witness"] = {{"alternative", format_profile(report.alternative)},
                          {"coalition", report.coalition},
                          {"factors", std::move(factors)}};
    }
    return dump(doc);
}

std::string payments_csv(const PaymentPlan& plan, const Profile& s)
{
    std::string out = "player,strategy,target,payment\r\n";
    for (std::size_t i = 0; i < plan.payments.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(s[i] + 1) + "," + std::to_string(plan.targets[i] + 1) + "," +
               to_string(plan.payments[i]) + "\r\n";
    return out;
}

std::string payments_json(const PaymentPlan& plan, const Profile& s)
{
    json doc;
    doc["profile"] = format_profile(s);
    doc["payments"] = rationals(plan.payments);
    json targets = json::array();
    for (int t : plan.targets)
        targets.push_back(t + 1);
    doc["targets"] = std::move(targets);
    doc["total"] = detail::rational_json(plan.total);
    doc["optimum_welfare"] = detail::rational_json(plan.optimum_welfare);
    doc["nu"] = detail::rational_json(plan.nu);
    doc["intrinsic_total"] = detail::rational_json(plan.intrinsic_total);
    doc["within_intrinsic_bound"] = plan.within_intrinsic_bound;
    return dump(doc);
}

std::string hybrid_json(const HybridReport& r)
{
    json doc;
    doc["alpha"] = detail::rational_json(r.alpha);
    doc["complement_alpha"] = detail::rational_json(r.complement_alpha);
    doc["start_strategy"] = r.start_strategy + 1;
    doc["first"] = {{"profile", format_profile(r.first.profile)},
                    {"welfare", detail::rational_json(r.first_welfare)},
                    {"moves", r.first.trace.moves.size()}};
    doc["second"] = {{"profile", format_profile(r.second.profile)},
                     {"welfare", detail::rational_json(r.second_welfare)},
                     {"moves", r.second.trace.moves.size()}};
    doc["chosen"] = format_profile(r.chosen);
    doc["chosen_welfare"] = detail::rational_json(r.chosen_welfare);
    if (r.optimum_welfare)
        doc["optimum_welfare"] = detail::rational_json(*r.optimum_welfare);
    if (r.rho)
        doc["rho"] = detail::rational_json(*r.rho);
    return dump(doc);
}

std::string profile_json(const std::string& algorithm, const Profile& s, const Rational& welfare)
{
    json doc = {{"algorithm", algorithm}, {"profile", format_profile(s)}, {"welfare", detail::rational_json(welfare)}};
    return dump(doc);
}

std::vector<BoundRow> bounds_table(const std::vector<Rational>& alphas, const std::vector<Extended>& gammas,
                                   const std::vector<Extended>& ms)
{
    std::vector<BoundRow> rows;
    for (const auto& a : alphas)
        for (const auto& g : gammas)
            for (const auto& m : ms)
                rows.push_back({a, g, m, welfare_lower_bound(a, g, m)});
    return rows;
}

std::string bounds_csv(const std::vector<BoundRow>& rows)
{
    std::string out = "alpha,gamma,m,fraction,decimal\r\n";
    for (const auto& r : rows)
        out += to_string(r.alpha) + "," + to_string(r.gamma) + "," + to_string(r.m) + "," + to_string(r.fraction) +
               "," + to_decimal(r.fraction, 4) + "\r\n";
    return out;
}

std::string bounds_json(const std::vector<BoundRow>& rows)
{
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back({{"alpha", detail::rational_json(r.alpha)},
                       {"gamma", extended_json(r.gamma)},
                       {"m", extended_json(r.m)},
                       {"fraction", detail::rational_json(r.fraction)},
                       {"decimal", to_decimal(r.fraction, 4)}});
    return dump(arr);
}

std::string audit_json(const AuditReport& report, const PotentialCertificate& cert)
{
    json doc;
    doc["gamma"] = rationals(cert.gamma);
    doc["checked"] = report.checked;
    doc["violations"] = report.violations;
    if (report.first)
        doc["counterexample"] = {{"profile", format_profile(report.first->profile)},
                                 {"player", report.first->player},
                                 {"to", report.first->to + 1},
                                 {"delta_utility", detail::rational_json(report.first->delta_utility)},
                                 {"delta_potential", detail::rational_json(report.first->delta_potential)}};
    return dump(doc);
}

std::string cc_failure_json(const CcFailure& failure)
{
    json doc = {{"consistent", false}, {"edge", failure.edge}, {"reason", failure.reason}};
    return dump(doc);
}

std::string lex_json(const LexResult& result, const StrongDeviationReport& check, const Rational& factor)
{
    json doc;
    doc["profile"] = format_profile(result.profile);
    doc["potential"] = rationals(result.potential);
    doc["feasible_states"] = result.feasible_states;
    doc["factor"] = detail::rational_json(factor);
    doc["verified"] = check.stable;
    doc["checked"] = check.checked;
    return dump(doc);
}

std::string generalized_json(const GeneralizedOneShot& result, const DeviationReport& check)
{
    json doc;
    doc["profile"] = format_profile(result.profile);
    doc["r"] = extended_json(result.r);
    doc["alpha_used"] = detail::rational_json(result.alpha_used);
    doc["guarantee"] = detail::rational_json(result.guarantee);
    doc["max_factor"] = extended_json(check.max_factor);
    doc["verified"] = check.is_approx_equilibrium(result.guarantee);
    doc["moves"] = result.trace.moves.size();
    return dump(doc);
}

} // namespace scg
