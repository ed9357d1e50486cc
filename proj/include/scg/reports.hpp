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

// JSON and CSV renderings of analysis results. Profiles are printed with 1-based
// strategy labels ("1,2,3"); rationals as canonical "p/q" strings; factors may be "inf".

#include <string>
#include <vector>

#include "scg/analysis.hpp"
#include "scg/dynamics.hpp"
#include "scg/generalized.hpp"
#include "scg/potentials.hpp"

namespace scg {

/// RFC 4180 field quoting.
std::string csv_field(const std::string& value);

/// Columns: profile, welfare, max_factor, is_nash, is_strong. Uses census.rows when
/// populated, else the equilibria.
std::string census_csv(const EquilibriumCensus& census);
std::string census_json(const EquilibriumCensus& census);

std::string deviation_json(const DeviationReport& report, const Profile& s, const Rational& alpha);
std::string strong_json(const StrongDeviationReport& report, const Profile& s, const Rational& alpha);

/// Columns: player, strategy, target, payment.
std::string payments_csv(const PaymentPlan& plan, const Profile& s);
std::string payments_json(const PaymentPlan& plan, const Profile& s);

std::string hybrid_json(const HybridReport& report);
std::string profile_json(const std::string& algorithm, const Profile& s, const Rational& welfare);

struct BoundRow {
    Rational alpha;
    Extended gamma;
    Extended m;
    Rational fraction;
};

/// Every combination in argument order (alpha outermost).
std::vector<BoundRow> bounds_table(const std::vector<Rational>& alphas, const std::vector<Extended>& gammas,
                                   const std::vector<Extended>& ms);

/// Columns: alpha, gamma, m, fraction, decimal (4 places).
std::string bounds_csv(const std::vector<BoundRow>& rows);
std::string bounds_json(const std::vector<BoundRow>& rows);

std::string audit_json(const AuditReport& report, const PotentialCertificate& cert);
std::string cc_failure_json(const CcFailure& failure);

std::string lex_json(const LexResult& result, const StrongDeviationReport& check, const Rational& factor);
std::string generalized_json(const GeneralizedOneShot& result, const DeviationReport& check);

} // namespace scg
