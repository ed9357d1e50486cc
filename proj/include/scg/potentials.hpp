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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scg/game.hpp"
#include "scg/rational.hpp"

namespace scg {

/// Positive weights gamma_i with share_ij = gamma_i / (gamma_i + gamma_j) on every
/// positive-weight edge. Scaled so each component's smallest entry is 1.
struct PotentialCertificate {
    std::vector<Rational> gamma;
    std::vector<int> component;     // component id per player
    std::vector<bool> constrained;  // per component: touched by a positive-weight edge
};

struct CcFailure {
    std::size_t edge = 0;  // index into the instance's edge list
    std::string reason;
};

struct CcResult {
    std::optional<PotentialCertificate> certificate;
    std::optional<CcFailure> failure;

    bool ok() const { return certificate.has_value(); }
};

/// Spanning-tree propagation per component of the positive-weight graph, then an
/// exact check of every remaining edge.
CcResult cc_recover(const Game& game);

/// Sum_i w_i^{s_i} / gamma_i + Sum over co-located edges w(i,j) / (gamma_i + gamma_j).
Rational potential_value(const Game& game, const Profile& s, const PotentialCertificate& cert);

/// Change in potential_value when player i alone moves to k.
Rational potential_delta(const Game& game, const Profile& s, int i, int k, const PotentialCertificate& cert);

struct AuditViolation {
    Profile profile;
    int player = 0;
    int to = 0;
    Rational delta_utility;
    Rational delta_potential;
};

struct AuditReport {
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::optional<AuditViolation> first;

    bool passed() const { return violations == 0; }
};

/// Samples (profile, player, strategy) triples from mt19937_64(seed) and checks
/// sign(delta u_i) == sign(delta Phi) on each.
AuditReport ordinal_audit(const Game& game, const PotentialCertificate& cert, std::size_t trials,
                          std::uint64_t seed);

/// Same check on every single deviation of every profile (m^n * n * m cases).
AuditReport exhaustive_audit(const Game& game, const PotentialCertificate& cert);

/// JSON array of rational strings.
std::string certificate_to_json(const PotentialCertificate& cert);
/// Reads the array form; component data is rebuilt from the game's positive-weight graph.
PotentialCertificate certificate_from_json(std::string_view text, const Game& game);

} // namespace scg
