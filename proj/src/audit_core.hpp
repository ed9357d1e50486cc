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

// Ordinal potential audit over abstract delta oracles, shared by the pairwise and
// hypergraph models.

#include <cstdint>
#include <random>

#include "scg/analysis.hpp"
#include "scg/potentials.hpp"

namespace scg::detail {

inline int sign(const Rational& v)
{
    return sgn(v);
}

template <class DeltaU, class DeltaPhi>
bool audit_one(AuditReport& report, const Profile& s, int i, int k, DeltaU& du, DeltaPhi& dp)
{
    ++report.checked;
    Rational a = du(s, i, k);
    Rational b = dp(s, i, k);
    if (sign(a) == sign(b))
        return true;
    if (report.violations++ == 0)
        report.first = AuditViolation{s, i, k, std::move(a), std::move(b)};
    return false;
}

template <class DeltaU, class DeltaPhi>
AuditReport audit_sampled(int n, int m, std::size_t trials, std::uint64_t seed, DeltaU du, DeltaPhi dp)
{
    std::mt19937_64 rng(seed);
    AuditReport report;
    Profile s(n);
    for (std::size_t t = 0; t < trials; ++t) {
        for (int& v : s)
            v = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
        int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int k = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
        audit_one(report, s, i, k, du, dp);
    }
    return report;
}

template <class DeltaU, class DeltaPhi>
AuditReport audit_exhaustive(int n, int m, DeltaU du, DeltaPhi dp)
{
    require_enumerable(n, m);
    AuditReport report;
    Profile s(n, 0);
    do {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k)
                audit_one(report, s, i, k, du, dp);
    } while (next_profile(s, m));
    return report;
}

} // namespace scg::detail
