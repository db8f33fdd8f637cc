/*
 * Copyright (c) 2026, The wflag Authors.
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

// JSON forms of series, quadric sets, strata and search candidates. Exact
// numbers are written as decimal or "p/q" strings.

#include <string>

#include <nlohmann/json.hpp>

#include "wflag/equations.hpp"
#include "wflag/search.hpp"
#include "wflag/series.hpp"
#include "wflag/wps.hpp"

namespace wflag {

using Json = nlohmann::json;

/// {"numerator": [[exp, "coeff"], ...], "denominator_weights": [...], "dim": d}
Json series_to_json(const HilbertSeries& hs);
HilbertSeries series_from_json(const Json& j);

/// "fnv1a64:<hex>" over the term listing of a "polynomials" array.
std::string polynomials_checksum(const Json& polynomials);

/// Schema "wflag-quadrics/1". Exponent vectors are written as lists of
/// 1-based variable indices with repetition.
Json quadrics_to_json(const QuadricSet& qs, const std::string& name);
/// Parses, checks the checksum when present and re-verifies homogeneity
/// under the stored weights. Throws InputError or PreconditionError.
QuadricSet quadrics_from_json(const Json& j);
QuadricSet load_quadrics_file(const std::string& path);

Json stratum_to_json(const StratumRecord& s);

/// One JSON-lines record, schema "wflag-candidate/1".
Json candidate_to_json(const CandidateVariety& c);

}  // namespace wflag
