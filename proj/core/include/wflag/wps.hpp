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

// Weighted projective space combinatorics: well-formedness, singular strata
// and cyclic quotient singularity types.

#include <string>
#include <vector>

#include "wflag/series.hpp"

namespace wflag {

struct StratumRecord {
  int r = 0;
  std::vector<std::size_t> variable_indices;  // positions in the weight list
  int dimension = 0;
  /// Type 1/r(b_1, ..., b_k), 0 <= b_i < r. Empty until supplied.
  std::vector<int> quotient_type;

  std::string type_string() const;
};

/// No n of the n+1 weights share a prime factor.
bool is_wellformed_wps(const GradedWeightList& weights);

/// One record per r >= 2 that is the gcd of the maximal set of weights it
/// divides, sorted by descending r.
std::vector<StratumRecord> singular_strata(const GradedWeightList& weights);

/// 1/r(b_i mod r) in the given order. `weights` locates the stratum; throws
/// InputError for r <= 1 and PreconditionError if r divides no weight.
StratumRecord quotient_type(const GradedWeightList& weights, int r, const std::vector<int>& transverse_weights);

struct StratumFlag {
  StratumRecord stratum;
  int codimension = 0;          // in the ambient space
  bool would_violate = false;   // codimension <= c + 1 in the ambient
  bool forced = false;          // so large that X must meet it
  std::string note;
};

struct WellformedReport {
  int codim = 0;
  std::vector<StratumFlag> flags;
  bool any_forced() const;
};

/// Flags the strata that would break well-formedness of a codimension c
/// subvariety if contained in it. Whether X meets a stratum needs its
/// equations; flagged entries say so.
WellformedReport subvariety_wellformed_report(const GradedWeightList& weights, int codim,
                                              const std::vector<StratumRecord>& strata);

}  // namespace wflag
