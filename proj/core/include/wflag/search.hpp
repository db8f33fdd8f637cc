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

// Search for polarized threefolds X = wSigma(mu, u) (+ cones) cut by
// quasi-linear sections, with a prescribed canonical class.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "wflag/series.hpp"
#include "wflag/wps.hpp"

namespace wflag {

/// CalabiYau: K_X = 0. Fano: K_X = O(-1), polarized anticanonically.
enum class SearchTarget { CalabiYau, Fano };

std::string to_string(SearchTarget t);
SearchTarget parse_search_target(const std::string& s);

/// How a candidate meets one singular stratum of its final ambient space.
struct StratumMeet {
  int r = 0;
  int ambient_dim = -1;        // dim of wSigma on the stratum, -1 if empty
  int cutting_sections = 0;    // sections whose degree r divides
  /// Lower bound for dim(X on the stratum) when >= 0; -1 means a generic
  /// X misses it or meets it in finitely many points at most.
  int expected_dim() const { return ambient_dim < 0 ? -1 : std::max(ambient_dim - cutting_sections, -1); }
};

struct CandidateVariety {
  GroupType group_type;
  Weight lambda;
  Coweight mu;  // smallest (u, mu) of its class met in the scan
  std::int64_t u = 0;
  Coweight normalized_mu;
  std::int64_t normalized_u = 0;
  int ambient_dim = 0;  // dim of wSigma
  GradedWeightList ambient_weights;
  int cone_count = 0;
  std::vector<int> section_degrees;  // descending
  GradedWeightList final_weights;
  std::int64_t canonical_deg = 0;
  IntPolynomial numerator;  // over final_weights
  Rational d3;
  std::vector<StratumRecord> strata;
  bool wellformed_ambient = false;
  /// Filled when equations are shipped for (group, lambda).
  std::vector<StratumMeet> stratum_meets;

  /// The candidate's own Hilbert series.
  HilbertSeries series() const;
  int codimension() const { return static_cast<int>(final_weights.size()) - 4; }
};

struct MuBox {
  Coweight lo;
  Coweight hi;
  /// Box of half-width r around the origin.
  static MuBox symmetric(int dim, std::int64_t r);
  bool empty() const;
};

struct SearchLimits {
  int max_cones = 2;
  /// Fano target: drop candidates forced to contain a curve of quotient
  /// singularities (terminal singularities are isolated). Needs shipped
  /// equations; other candidates are kept.
  bool isolated_fano_singularities = true;
  std::size_t max_candidates = 100000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SearchResult {
  std::vector<CandidateVariety> candidates;
  bool truncated = false;
  std::size_t cells = 0;            // (mu, u) pairs in the box
  std::size_t classes = 0;          // after normalization
  std::size_t admissible = 0;       // classes with positive weights
};

/// Canonical representative of (mu, u) with the same embedding weights.
/// GL(n): mu sorted descending and shifted by a multiple of (1, ..., 1) so
/// that sum(mu) lies in [0, n-1], u absorbing the shift. G2: mu moved into
/// the chamber with both coordinates >= 0 by the dual Weyl action.
std::pair<Coweight, std::int64_t> normalize_mu(const RootSystemData& rs, const Weight& lambda, const Coweight& mu,
                                               std::int64_t u);

/// Scans u ascending, mu in lexicographic box order and section multisets
/// in colex order. Deterministic for any thread count. Throws InputError on
/// a malformed box.
SearchResult enumerate_candidates(const RootSystemData& rs, const Weight& lambda, const MuBox& box,
                                  std::int64_t u_lo, std::int64_t u_hi, SearchTarget target,
                                  const SearchLimits& limits = {});

/// One candidate from explicit cones and section degrees, without target
/// filters. Throws PreconditionError unless the result is a threefold whose
/// sections are among the weights.
CandidateVariety build_candidate(const RootSystemData& rs, const Weight& lambda, const Coweight& mu, std::int64_t u,
                                 int cones, const std::vector<int>& sections);

/// Re-checks every structural invariant of a candidate; empty when valid.
std::vector<std::string> candidate_violations(const CandidateVariety& c, SearchTarget target);

/// 2g - 2 = (-K)^3 for an anticanonically polarized candidate with
/// integral genus.
std::optional<std::int64_t> fano_genus(const CandidateVariety& c);

/// Deterministic human-readable report.
std::string candidate_report(const CandidateVariety& c);

}  // namespace wflag
