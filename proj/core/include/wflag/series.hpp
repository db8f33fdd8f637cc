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

// Hilbert series of weighted flag varieties wSigma(mu, u) and the
// bookkeeping around them: embedding weights, numerators over the full
// weight denominator, canonical degree, quasi-linear sections, projective
// cones and the leading degree D^3 of a threefold.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wflag/lattice.hpp"
#include "wflag/polynomial.hpp"

namespace wflag {

/// Where a weight list came from.
struct EmbeddingSource {
  GroupType group_type;
  Weight lambda;
  Coweight mu;
  std::int64_t u = 0;
};

/// Multiset of positive integer weights of a weighted projective space,
/// kept sorted ascending.
struct GradedWeightList {
  std::vector<int> weights;
  std::optional<EmbeddingSource> source;

  GradedWeightList() = default;
  explicit GradedWeightList(std::vector<int> w);

  std::size_t size() const { return weights.size(); }
  std::int64_t sum() const;
  int max() const;
  std::size_t count(int w) const;
  /// Removes one copy of w; false if absent.
  bool remove_one(int w);
  void add(int w);

  friend bool operator==(const GradedWeightList& a, const GradedWeightList& b) { return a.weights == b.weights; }
};

/// Exponent notation "1^2,2,3^2,4^4,5,6,7".
std::string exponent_notation(const std::vector<int>& weights);
/// Inverse of exponent_notation; plain lists "1,1,2" are accepted too.
/// Throws InputError.
GradedWeightList parse_weight_list(std::string_view text);

struct HilbertSeries {
  IntPolynomial numerator;
  GradedWeightList denominator;  // each w contributes (1 - t^w)
  int variety_dim = 0;           // projective dimension
};

/// h^0(nD) for n = 0..order.
struct CoefficientStream {
  std::vector<Integer> values;
};

/// Multiset {<nu, mu> + u} over the weights nu of V_lambda. Throws
/// PreconditionError naming the first offending Weyl weight if any entry is
/// not positive.
GradedWeightList embedding_weights(const RootSystemData& rs, const Weight& lambda, const Coweight& mu,
                                   std::int64_t u);

/// Hilbert series of wSigma(mu, u) over the full embedding-weight
/// denominator, from the Weyl-group sum of the character formula.
///
/// The sum is evaluated as an exact rational function after a two-variable
/// refinement t^<v,mu> -> t^<v,mu> s^<v,mu0> with mu0 regular, which keeps
/// the Weyl denominator non-zero for singular mu (mu = 0 in particular); the
/// numerator is recovered at s = 1.
HilbertSeries hilbert_series(const RootSystemData& rs, const Weight& lambda, const Coweight& mu, std::int64_t u);

/// Coefficients h^0(nD), n = 0..order, of the rational function.
CoefficientStream expand(const HilbertSeries& hs, int order);

/// k with K = O(k): deg N - sum of denominator weights.
std::int64_t canonical_degree(const HilbertSeries& hs);

/// Quasi-linear section of degree d: drops one factor (1 - t^d).
HilbertSeries apply_section(const HilbertSeries& hs, int d);
/// Projective cone: adds a factor (1 - t^w).
HilbertSeries apply_cone(const HilbertSeries& hs, int w = 1);

/// lim_{t->1} (1-t)^4 P(t) for a threefold series.
Rational degree_D3(const HilbertSeries& hs);

/// Cancels every denominator factor (1 - t^w) that divides the numerator,
/// largest weights first. Same rational function.
HilbertSeries reduced(const HilbertSeries& hs);

/// +1 or -1 if N(t) = +-t^deg N(1/t), otherwise nullopt.
std::optional<int> gorenstein_sign(const IntPolynomial& numerator);

/// Truncated power series of the Weyl-group sum, computed directly in t.
/// Only defined for regular mu (<alpha, mu> != 0 for all roots); throws
/// PreconditionError otherwise. Independent of hilbert_series.
std::vector<Integer> weyl_sum_series(const RootSystemData& rs, const Weight& lambda, const Coweight& mu,
                                     std::int64_t u, int order);

/// Both sides of the Weyl denominator identity paired with mu:
/// sum_w (-1)^w t^<w rho, mu> and t^<rho, mu> prod_{alpha > 0} (1 - t^-<alpha, mu>).
std::pair<IntPolynomial, IntPolynomial> weyl_denominator_sides(const RootSystemData& rs, const Coweight& mu);

/// True when <alpha, mu> != 0 for every root.
bool is_regular(const RootSystemData& rs, const Coweight& mu);

/// Which closed form applies to (rs, lambda).
enum class ClosedFormKind { G2Hypersurface, G2Codim8, Gr26 };

/// Index-set reading of the Gr(2,6) Q-polynomials; the defaults make the
/// closed form agree with the Weyl-sum series.
struct Gr26Reading {
  bool q2_all_ordered_pairs = true;  // Q2, Q5 sum over all (i, j) in [1,6]^2
  bool q6_strict = true;             // Q6 sums over i < j (mirror of Q1)
};

struct ClosedForm {
  IntPolynomial numerator;
  std::vector<int> denominator;
};

std::optional<ClosedFormKind> closed_form_kind(const RootSystemData& rs, const Weight& lambda);
/// Closed-form Hilbert series for the three cases with a known expression.
ClosedForm closed_form(const RootSystemData& rs, const Weight& lambda, const Coweight& mu, std::int64_t u,
                       const Gr26Reading& reading = {});
/// Cross-multiplied identity between closed_form and hilbert_series.
bool closed_form_check(const RootSystemData& rs, const Weight& lambda, const Coweight& mu, std::int64_t u,
                       const Gr26Reading& reading = {});

}  // namespace wflag
