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

// Defining quadrics of the two shipped flag varieties: the 4x4 Pfaffians
// cutting out Gr(2,6) in P^14 and the 28 quadrics of the G2 variety in P^13.
// Also homogeneity checks, restriction to singular strata, and a
// Macaulay-matrix oracle for the graded Hilbert function of the quotient
// ring.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wflag/lattice.hpp"
#include "wflag/polynomial.hpp"

namespace wflag {

using Exponents = std::vector<int>;

/// Polynomial with rational coefficients over variables x_1..x_N.
class WeightedPolynomial {
 public:
  WeightedPolynomial() = default;
  explicit WeightedPolynomial(std::size_t num_vars, std::string label = {})
      : num_vars_(num_vars), label_(std::move(label)) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);
  /// Adds c * x_i * x_j (0-based indices).
  void add_quadratic_term(std::size_t i, std::size_t j, const Rational& c);
  Rational coeff(const Exponents& e) const;

  int total_degree() const;  // max over monomials
  /// Weighted degrees of all monomials (sorted, unique).
  std::vector<std::int64_t> weighted_degrees(const std::vector<int>& weights) const;
  /// Evaluates at a rational point.
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string(const std::vector<std::string>& variable_names) const;

  friend bool operator==(const WeightedPolynomial& a, const WeightedPolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t num_vars_ = 0;
  std::string label_;
  std::map<Exponents, Rational> terms_;
};

std::int64_t weighted_degree(const Exponents& e, const std::vector<int>& weights);

/// A list of quadrics sharing variables and weights.
struct QuadricSet {
  std::vector<std::string> variable_names;
  std::vector<int> variable_weights;  // all 1 until weights are assigned
  bool weights_assigned = false;
  std::vector<WeightedPolynomial> polynomials;
  /// Weighted degree of each polynomial, filled by assign_weights.
  std::vector<std::int64_t> degrees;
  /// Torus weight of each variable, when known (lets weights be assigned
  /// from any (mu, u)).
  std::optional<GroupType> lattice_group;
  std::vector<Weight> lattice_weights;

  std::size_t num_vars() const { return variable_names.size(); }
  std::size_t size() const { return polynomials.size(); }
};

/// The 15 Pfaffians of the 4x4 principal blocks of the generic 6x6 skew
/// matrix with upper triangle x1..x15 filled row by row.
QuadricSet pfaffians_gr26();

/// The 28 quadrics of the codimension 8 G2 variety, loaded from the
/// compiled-in dataset (checksum verified).
QuadricSet g2_quadrics();

/// Equations shipped for (rs, lambda): the G2 quadrics for omega2 and the
/// Pfaffians for e1+e2 of GL6.
std::optional<QuadricSet> shipped_equations(const RootSystemData& rs, const Weight& lambda);

/// Variable index (0-based) of the skew entry (i, j), 0 <= i < j < 6.
std::size_t gr26_variable(int i, int j);

/// Returns qs with the given variable weights. Throws PreconditionError
/// naming the polynomial and the clashing monomial degrees if some
/// polynomial is not weighted-homogeneous.
QuadricSet assign_weights(const QuadricSet& qs, const std::vector<int>& weights);

/// Weights <nu_i, mu> + u of the variables, from their lattice weights.
std::vector<int> embedding_variable_weights(const QuadricSet& qs, const Coweight& mu, std::int64_t u);

/// Sets every variable whose weight r does not divide to zero and keeps the
/// non-zero residual polynomials, over the surviving variables only. Labels
/// of residual polynomials are those of their sources. Throws
/// PreconditionError if r divides no weight.
QuadricSet restrict_to_stratum(const QuadricSet& qs, int r);

/// Exact rank of the coefficient vectors of the polynomials.
std::size_t coefficient_rank(const QuadricSet& qs);

/// Monomials of weighted degree n, in deterministic order.
std::vector<Exponents> monomials_of_degree(const std::vector<int>& weights, int n, std::size_t limit);

struct OracleLimits {
  std::size_t max_monomials_per_degree = 200000;
};

/// dim_k (k[x]/I)_n for n = 0..n_max, I generated by the polynomials.
/// Throws ResourceError when a degree exceeds the monomial bound.
std::vector<std::int64_t> graded_hilbert_function(const QuadricSet& qs, int n_max, const OracleLimits& limits = {});

/// Groebner basis (grevlex, x1 > x2 > ...) of the ideal generated by the
/// polynomials, reduced and monic.
std::vector<WeightedPolynomial> groebner_basis(const QuadricSet& qs);

/// Dimension of the projective scheme the polynomials cut out in the
/// (weighted) projective space on the variables of qs; -1 when it is empty.
int projective_dimension(const QuadricSet& qs);

}  // namespace wflag
