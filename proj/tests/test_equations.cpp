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

#include <doctest.h>

#include <random>

#include "wflag/equations.hpp"
#include "wflag/errors.hpp"
#include "wflag/series.hpp"

using namespace wflag;

namespace {

const std::vector<int> kExampleWeights{6, 1, 3, 5, 7, 4, 2, 7, 5, 3, 1, 4, 4, 4};

QuadricSet monomial_ideal(std::size_t n, const std::vector<Exponents>& gens) {
  QuadricSet qs;
  for (std::size_t i = 0; i < n; ++i) qs.variable_names.push_back("y" + std::to_string(i + 1));
  qs.variable_weights.assign(n, 1);
  for (const auto& e : gens) {
    WeightedPolynomial p(n);
    p.add_term(e, 1);
    qs.polynomials.push_back(p);
  }
  return qs;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("G2 quadrics") {
  const QuadricSet qs = g2_quadrics();
  CHECK(qs.size() == 28);
  CHECK(qs.num_vars() == 14);
  CHECK(coefficient_rank(qs) == 28);
  for (const auto& p : qs.polynomials) CHECK(p.total_degree() == 2);
  REQUIRE(qs.lattice_group.has_value());
  CHECK(*qs.lattice_group == GroupType::g2());
}

TEST_CASE("G2 quadrics are homogeneous under the example weights") {
  const QuadricSet qs = g2_quadrics();
  CHECK(embedding_variable_weights(qs, Coweight{2, -3}, 4) == kExampleWeights);
  const QuadricSet w = assign_weights(qs, kExampleWeights);
  REQUIRE(w.degrees.size() == 28);
  for (std::size_t i = 0; i < 28; ++i) {
    const auto degs = w.polynomials[i].weighted_degrees(kExampleWeights);
    REQUIRE(degs.size() == 1);
    CHECK(degs[0] == w.degrees[i]);
  }
  // Same for every admissible torus twist.
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) CHECK_NOTHROW(assign_weights(qs, embedding_variable_weights(qs, Coweight{a, b}, 20)));
}

TEST_CASE("non-homogeneous weights are rejected") {
  std::vector<int> bad = kExampleWeights;
  bad[0] = 5;
  CHECK_THROWS_AS(assign_weights(g2_quadrics(), bad), PreconditionError);
  CHECK_THROWS_AS(assign_weights(g2_quadrics(), {1, 2}), InputError);
}

TEST_CASE("Pfaffians vanish on rank-2 skew matrices") {
  const QuadricSet qs = pfaffians_gr26();
  CHECK(qs.size() == 15);
  CHECK(coefficient_rank(qs) == 15);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> a(6), b(6), point(15);
    for (int i = 0; i < 6; ++i) {
      a[i] = d(rng);
      b[i] = d(rng);
    }
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) point[gr26_variable(i, j)] = a[i] * b[j] - a[j] * b[i];
    for (const auto& p : qs.polynomials) CHECK(p.evaluate(point) == 0);
  }
  // The sum of two generic rank-2 forms has rank 4.
  std::vector<Rational> point(15, 0);
  point[gr26_variable(0, 1)] = 1;
  point[gr26_variable(2, 3)] = 1;
  bool some_nonzero = false;
  for (const auto& p : qs.polynomials) some_nonzero = some_nonzero || p.evaluate(point) != 0;
  CHECK(some_nonzero);
}

TEST_CASE("Pfaffian layout") {
  const QuadricSet qs = pfaffians_gr26();
  CHECK(gr26_variable(0, 1) == 0);
  CHECK(gr26_variable(1, 2) == 5);
  CHECK(gr26_variable(4, 5) == 14);
  CHECK(qs.polynomials.back().to_string(qs.variable_names) == "x1*x10 - x2*x7 + x3*x6");
}

TEST_CASE("monomial counts match the series of the polynomial ring") {
  const std::vector<int> w{1, 2, 2, 3, 5};
  const auto counts = series_quotient(IntPolynomial::constant(1), w, 12);
  for (int n = 0; n <= 12; ++n) CHECK(Integer(monomials_of_degree(w, n, 100000).size()) == counts[n]);
  CHECK_THROWS_AS(monomials_of_degree({1, 1, 1, 1}, 20, 10), ResourceError);
}

TEST_CASE("Hilbert function of a monomial ideal") {
  const std::vector<Exponents> gens{{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 1}};
  const auto h = graded_hilbert_function(monomial_ideal(4, gens), 6);
  for (int n = 0; n <= 6; ++n) {
    std::int64_t standard = 0;
    for (const auto& m : monomials_of_degree({1, 1, 1, 1}, n, 100000))
      if (std::none_of(gens.begin(), gens.end(), [&](const Exponents& g) { return divides(g, m); })) ++standard;
    CHECK(h[n] == standard);
  }
}

TEST_CASE("Hilbert function of the equations equals the series") {
  const auto g2 = build_root_system(GroupType::g2());
  const auto straight = graded_hilbert_function(g2_quadrics(), 4);
  CHECK(straight == std::vector<std::int64_t>{1, 14, 77, 273, 748});
  const auto series = expand(hilbert_series(g2, Weight{3, 2}, Coweight{0, 0}, 1), 4).values;
  for (int n = 0; n <= 4; ++n) CHECK(series[n] == straight[n]);

  const auto gl6 = build_root_system(GroupType::gl(6));
  const auto gr = graded_hilbert_function(pfaffians_gr26(), 3);
  const auto gr_series = expand(hilbert_series(gl6, Weight{1, 1, 0, 0, 0, 0}, Coweight::zero(6), 1), 3).values;
  for (int n = 0; n <= 3; ++n) CHECK(gr_series[n] == gr[n]);

  const QuadricSet weighted = assign_weights(g2_quadrics(), kExampleWeights);
  const auto hw = graded_hilbert_function(weighted, 8);
  const auto sw = expand(hilbert_series(g2, Weight{3, 2}, Coweight{2, -3}, 4), 8).values;
  for (int n = 0; n <= 8; ++n) CHECK(sw[n] == hw[n]);
}

TEST_CASE("restriction to strata") {
  const QuadricSet weighted = assign_weights(g2_quadrics(), kExampleWeights);
  const QuadricSet r6 = restrict_to_stratum(weighted, 6);
  REQUIRE(r6.size() == 1);
  CHECK(r6.variable_names == std::vector<std::string>{"x1"});
  CHECK(r6.polynomials[0].label() == "A.26");
  const auto& terms = r6.polynomials[0].terms();
  REQUIRE(terms.size() == 1);
  CHECK(terms.begin()->first == Exponents{2});

  const QuadricSet r7 = restrict_to_stratum(weighted, 7);
  CHECK(r7.num_vars() == 2);
  CHECK(r7.size() == 0);

  CHECK(restrict_to_stratum(weighted, 1).size() == 28);
  CHECK_THROWS_AS(restrict_to_stratum(weighted, 11), PreconditionError);
}

TEST_CASE("Groebner dimension") {
  CHECK(projective_dimension(g2_quadrics()) == 5);
  CHECK(projective_dimension(pfaffians_gr26()) == 8);

  // Twisted cubic in P^3.
  QuadricSet cubic = monomial_ideal(4, {});
  auto quad = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    WeightedPolynomial p(4);
    p.add_quadratic_term(a, b, 1);
    p.add_quadratic_term(c, d, -1);
    return p;
  };
  cubic.polynomials = {quad(0, 2, 1, 1), quad(0, 3, 1, 2), quad(1, 3, 2, 2)};
  CHECK(projective_dimension(cubic) == 1);
  CHECK(groebner_basis(cubic).size() == 3);

  QuadricSet empty = monomial_ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(projective_dimension(empty) == -1);

  const QuadricSet weighted = assign_weights(g2_quadrics(), embedding_variable_weights(g2_quadrics(), Coweight{1, 0}, 4));
  CHECK(projective_dimension(restrict_to_stratum(weighted, 7)) == 1);
  CHECK(projective_dimension(restrict_to_stratum(weighted, 6)) == -1);
  CHECK(projective_dimension(restrict_to_stratum(weighted, 4)) == 1);
}
