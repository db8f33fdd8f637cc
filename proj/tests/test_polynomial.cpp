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

#include "wflag/errors.hpp"
#include "wflag/linear_algebra.hpp"
#include "wflag/polynomial.hpp"

using namespace wflag;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Integer> v(max_deg + 1);
  for (auto& x : v) x = c(rng);
  return IntPolynomial::from_dense(v);
}

// Dense Gaussian elimination over Q.
std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(45, 56)) == "45/56");
  CHECK(to_string(Rational(18)) == "18");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_poly(rng, 6), b = random_poly(rng, 5), c = random_poly(rng, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("multiplying and dividing by 1 - t^w") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_poly(rng, 8);
    for (int w = 1; w <= 7; ++w) {
      IntPolynomial q;
      REQUIRE(a.times_one_minus(w).divide_one_minus(w, q));
      CHECK(q == a);
      CHECK(a.times_one_minus(w) == a * IntPolynomial::one_minus_t_pow(w));
    }
  }
  IntPolynomial q;
  CHECK_FALSE(IntPolynomial{{0, 1}, {1, 1}}.divide_one_minus(1, q));
}

TEST_CASE("vanishing order and reversal") {
  auto p = IntPolynomial::constant(3);
  for (int w : {1, 2, 5}) p = p.times_one_minus(w);
  CHECK(p.vanishing_order_at_one() == 3);
  CHECK(p.evaluate_at_one() == 0);
  const IntPolynomial q{{0, 1}, {2, -2}, {5, 7}};
  CHECK(q.reversed() == IntPolynomial{{0, 7}, {3, -2}, {5, 1}});
  CHECK(q.reversed().reversed() == q);
}

TEST_CASE("series quotient") {
  // 1/(1-t)^2 = sum (n+1) t^n
  const auto s = series_quotient(IntPolynomial::constant(1), {1, 1}, 6);
  for (int n = 0; n <= 6; ++n) CHECK(s[n] == n + 1);
  // 1/((1-t)(1-t^2)): floor(n/2) + 1
  const auto s2 = series_quotient(IntPolynomial::constant(1), {1, 2}, 9);
  for (int n = 0; n <= 9; ++n) CHECK(s2[n] == n / 2 + 1);
  CHECK(denominator_product({2, 3}) == IntPolynomial{{0, 1}, {2, -1}, {3, -1}, {5, 1}});
}

TEST_CASE("printing") {
  const IntPolynomial p{{0, 1}, {2, -28}, {3, 105}, {11, 1}};
  CHECK(p.to_string() == "1-28t^2+105t^3+t^11");
  CHECK(p.to_abbrev_string(2, 1) == "1-28t^2+...+t^11");
  CHECK(IntPolynomial().to_string() == "0");
}

TEST_CASE("exact sparse rank matches dense elimination") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> keep(0, 3);
  for (int t = 0; t < 40; ++t) {
    const int rows = 3 + t % 9, cols = 4 + t % 7;
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, 0));
    std::vector<SparseRow> sparse;
    for (int r = 0; r < rows; ++r) {
      std::vector<std::pair<int, Rational>> row;
      for (int c = 0; c < cols; ++c) {
        if (keep(rng) != 0) continue;
        const int v = val(rng);
        if (v == 0) continue;
        dense[r][c] = v;
        row.emplace_back(c, Rational(v, 1 + r % 3));
      }
      for (auto& x : dense[r]) x /= 1 + r % 3;
      sparse.push_back(primitive_integer_row(row));
    }
    // Duplicate a row to force dependence.
    dense.push_back(dense[0]);
    sparse.push_back(sparse[0]);
    CHECK(exact_rank(sparse, cols) == dense_rank(dense));
  }
}
