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

// Exact univariate integer polynomials and truncated power series.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace wflag {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
/// Accepts "p/q" or "p". Throws InputError.
Rational parse_rational(const std::string& s);

/// Sparse polynomial in t with arbitrary precision integer coefficients.
///
/// Exponents are signed so that intermediate Laurent expressions (closed
/// forms with negative pairings) can be written down directly; Hilbert
/// numerators only ever carry non-negative exponents. Zero coefficients are
/// never stored.
class IntPolynomial {
 public:
  using Terms = std::map<int, Integer>;

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::pair<const int, Integer>> terms);
  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(int exponent, const Integer& c = 1);
  /// 1 - t^w.
  static IntPolynomial one_minus_t_pow(int w);
  /// Dense coefficient list, index = exponent.
  static IntPolynomial from_dense(const std::vector<Integer>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  /// Highest exponent. Throws on the zero polynomial.
  int degree() const;
  /// Lowest exponent. Throws on the zero polynomial.
  int low_degree() const;
  Integer coeff(int exponent) const;
  const Terms& terms() const { return terms_; }

  void add_term(int exponent, const Integer& c);

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Multiply by t^k.
  IntPolynomial shifted(int k) const;
  /// Multiply by (1 - t^w).
  IntPolynomial times_one_minus(int w) const;
  /// Exact quotient by (1 - t^w), w >= 1; nullopt-like failure signalled by
  /// returning false.
  bool divide_one_minus(int w, IntPolynomial& quotient) const;

  Integer evaluate_at_one() const;
  /// Multiplicity of t = 1 as a root.
  int vanishing_order_at_one() const;
  /// t^deg * p(1/t) for a polynomial with non-negative support.
  IntPolynomial reversed() const;

  /// Human-readable form "1-28t^2+105t^3-...".
  std::string to_string(const std::string& var = "t") const;
  /// Abbreviated form keeping `head` leading and `tail` trailing terms.
  std::string to_abbrev_string(std::size_t head, std::size_t tail, const std::string& var = "t") const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Coefficients of p / prod (1 - t^w) up to t^order. p must have
/// non-negative support.
std::vector<Integer> series_quotient(const IntPolynomial& p, const std::vector<int>& weights, int order);

/// Product prod (1 - t^w).
IntPolynomial denominator_product(const std::vector<int>& weights);

}  // namespace wflag
