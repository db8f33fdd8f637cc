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

#include <string>

#include "wflag/errors.hpp"
#include "wflag/series.hpp"

namespace wflag {

std::optional<ClosedFormKind> closed_form_kind(const RootSystemData& rs, const Weight& lambda) {
  if (rs.group_type == GroupType::g2()) {
    if (lambda == rs.fundamental_weights[0]) return ClosedFormKind::G2Hypersurface;
    if (lambda == rs.fundamental_weights[1]) return ClosedFormKind::G2Codim8;
  }
  if (rs.group_type == GroupType::gl(6) && lambda == Weight{1, 1, 0, 0, 0, 0}) return ClosedFormKind::Gr26;
  return std::nullopt;
}

namespace {

int as_exponent(std::int64_t v) { return static_cast<int>(v); }

// (1 - t^{2u}) / ((1 - t^u) prod_{short} (1 - t^{<alpha,mu>+u}))
ClosedForm g2_hypersurface(const RootSystemData& rs, const Coweight& mu, std::int64_t u) {
  ClosedForm cf;
  cf.numerator = IntPolynomial::one_minus_t_pow(as_exponent(2 * u));
  cf.denominator.push_back(as_exponent(u));
  for (const auto& a : rs.roots_of_length(RootLength::Short)) cf.denominator.push_back(as_exponent(pair(a, mu) + u));
  return cf;
}

// (1 + t^u)(1 + t^u (1 + sum_{short} t^<alpha,mu>) + t^{2u}) / prod_{long} (1 - t^{<alpha,mu>+u})
ClosedForm g2_codim8(const RootSystemData& rs, const Coweight& mu, std::int64_t u) {
  IntPolynomial inner = IntPolynomial::constant(1);
  inner.add_term(as_exponent(u), 1);
  for (const auto& a : rs.roots_of_length(RootLength::Short)) inner.add_term(as_exponent(pair(a, mu) + u), 1);
  inner.add_term(as_exponent(2 * u), 1);
  IntPolynomial outer = IntPolynomial::constant(1);
  outer.add_term(as_exponent(u), 1);

  ClosedForm cf;
  cf.numerator = outer * inner;
  for (const auto& a : rs.roots_of_length(RootLength::Long)) cf.denominator.push_back(as_exponent(pair(a, mu) + u));
  return cf;
}

// 1 - Q1 t^{2u} + Q2 t^{3u} - Q3 t^{4u} - Q4 t^{5u} + Q5 t^{6u} - Q6 t^{7u} + t^{3s+9u}
// over prod_{i<j} (1 - t^{a_i + a_j + u}).
ClosedForm gr26(const Coweight& mu, std::int64_t u, const Gr26Reading& reading) {
  const auto& a = mu.coords;
  const std::int64_t s = mu.sum();
  IntPolynomial q1, q2, q3, q4, q5, q6;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i < j) q1.add_term(as_exponent(s - (a[i] + a[j])), 1);
      if (reading.q2_all_ordered_pairs || i != j) {
        q2.add_term(as_exponent(s + (a[i] - a[j])), 1);
        q5.add_term(as_exponent(2 * s + (a[i] - a[j])), 1);
      }
      if (i <= j) {
        q3.add_term(as_exponent(s + (a[i] + a[j])), 1);
        q4.add_term(as_exponent(2 * s - (a[i] + a[j])), 1);
      }
      if (reading.q6_strict ? i < j : i <= j) q6.add_term(as_exponent(2 * s + (a[i] + a[j])), 1);
    }
  q2.add_term(as_exponent(s), -1);
  q5.add_term(as_exponent(2 * s), -1);

  ClosedForm cf;
  IntPolynomial& n = cf.numerator;
  n = IntPolynomial::constant(1);
  n -= q1.shifted(as_exponent(2 * u));
  n += q2.shifted(as_exponent(3 * u));
  n -= q3.shifted(as_exponent(4 * u));
  n -= q4.shifted(as_exponent(5 * u));
  n += q5.shifted(as_exponent(6 * u));
  n -= q6.shifted(as_exponent(7 * u));
  n.add_term(as_exponent(3 * s + 9 * u), 1);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) cf.denominator.push_back(as_exponent(a[i] + a[j] + u));
  return cf;
}

}  // namespace

ClosedForm closed_form(const RootSystemData& rs, const Weight& lambda, const Coweight& mu, std::int64_t u,
                       const Gr26Reading& reading) {
  const auto kind = closed_form_kind(rs, lambda);
  if (!kind) throw PreconditionError("no closed form known for " + rs.group_type.name() + " and this highest weight");
  if (static_cast<int>(mu.size()) != rs.lattice_dim()) throw InputError("coweight length mismatch");
  switch (*kind) {
    case ClosedFormKind::G2Hypersurface:
      return g2_hypersurface(rs, mu, u);
    case ClosedFormKind::G2Codim8:
      return g2_codim8(rs, mu, u);
    case ClosedFormKind::Gr26:
      return gr26(mu, u, reading);
  }
  throw_internal("unhandled closed form kind");
}

bool closed_form_check(const RootSystemData& rs, const Weight& lambda, const Coweight& mu, std::int64_t u,
                       const Gr26Reading& reading) {
  const ClosedForm cf = closed_form(rs, lambda, mu, u, reading);
  const HilbertSeries hs = hilbert_series(rs, lambda, mu, u);
  return hs.numerator * denominator_product(cf.denominator) ==
         cf.numerator * denominator_product(hs.denominator.weights);
}

}  // namespace wflag
