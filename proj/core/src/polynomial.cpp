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

#include "wflag/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "wflag/errors.hpp"

namespace wflag {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw InputError("cannot parse rational '" + s + "'");
  q.canonicalize();
  return q;
}

IntPolynomial::IntPolynomial(std::initializer_list<std::pair<const int, Integer>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return monomial(0, c); }

IntPolynomial IntPolynomial::monomial(int exponent, const Integer& c) {
  IntPolynomial p;
  p.add_term(exponent, c);
  return p;
}

IntPolynomial IntPolynomial::one_minus_t_pow(int w) {
  IntPolynomial p = constant(1);
  p.add_term(w, -1);
  return p;
}

IntPolynomial IntPolynomial::from_dense(const std::vector<Integer>& coeffs) {
  IntPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_.emplace(static_cast<int>(i), coeffs[i]);
  return p;
}

int IntPolynomial::degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int IntPolynomial::low_degree() const {
  if (terms_.empty()) throw PreconditionError("low degree of the zero polynomial");
  return terms_.begin()->first;
}

Integer IntPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void IntPolynomial::add_term(int exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  IntPolynomial out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  IntPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

IntPolynomial IntPolynomial::times_one_minus(int w) const {
  IntPolynomial out = *this;
  for (const auto& [e, c] : terms_) out.add_term(e + w, -c);
  return out;
}

bool IntPolynomial::divide_one_minus(int w, IntPolynomial& quotient) const {
  if (w < 1) throw PreconditionError("division by (1 - t^w) needs w >= 1");
  quotient = IntPolynomial();
  if (terms_.empty()) return true;
  // q = p + t^w q, solved from the lowest exponent upwards.
  const int lo = low_degree();
  const int hi = degree();
  std::vector<Integer> q(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) {
    Integer v = coeff(e);
    if (e - w >= lo) v += q[e - w - lo];
    q[e - lo] = v;
  }
  // Exact iff the tail that would spill past hi vanishes.
  for (int e = std::max(lo, hi - w + 1); e <= hi; ++e)
    if (q[e - lo] != 0) return false;
  for (int e = lo; e <= hi; ++e)
    if (q[e - lo] != 0) quotient.terms_.emplace(e, q[e - lo]);
  return true;
}

Integer IntPolynomial::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

int IntPolynomial::vanishing_order_at_one() const {
  if (terms_.empty()) throw PreconditionError("vanishing order of the zero polynomial");
  int k = 0;
  IntPolynomial p = *this;
  while (p.evaluate_at_one() == 0) {
    IntPolynomial q;
    if (!p.divide_one_minus(1, q)) throw_internal("(1-t) does not divide a polynomial vanishing at 1");
    p = std::move(q);
    ++k;
  }
  return k;
}

IntPolynomial IntPolynomial::reversed() const {
  IntPolynomial out;
  if (terms_.empty()) return out;
  const int d = degree();
  for (const auto& [e, c] : terms_) out.terms_.emplace(d - e, c);
  return out;
}

namespace {

void append_term(std::ostringstream& os, bool first, int e, const Integer& c, const std::string& var) {
  const bool neg = c < 0;
  Integer a = abs(c);
  if (neg) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  if (e == 0) {
    os << a.get_str();
    return;
  }
  if (a != 1) os << a.get_str();
  os << var;
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string IntPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, e, c, var);
    first = false;
  }
  return os.str();
}

std::string IntPolynomial::to_abbrev_string(std::size_t head, std::size_t tail, const std::string& var) const {
  if (terms_.size() <= head + tail) return to_string(var);
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (i == head) os << "+...";
    if (i < head || i >= terms_.size() - tail) {
      append_term(os, first, e, c, var);
      first = false;
    }
    ++i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

std::vector<Integer> series_quotient(const IntPolynomial& p, const std::vector<int>& weights, int order) {
  if (order < 0) return {};
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  for (const auto& [e, v] : p.terms()) {
    if (e < 0) throw PreconditionError("series expansion needs non-negative exponents");
    if (e <= order) c[e] = v;
  }
  for (int w : weights) {
    if (w < 1) throw PreconditionError("series expansion needs positive weights");
    for (int k = w; k <= order; ++k) c[k] += c[k - w];
  }
  return c;
}

IntPolynomial denominator_product(const std::vector<int>& weights) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int w : weights) p = p.times_one_minus(w);
  return p;
}

}  // namespace wflag
