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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "wflag/equations.hpp"
#include "wflag/errors.hpp"

namespace wflag {

namespace {

using Term = std::pair<Exponents, Rational>;
using Poly = std::vector<Term>;  // strictly decreasing in grevlex

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool grevlex_greater(const Exponents& a, const Exponents& b) {
  const int da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  const Rational lc = p.front().second;
  for (auto& [e, c] : p) c /= lc;
}

// p - c * x^m * q
Poly sub_scaled(const Poly& p, const Rational& c, const Exponents& m, const Poly& q) {
  Poly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Exponents shifted = q[j].first;
    for (std::size_t v = 0; v < m.size(); ++v) shifted[v] += m[v];
    if (i < p.size() && grevlex_greater(p[i].first, shifted)) {
      out.push_back(p[i++]);
    } else if (i < p.size() && p[i].first == shifted) {
      Rational v = p[i].second - c * q[j].second;
      if (v != 0) out.emplace_back(std::move(shifted), std::move(v));
      ++i;
      ++j;
    } else {
      out.emplace_back(std::move(shifted), -c * q[j].second);
      ++j;
    }
  }
  return out;
}

// Full reduction of p modulo the monic basis g.
Poly reduce(Poly p, const std::vector<Poly>& g) {
  Poly rest;
  while (!p.empty()) {
    const auto& [lead, lc] = p.front();
    const Poly* divisor = nullptr;
    for (const auto& q : g)
      if (divides(q.front().first, lead)) {
        divisor = &q;
        break;
      }
    if (divisor) {
      p = sub_scaled(p, lc, quotient(lead, divisor->front().first), *divisor);
    } else {
      rest.push_back(p.front());
      p.erase(p.begin());
    }
  }
  return rest;
}

Poly from_weighted(const WeightedPolynomial& w) {
  Poly p(w.terms().begin(), w.terms().end());
  std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return grevlex_greater(a.first, b.first); });
  return p;
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

}  // namespace

std::vector<WeightedPolynomial> groebner_basis(const QuadricSet& qs) {
  const std::size_t n = qs.num_vars();
  std::vector<Poly> g;
  for (const auto& w : qs.polynomials) {
    if (w.num_vars() != n) throw InputError("polynomial has the wrong number of variables");
    Poly p = reduce(from_weighted(w), g);
    if (p.empty()) continue;
    make_monic(p);
    g.push_back(std::move(p));
  }

  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm_of(g[i].front().first, g[k].front().first)});
  };
  for (std::size_t k = 1; k < g.size(); ++k) add_pairs(k);

  std::vector<char> dead(g.size(), 0);
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& a, const Pair& b) { return grevlex_greater(b.lcm, a.lcm); });
    const Pair pr = *best;
    pairs.erase(best);
    const Exponents& li = g[pr.i].front().first;
    const Exponents& lj = g[pr.j].front().first;
    if (coprime(li, lj)) continue;
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !divides(g[k].front().first, pr.lcm)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        const auto lo = std::min(a, b), hi = std::max(a, b);
        return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) { return p.i == lo && p.j == hi; });
      };
      chain = !pending(pr.i, k) && !pending(pr.j, k);
    }
    if (chain) continue;

    Poly s = sub_scaled(Poly{}, -1, quotient(pr.lcm, li), g[pr.i]);
    s = sub_scaled(s, 1, quotient(pr.lcm, lj), g[pr.j]);
    s = reduce(std::move(s), g);
    if (s.empty()) continue;
    make_monic(s);
    g.push_back(std::move(s));
    dead.push_back(0);
    add_pairs(g.size() - 1);
  }

  // Minimal and reduced.
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size() && !dead[i]; ++j)
      if (i != j && !dead[j] && divides(g[j].front().first, g[i].front().first) &&
          (g[j].front().first != g[i].front().first || j < i))
        dead[i] = 1;
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!dead[i]) minimal.push_back(g[i]);
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly& a, const Poly& b) { return grevlex_greater(a.front().first, b.front().first); });

  std::vector<WeightedPolynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly tail(minimal[i].begin() + 1, minimal[i].end());
    tail = reduce(std::move(tail), others);
    WeightedPolynomial w(n, "G" + std::to_string(i + 1));
    w.add_term(minimal[i].front().first, minimal[i].front().second);
    for (const auto& [e, c] : tail) w.add_term(e, c);
    out.push_back(std::move(w));
  }
  return out;
}

int projective_dimension(const QuadricSet& qs) {
  const std::size_t n = qs.num_vars();
  if (n > 24) throw ResourceError("dimension computation limited to 24 variables");
  std::vector<std::uint32_t> leads;
  for (const auto& p : groebner_basis(qs)) {
    // Leading term is the grevlex-largest monomial.
    const Exponents* lead = nullptr;
    for (const auto& [e, c] : p.terms())
      if (!lead || grevlex_greater(e, *lead)) lead = &e;
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < n; ++v)
      if ((*lead)[v]) mask |= 1u << v;
    if (mask == 0) return -1;  // unit ideal
    leads.push_back(mask);
  }
  // Krull dimension: largest variable set containing no leading monomial.
  int best = 0;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 0;; ++s) {
    const int size = std::popcount(s);
    if (size > best &&
        std::none_of(leads.begin(), leads.end(), [s](std::uint32_t m) { return (m & ~s) == 0; }))
      best = size;
    if (s == full) break;
  }
  return best - 1;
}

}  // namespace wflag
