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

#include "wflag/series.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "wflag/errors.hpp"

namespace wflag {

// ---------------------------------------------------------------------------
// GradedWeightList

GradedWeightList::GradedWeightList(std::vector<int> w) : weights(std::move(w)) {
  for (int x : weights)
    if (x < 1) throw PreconditionError("weights must be positive, got " + std::to_string(x));
  std::sort(weights.begin(), weights.end());
}

std::int64_t GradedWeightList::sum() const { return std::accumulate(weights.begin(), weights.end(), std::int64_t{0}); }

int GradedWeightList::max() const { return weights.empty() ? 0 : weights.back(); }

std::size_t GradedWeightList::count(int w) const {
  return static_cast<std::size_t>(std::count(weights.begin(), weights.end(), w));
}

bool GradedWeightList::remove_one(int w) {
  auto it = std::find(weights.begin(), weights.end(), w);
  if (it == weights.end()) return false;
  weights.erase(it);
  return true;
}

void GradedWeightList::add(int w) {
  if (w < 1) throw PreconditionError("weights must be positive, got " + std::to_string(w));
  weights.insert(std::upper_bound(weights.begin(), weights.end(), w), w);
}

std::string exponent_notation(const std::vector<int>& weights) {
  std::vector<int> w = weights;
  std::sort(w.begin(), w.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i) os << ',';
    os << w[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

GradedWeightList parse_weight_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(pos, end - pos));
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) throw InputError("empty entry in weight list '" + std::string(text) + "'");
    const auto caret = item.find('^');
    try {
      std::size_t used = 0;
      const int w = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) throw std::invalid_argument(item);
      int times = 1;
      if (caret != std::string::npos) {
        times = std::stoi(item.substr(caret + 1), &used);
        if (used != item.size() - caret - 1 || times < 1) throw std::invalid_argument(item);
      }
      if (w < 1) throw InputError("weights must be positive, got " + std::to_string(w));
      out.insert(out.end(), times, w);
    } catch (const std::logic_error&) {
      throw InputError("cannot parse weight '" + item + "'");
    }
    pos = end + 1;
  }
  return GradedWeightList(std::move(out));
}

// ---------------------------------------------------------------------------
// Embedding weights

GradedWeightList embedding_weights(const RootSystemData& rs, const Weight& lambda, const Coweight& mu,
                                   std::int64_t u) {
  if (static_cast<int>(mu.size()) != rs.lattice_dim()) throw InputError("coweight length mismatch");
  const WeightSystem ws = weight_system(rs, lambda);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(ws.total_dim));
  for (const auto& [nu, mult] : ws.entries) {
    const std::int64_t value = pair(nu, mu) + u;
    if (value <= 0) {
      std::ostringstream os;
      os << "embedding weight not positive: <" << nu << ", mu> + u = " << value << " for weight " << nu
         << " of V_lambda (mu = " << mu << ", u = " << u << ")";
      throw PreconditionError(os.str());
    }
    for (std::int64_t k = 0; k < mult; ++k) w.push_back(static_cast<int>(value));
  }
  GradedWeightList out(std::move(w));
  out.source = EmbeddingSource{rs.group_type, lambda, mu, u};
  return out;
}

// ---------------------------------------------------------------------------
// Dense Laurent polynomials in (t, s) used by the Weyl-sum evaluation.

namespace {

class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(int t_lo, int t_hi, int s_lo, int s_hi)
      : t_lo_(t_lo), t_hi_(t_hi), s_lo_(s_lo), s_hi_(s_hi),
        data_(static_cast<std::size_t>(t_hi - t_lo + 1) * (s_hi - s_lo + 1)) {}

  static BiPoly one() {
    BiPoly p(0, 0, 0, 0);
    p.data_[0] = 1;
    return p;
  }

  bool empty() const { return data_.empty(); }
  int t_lo() const { return t_lo_; }
  int t_hi() const { return t_hi_; }
  int s_lo() const { return s_lo_; }
  int s_hi() const { return s_hi_; }

  bool in_box(int t, int s) const { return t >= t_lo_ && t <= t_hi_ && s >= s_lo_ && s <= s_hi_; }
  Integer& at(int t, int s) { return data_[index(t, s)]; }
  const Integer& at(int t, int s) const { return data_[index(t, s)]; }

  /// Multiply by (1 - t^a s^b).
  BiPoly times_binomial(int a, int b) const {
    BiPoly out(std::min(t_lo_, t_lo_ + a), std::max(t_hi_, t_hi_ + a), std::min(s_lo_, s_lo_ + b),
               std::max(s_hi_, s_hi_ + b));
    for (int s = s_lo_; s <= s_hi_; ++s)
      for (int t = t_lo_; t <= t_hi_; ++t) {
        const Integer& c = at(t, s);
        if (c == 0) continue;
        out.at(t, s) += c;
        out.at(t + a, s + b) -= c;
      }
    return out.trimmed();
  }

  /// Exact quotient by (1 - t^c s^d) with d < 0. Throws InternalError when
  /// the division is not exact.
  BiPoly divided_by_binomial(int c, int d) const {
    if (d >= 0) throw_internal("binomial divisor must have negative s-degree");
    BiPoly q(t_lo_, t_hi_, s_lo_, s_hi_);
    for (int s = s_hi_; s >= s_lo_; --s)
      for (int t = t_lo_; t <= t_hi_; ++t) {
        Integer v = at(t, s);
        if (in_box(t - c, s - d)) v += q.at(t - c, s - d);
        q.at(t, s) = std::move(v);
      }
    for (int s = s_lo_; s <= s_hi_; ++s)
      for (int t = t_lo_; t <= t_hi_; ++t)
        if (q.at(t, s) != 0 && !in_box(t + c, s + d)) throw_internal("Weyl denominator does not divide the numerator");
    return q.trimmed();
  }

  /// this += coefficient * t^dt s^ds * p
  void add_scaled(const BiPoly& p, const Integer& coefficient, int dt, int ds) {
    for (int s = p.s_lo_; s <= p.s_hi_; ++s)
      for (int t = p.t_lo_; t <= p.t_hi_; ++t) {
        const Integer& c = p.at(t, s);
        if (c == 0) continue;
        at(t + dt, s + ds) += coefficient * c;
      }
  }

  BiPoly trimmed() const {
    int tl = t_hi_ + 1, th = t_lo_ - 1, sl = s_hi_ + 1, sh = s_lo_ - 1;
    for (int s = s_lo_; s <= s_hi_; ++s)
      for (int t = t_lo_; t <= t_hi_; ++t)
        if (at(t, s) != 0) {
          tl = std::min(tl, t);
          th = std::max(th, t);
          sl = std::min(sl, s);
          sh = std::max(sh, s);
        }
    if (tl > th) return BiPoly();
    BiPoly out(tl, th, sl, sh);
    for (int s = sl; s <= sh; ++s)
      for (int t = tl; t <= th; ++t) out.at(t, s) = at(t, s);
    return out;
  }

  /// Sum over s, shifted by t^shift.
  IntPolynomial at_s_equal_one(int shift) const {
    IntPolynomial p;
    for (int s = s_lo_; s <= s_hi_; ++s)
      for (int t = t_lo_; t <= t_hi_; ++t)
        if (at(t, s) != 0) p.add_term(t + shift, at(t, s));
    return p;
  }

 private:
  std::size_t index(int t, int s) const {
    return static_cast<std::size_t>(s - s_lo_) * (t_hi_ - t_lo_ + 1) + (t - t_lo_);
  }

  int t_lo_ = 0, t_hi_ = -1, s_lo_ = 0, s_hi_ = -1;
  std::vector<Integer> data_;
};

struct SignedTerm {
  int t;
  int s;
  Integer coeff;
};

}  // namespace

HilbertSeries hilbert_series(const RootSystemData& rs, const Weight& lambda, const Coweight& mu, std::int64_t u) {
  const GradedWeightList weights = embedding_weights(rs, lambda, mu, u);
  const WeightSystem ws = weight_system(rs, lambda);
  const Coweight mu0 = rs.regular_coweight();
  const auto group = weyl_group(rs);

  // Factors (1 - t^a s^b), one per weight of V_lambda with multiplicity.
  struct Factor {
    Weight nu;
    int a;
    int b;
  };
  std::vector<Factor> factors;
  for (const auto& [nu, mult] : ws.entries)
    for (std::int64_t k = 0; k < mult; ++k)
      factors.push_back({nu, static_cast<int>(pair(nu, mu) + u), static_cast<int>(pair(nu, mu0))});

  // Group the Weyl sum by the extremal weight w(lambda).
  std::map<Weight, std::map<std::pair<int, int>, Integer>> grouped;
  for (const auto& g : group) {
    const Weight wl = act(g, lambda);
    const Weight wr = act(g, rs.weyl_vector);
    auto& terms = grouped[wl];
    terms[{static_cast<int>(pair(wr, mu)), static_cast<int>(pair(wr, mu0))}] += g.parity;
  }

  BiPoly numer;
  std::vector<BiPoly> partial;
  std::vector<std::vector<SignedTerm>> sign_terms;
  int t_lo = 0, t_hi = 0, s_lo = 0, s_hi = 0;
  bool first = true;
  for (const auto& [wl, terms] : grouped) {
    // prod over all weights except one copy of w(lambda)
    BiPoly d = BiPoly::one();
    bool skipped = false;
    for (const auto& f : factors) {
      if (!skipped && f.nu == wl) {
        skipped = true;
        continue;
      }
      d = d.times_binomial(f.a, f.b);
    }
    if (!skipped) throw_internal("extremal weight missing from the weight system");
    std::vector<SignedTerm> st;
    for (const auto& [ts, c] : terms)
      if (c != 0) st.push_back({ts.first, ts.second, c});
    for (const auto& term : st) {
      const int tl = d.t_lo() + term.t, th = d.t_hi() + term.t, sl = d.s_lo() + term.s, sh = d.s_hi() + term.s;
      if (first) {
        t_lo = tl, t_hi = th, s_lo = sl, s_hi = sh;
        first = false;
      } else {
        t_lo = std::min(t_lo, tl), t_hi = std::max(t_hi, th), s_lo = std::min(s_lo, sl), s_hi = std::max(s_hi, sh);
      }
    }
    partial.push_back(std::move(d));
    sign_terms.push_back(std::move(st));
  }
  if (first) throw_internal("empty Weyl sum");
  numer = BiPoly(t_lo, t_hi, s_lo, s_hi);
  for (std::size_t i = 0; i < partial.size(); ++i)
    for (const auto& term : sign_terms[i]) numer.add_scaled(partial[i], term.coeff, term.t, term.s);
  numer = numer.trimmed();

  // Divide by t^<rho,mu> s^<rho,mu0> prod_{alpha > 0} (1 - t^<-alpha,mu> s^<-alpha,mu0>).
  for (const auto& root : rs.positive_roots) {
    const int c = static_cast<int>(-pair(root.weight, mu));
    const int d = static_cast<int>(-pair(root.weight, mu0));
    if (numer.empty()) break;
    numer = numer.divided_by_binomial(c, d);
  }
  IntPolynomial n = numer.at_s_equal_one(static_cast<int>(-pair(rs.weyl_vector, mu)));

  if (n.is_zero() || n.low_degree() < 0 || n.coeff(0) != 1)
    throw_internal("Hilbert numerator has wrong constant term: " + n.to_abbrev_string(4, 2));
  if (n.degree() > weights.sum()) throw_internal("Hilbert numerator exceeds the degree bound");

  HilbertSeries hs;
  hs.numerator = std::move(n);
  hs.denominator = weights;
  hs.variety_dim = rs.flag_variety_dimension(lambda);
  return hs;
}

CoefficientStream expand(const HilbertSeries& hs, int order) {
  return CoefficientStream{series_quotient(hs.numerator, hs.denominator.weights, order)};
}

std::int64_t canonical_degree(const HilbertSeries& hs) {
  return static_cast<std::int64_t>(hs.numerator.degree()) - hs.denominator.sum();
}

HilbertSeries apply_section(const HilbertSeries& hs, int d) {
  HilbertSeries out = hs;
  if (!out.denominator.remove_one(d))
    throw PreconditionError("section degree " + std::to_string(d) + " is not among the ambient weights [" +
                            exponent_notation(hs.denominator.weights) + "]");
  out.denominator.source.reset();
  out.variety_dim -= 1;
  return out;
}

HilbertSeries apply_cone(const HilbertSeries& hs, int w) {
  if (w < 1) throw PreconditionError("cone weight must be positive");
  HilbertSeries out = hs;
  out.denominator.add(w);
  out.denominator.source.reset();
  out.variety_dim += 1;
  return out;
}

Rational degree_D3(const HilbertSeries& hs) {
  if (hs.variety_dim != 3)
    throw PreconditionError("D^3 needs a threefold, series has dimension " + std::to_string(hs.variety_dim));
  const int m = static_cast<int>(hs.denominator.size());
  const int order = hs.numerator.vanishing_order_at_one();
  if (order != m - 4)
    throw PreconditionError("numerator vanishes to order " + std::to_string(order) + " at t = 1, expected " +
                            std::to_string(m - 4));
  IntPolynomial p = hs.numerator;
  for (int k = 0; k < order; ++k) {
    IntPolynomial q;
    if (!p.divide_one_minus(1, q)) throw_internal("(1-t) division failed");
    p = std::move(q);
  }
  Integer prod = 1;
  for (int w : hs.denominator.weights) prod *= w;
  Rational d3(p.evaluate_at_one(), prod);
  d3.canonicalize();
  return d3;
}

HilbertSeries reduced(const HilbertSeries& hs) {
  HilbertSeries out = hs;
  out.denominator.source.reset();
  std::vector<int> ws = hs.denominator.weights;
  std::sort(ws.rbegin(), ws.rend());
  for (int w : ws) {
    IntPolynomial q;
    if (out.numerator.divide_one_minus(w, q)) {
      out.numerator = std::move(q);
      out.denominator.remove_one(w);
    }
  }
  return out;
}

std::optional<int> gorenstein_sign(const IntPolynomial& numerator) {
  if (numerator.is_zero() || numerator.low_degree() < 0) return std::nullopt;
  const IntPolynomial rev = numerator.reversed();
  if (rev == numerator) return 1;
  if (rev == -numerator) return -1;
  return std::nullopt;
}

bool is_regular(const RootSystemData& rs, const Coweight& mu) {
  for (const auto& r : rs.positive_roots)
    if (pair(r.weight, mu) == 0) return false;
  return true;
}

std::vector<Integer> weyl_sum_series(const RootSystemData& rs, const Weight& lambda, const Coweight& mu,
                                     std::int64_t u, int order) {
  if (!is_regular(rs, mu)) throw PreconditionError("Weyl-sum series needs a regular coweight");
  // Positivity of all embedding weights, as for hilbert_series.
  (void)embedding_weights(rs, lambda, mu, u);
  const auto group = weyl_group(rs);

  IntPolynomial delta;
  for (const auto& g : group) delta.add_term(static_cast<int>(pair(act(g, rs.weyl_vector), mu)), g.parity);
  const int e = delta.low_degree();
  const Integer c0 = delta.coeff(e);
  if (abs(c0) != 1) throw_internal("Weyl denominator has a non-unit leading coefficient");

  // A(t) = sum_w (-1)^w t^<w rho, mu> / (1 - t^{<w lambda, mu> + u}) truncated at t^{order + e}.
  const int top = order + e;
  std::vector<Integer> a(static_cast<std::size_t>(order) + 1);
  for (const auto& g : group) {
    const int start = static_cast<int>(pair(act(g, rs.weyl_vector), mu));
    const int step = static_cast<int>(pair(act(g, lambda), mu) + u);
    for (int x = start; x <= top; x += step) a[x - e] += g.parity;
  }
  // P = A / delta, both shifted by t^e.
  std::vector<Integer> p(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Integer v = a[n];
    for (const auto& [exp, c] : delta.terms()) {
      const int j = exp - e;
      if (j == 0 || j > n) continue;
      v -= c * p[n - j];
    }
    p[n] = v / c0;
  }
  return p;
}

std::pair<IntPolynomial, IntPolynomial> weyl_denominator_sides(const RootSystemData& rs, const Coweight& mu) {
  if (static_cast<int>(mu.size()) != rs.lattice_dim()) throw InputError("coweight length mismatch");
  IntPolynomial lhs;
  for (const auto& g : weyl_group(rs)) lhs.add_term(static_cast<int>(pair(act(g, rs.weyl_vector), mu)), g.parity);
  IntPolynomial rhs = IntPolynomial::monomial(static_cast<int>(pair(rs.weyl_vector, mu)));
  for (const auto& a : rs.positive_root_weights()) rhs = rhs.times_one_minus(static_cast<int>(-pair(a, mu)));
  return {lhs, rhs};
}

}  // namespace wflag
