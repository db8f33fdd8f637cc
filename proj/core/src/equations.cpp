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

#include "wflag/equations.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "wflag/errors.hpp"
#include "wflag/json_io.hpp"
#include "wflag/linear_algebra.hpp"

namespace wflag {

namespace detail {
extern const std::string_view kG2QuadricsJson;
}

void WeightedPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != num_vars_) throw InputError("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void WeightedPolynomial::add_quadratic_term(std::size_t i, std::size_t j, const Rational& c) {
  if (i >= num_vars_ || j >= num_vars_) throw InputError("variable index out of range");
  Exponents e(num_vars_, 0);
  ++e[i];
  ++e[j];
  add_term(e, c);
}

Rational WeightedPolynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int WeightedPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

std::int64_t weighted_degree(const Exponents& e, const std::vector<int>& weights) {
  if (e.size() != weights.size()) throw InputError("weight vector has wrong length");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<std::int64_t>(e[i]) * weights[i];
  return d;
}

std::vector<std::int64_t> WeightedPolynomial::weighted_degrees(const std::vector<int>& weights) const {
  std::set<std::int64_t> out;
  for (const auto& [e, c] : terms_) out.insert(weighted_degree(e, weights));
  return {out.begin(), out.end()};
}

Rational WeightedPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != num_vars_) throw InputError("point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= point[i];
    total += m;
  }
  return total;
}

std::string WeightedPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first, matching the usual printed order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (a != 1 || constant) os << wflag::to_string(a) << (constant ? "" : "*");
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!first_var) os << '*';
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << '^' << e[i];
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

std::size_t gr26_variable(int i, int j) {
  if (!(0 <= i && i < j && j < 6)) throw InputError("skew entry must satisfy 0 <= i < j < 6");
  // Rows of the upper triangle hold 5, 4, 3, 2, 1 entries.
  int index = 0;
  for (int r = 0; r < i; ++r) index += 5 - r;
  return static_cast<std::size_t>(index + (j - i - 1));
}

QuadricSet pfaffians_gr26() {
  QuadricSet qs;
  for (int k = 1; k <= 15; ++k) qs.variable_names.push_back("x" + std::to_string(k));
  qs.variable_weights.assign(15, 1);
  qs.lattice_group = GroupType::gl(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      Weight w = Weight::zero(6);
      w.coords[i] = w.coords[j] = 1;
      qs.lattice_weights.push_back(w);
    }

  for (int d1 = 0; d1 < 6; ++d1)
    for (int d2 = d1 + 1; d2 < 6; ++d2) {
      std::vector<int> keep;
      for (int k = 0; k < 6; ++k)
        if (k != d1 && k != d2) keep.push_back(k);
      const int a = keep[0], b = keep[1], c = keep[2], d = keep[3];
      WeightedPolynomial p(15, "Pf(" + std::to_string(d1 + 1) + std::to_string(d2 + 1) + ")");
      p.add_quadratic_term(gr26_variable(a, b), gr26_variable(c, d), 1);
      p.add_quadratic_term(gr26_variable(a, c), gr26_variable(b, d), -1);
      p.add_quadratic_term(gr26_variable(a, d), gr26_variable(b, c), 1);
      qs.polynomials.push_back(std::move(p));
    }
  qs.degrees.assign(qs.polynomials.size(), 2);
  return qs;
}

QuadricSet g2_quadrics() {
  static const QuadricSet cached = quadrics_from_json(nlohmann::json::parse(detail::kG2QuadricsJson));
  return cached;
}

std::optional<QuadricSet> shipped_equations(const RootSystemData& rs, const Weight& lambda) {
  if (rs.group_type == GroupType::g2() && lambda == rs.fundamental_weights[1]) return g2_quadrics();
  if (rs.group_type == GroupType::gl(6) && lambda == Weight{1, 1, 0, 0, 0, 0}) return pfaffians_gr26();
  return std::nullopt;
}

QuadricSet assign_weights(const QuadricSet& qs, const std::vector<int>& weights) {
  if (weights.size() != qs.num_vars())
    throw InputError("expected " + std::to_string(qs.num_vars()) + " variable weights, got " +
                     std::to_string(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] < 1)
      throw PreconditionError("weight of " + qs.variable_names[i] + " must be positive, got " +
                              std::to_string(weights[i]));
  QuadricSet out = qs;
  out.variable_weights = weights;
  out.weights_assigned = true;
  out.degrees.clear();
  for (const auto& p : qs.polynomials) {
    const auto degs = p.weighted_degrees(weights);
    if (degs.size() > 1) {
      std::string list;
      for (auto d : degs) list += (list.empty() ? "" : ", ") + std::to_string(d);
      throw PreconditionError("polynomial " + (p.label().empty() ? std::string("?") : p.label()) +
                              " is not weighted-homogeneous: monomial degrees " + list);
    }
    out.degrees.push_back(degs.empty() ? 0 : degs.front());
  }
  return out;
}

std::vector<int> embedding_variable_weights(const QuadricSet& qs, const Coweight& mu, std::int64_t u) {
  if (!qs.lattice_group || qs.lattice_weights.size() != qs.num_vars())
    throw PreconditionError("quadric set carries no torus weights");
  if (static_cast<int>(mu.size()) != qs.lattice_group->lattice_dim()) throw InputError("coweight length mismatch");
  std::vector<int> out;
  for (std::size_t i = 0; i < qs.num_vars(); ++i) {
    const std::int64_t w = pair(qs.lattice_weights[i], mu) + u;
    if (w < 1)
      throw PreconditionError("variable " + qs.variable_names[i] + " gets non-positive weight " + std::to_string(w));
    out.push_back(static_cast<int>(w));
  }
  return out;
}

QuadricSet restrict_to_stratum(const QuadricSet& qs, int r) {
  if (r < 1) throw InputError("stratum index must be positive");
  if (r == 1) return qs;
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < qs.num_vars(); ++i)
    if (qs.variable_weights[i] % r == 0) alive.push_back(i);
  if (alive.empty()) throw PreconditionError("empty stratum: " + std::to_string(r) + " divides no weight");

  QuadricSet out;
  out.weights_assigned = qs.weights_assigned;
  if (qs.lattice_group && qs.lattice_weights.size() == qs.num_vars()) out.lattice_group = qs.lattice_group;
  for (auto i : alive) {
    out.variable_names.push_back(qs.variable_names[i]);
    out.variable_weights.push_back(qs.variable_weights[i]);
    if (out.lattice_group) out.lattice_weights.push_back(qs.lattice_weights[i]);
  }
  for (std::size_t k = 0; k < qs.polynomials.size(); ++k) {
    const auto& p = qs.polynomials[k];
    WeightedPolynomial residual(alive.size(), p.label());
    for (const auto& [e, c] : p.terms()) {
      Exponents projected(alive.size(), 0);
      int kept = 0;
      for (std::size_t a = 0; a < alive.size(); ++a) {
        projected[a] = e[alive[a]];
        kept += projected[a];
      }
      if (kept == std::accumulate(e.begin(), e.end(), 0)) residual.add_term(projected, c);
    }
    if (residual.is_zero()) continue;
    out.polynomials.push_back(std::move(residual));
    if (k < qs.degrees.size()) out.degrees.push_back(qs.degrees[k]);
  }
  return out;
}

namespace {

SparseRow to_integer_row(const WeightedPolynomial& p, const std::map<Exponents, int>& columns) {
  std::vector<std::pair<int, Rational>> row;
  for (const auto& [e, c] : p.terms()) row.emplace_back(columns.at(e), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return primitive_integer_row(row);
}

void enumerate(const std::vector<int>& weights, const std::vector<std::size_t>& order, std::size_t pos, int remaining,
               Exponents& current, std::vector<Exponents>& out, std::size_t limit) {
  if (remaining == 0) {
    if (out.size() >= limit)
      throw ResourceError("more than " + std::to_string(limit) + " monomials in one degree");
    out.push_back(current);
    return;
  }
  if (pos == order.size()) return;
  const std::size_t v = order[pos];
  const int w = weights[v];
  for (int k = remaining / w; k >= 0; --k) {
    current[v] = k;
    enumerate(weights, order, pos + 1, remaining - k * w, current, out, limit);
  }
  current[v] = 0;
}

}  // namespace

std::size_t coefficient_rank(const QuadricSet& qs) {
  std::map<Exponents, int> columns;
  for (const auto& p : qs.polynomials)
    for (const auto& [e, c] : p.terms()) columns.emplace(e, 0);
  int next = 0;
  for (auto& [e, idx] : columns) idx = next++;
  std::vector<SparseRow> rows;
  for (const auto& p : qs.polynomials) rows.push_back(to_integer_row(p, columns));
  return exact_rank(std::move(rows), next);
}

std::vector<Exponents> monomials_of_degree(const std::vector<int>& weights, int n, std::size_t limit) {
  for (int w : weights)
    if (w < 1) throw PreconditionError("variable weights must be positive");
  std::vector<Exponents> out;
  if (n < 0) return out;
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return weights[a] < weights[b]; });
  Exponents current(weights.size(), 0);
  enumerate(weights, order, 0, n, current, out, limit);
  return out;
}

std::vector<std::int64_t> graded_hilbert_function(const QuadricSet& qs, int n_max, const OracleLimits& limits) {
  if (n_max < 0) return {};
  const auto& weights = qs.variable_weights;
  std::vector<std::int64_t> degs;
  for (const auto& p : qs.polynomials) {
    const auto d = p.weighted_degrees(weights);
    if (d.size() > 1)
      throw PreconditionError("polynomial " + p.label() + " is not weighted-homogeneous under the current weights");
    degs.push_back(d.empty() ? -1 : d.front());
  }

  // Generators as primitive integer term lists, reused in every degree.
  std::vector<std::vector<std::pair<Exponents, Integer>>> gens;
  for (const auto& p : qs.polynomials) {
    std::map<Exponents, int> local;
    for (const auto& [e, c] : p.terms()) local.emplace(e, 0);
    int k = 0;
    for (auto& [e, idx] : local) idx = k++;
    const SparseRow row = to_integer_row(p, local);
    std::vector<std::pair<Exponents, Integer>> terms;
    auto it = local.begin();
    for (const auto& [col, val] : row) {
      while (it->second != col) ++it;
      terms.emplace_back(it->first, val);
    }
    gens.push_back(std::move(terms));
  }

  auto dimension_in_degree = [&](int n) -> std::int64_t {
    const auto monos = monomials_of_degree(weights, n, limits.max_monomials_per_degree);
    std::map<Exponents, int> columns;
    for (std::size_t i = 0; i < monos.size(); ++i) columns.emplace(monos[i], static_cast<int>(i));
    std::vector<SparseRow> rows;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (degs[g] < 0 || degs[g] > n) continue;
      const auto multipliers = monomials_of_degree(weights, n - static_cast<int>(degs[g]), limits.max_monomials_per_degree);
      for (const auto& m : multipliers) {
        SparseRow row;
        for (const auto& [e, c] : gens[g]) {
          Exponents prod = e;
          for (std::size_t v = 0; v < prod.size(); ++v) prod[v] += m[v];
          row.emplace_back(columns.at(prod), c);
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
    }
    const std::size_t rank = exact_rank(std::move(rows), static_cast<int>(monos.size()));
    return static_cast<std::int64_t>(monos.size()) - static_cast<std::int64_t>(rank);
  };

  std::vector<std::future<std::int64_t>> jobs;
  for (int n = 0; n <= n_max; ++n) jobs.push_back(std::async(std::launch::async, dimension_in_degree, n));
  std::vector<std::int64_t> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace wflag
