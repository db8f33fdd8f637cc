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

#include "wflag/linear_algebra.hpp"

#include <map>
#include <numeric>

#include "wflag/errors.hpp"

namespace wflag {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a * x - b * y, dropping zeros.
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t block_rank(std::vector<SparseRow>& rows) {
  std::map<int, SparseRow> pivots;
  for (auto& row : rows) {
    SparseRow r = std::move(row);
    make_primitive(r);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      const SparseRow& p = it->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), r.front().second.get_mpz_t());
      const Integer a = p.front().second / g;
      const Integer b = r.front().second / g;
      r = combine(a, r, b, p);
      make_primitive(r);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t exact_rank(std::vector<SparseRow> rows, int num_cols) {
  DisjointSets sets(num_cols);
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].first < 0 || row[k].first >= num_cols) throw_internal("column index out of range");
      if (k) sets.unite(row[k - 1].first, row[k].first);
    }
  }
  std::map<int, std::vector<SparseRow>> blocks;
  for (auto& row : rows) {
    if (row.empty()) continue;
    blocks[sets.find(row.front().first)].push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (auto& [_, block] : blocks) rank += block_rank(block);
  return rank;
}

SparseRow primitive_integer_row(const std::vector<std::pair<int, Rational>>& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseRow out;
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    Integer z = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(z));
  }
  make_primitive(out);
  return out;
}

}  // namespace wflag
