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

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "wflag/errors.hpp"
#include "wflag/search.hpp"

using namespace wflag;

namespace {

std::vector<std::int64_t> grades(const RootSystemData& rs, const Weight& lambda, const Coweight& mu,
                                 std::int64_t u) {
  std::vector<std::int64_t> out;
  for (const auto& w : weight_system(rs, lambda).expanded()) out.push_back(pair(w, mu) + u);
  std::sort(out.begin(), out.end());
  return out;
}

using Key = std::tuple<Coweight, std::int64_t, int, std::vector<int>>;

void subsets(const std::vector<int>& pool, std::size_t from, int k, std::vector<int>& cur, std::set<std::vector<int>>& out) {
  if (k == 0) {
    std::vector<int> s = cur;
    std::sort(s.rbegin(), s.rend());
    out.insert(s);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets(pool, i + 1, k - 1, cur, out);
    cur.pop_back();
  }
}

// Plain rescan of one class without the equation-level filter.
std::set<Key> brute_force_cy(const RootSystemData& rs, const Weight& lambda, const Coweight& nmu, std::int64_t nu) {
  std::set<Key> out;
  HilbertSeries hs;
  try {
    hs = hilbert_series(rs, lambda, nmu, nu);
    embedding_weights(rs, lambda, nmu, nu);
  } catch (const PreconditionError&) {
    return out;
  }
  const int dim = rs.flag_variety_dimension(lambda);
  for (int cones = 0; cones <= 2; ++cones) {
    std::vector<int> pool = hs.denominator.weights;
    for (int c = 0; c < cones; ++c) pool.push_back(1);
    std::set<std::vector<int>> choices;
    std::vector<int> cur;
    subsets(pool, 0, dim + cones - 3, cur, choices);
    for (const auto& s : choices) {
      if (cones > 0 && std::count(s.begin(), s.end(), 1)) continue;
      HilbertSeries x = hs;
      for (int c = 0; c < cones; ++c) x = apply_cone(x, 1);
      for (int d : s) x = apply_section(x, d);
      if (canonical_degree(x) != 0 || !is_wellformed_wps(x.denominator)) continue;
      if (x.numerator.vanishing_order_at_one() != static_cast<int>(x.denominator.size()) - 4) continue;
      if (degree_D3(x) <= 0) continue;
      out.emplace(nmu, nu, cones, s);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("normalization keeps the embedding weights") {
  std::mt19937_64 rng(17);
  for (const auto& g : {GroupType::g2(), GroupType::gl(3), GroupType::gl(6)}) {
    const auto rs = build_root_system(g);
    const Weight lambda = g.kind == GroupKind::G2 ? Weight{3, 2} : parse_weight(rs, "e1+e2");
    std::uniform_int_distribution<int> d(-6, 6), du(-20, 20);
    for (int t = 0; t < 100; ++t) {
      std::vector<std::int64_t> v(rs.lattice_dim());
      for (auto& x : v) x = d(rng);
      const Coweight mu(v);
      const std::int64_t u = du(rng);
      const auto [nmu, nu] = normalize_mu(rs, lambda, mu, u);
      CAPTURE(mu);
      CHECK(grades(rs, lambda, mu, u) == grades(rs, lambda, nmu, nu));
      CHECK(normalize_mu(rs, lambda, nmu, nu) == std::pair{nmu, nu});
      if (g.kind == GroupKind::GL) {
        CHECK(std::is_sorted(nmu.coords.rbegin(), nmu.coords.rend()));
        CHECK(nmu.sum() >= 0);
        CHECK(nmu.sum() < rs.lattice_dim());
      } else {
        for (const auto& a : rs.simple_roots) CHECK(pair(a, nmu) >= 0);
      }
      // Any Weyl image lands in the same class.
      for (const auto& w : weyl_group(rs))
        if (g.kind == GroupKind::G2) CHECK(normalize_mu(rs, lambda, act_dual(w, mu), u) == std::pair{nmu, nu});
    }
  }
  const auto g2 = build_root_system(GroupType::g2());
  CHECK(normalize_mu(g2, Weight{3, 2}, Coweight{2, -3}, 4) == std::pair{Coweight{1, 0}, std::int64_t{4}});
  const auto gl6 = build_root_system(GroupType::gl(6));
  CHECK(normalize_mu(gl6, Weight{1, 1, 0, 0, 0, 0}, Coweight{1, 1, 1, 1, 1, 1}, 3) ==
        std::pair{Coweight::zero(6), std::int64_t{5}});
}

TEST_CASE("CY search over a G2 box") {
  const auto rs = build_root_system(GroupType::g2());
  const auto r = enumerate_candidates(rs, Weight{3, 2}, MuBox::symmetric(2, 3), 4, 4, SearchTarget::CalabiYau);
  CHECK_FALSE(r.truncated);
  CHECK(r.cells == 49);
  bool found = false;
  for (const auto& c : r.candidates) {
    CHECK(candidate_violations(c, SearchTarget::CalabiYau).empty());
    if (c.normalized_mu == Coweight{1, 0} && c.section_degrees == std::vector<int>{7, 5} && c.cone_count == 0) {
      found = true;
      CHECK(c.d3 == Rational(45, 56));
      CHECK(exponent_notation(c.final_weights.weights) == "1^2,2,3^2,4^4,5,6,7");
    }
  }
  CHECK(found);
}

TEST_CASE("search result matches a plain rescan") {
  const auto rs = build_root_system(GroupType::g2());
  const Weight lambda{3, 2};
  const MuBox box = MuBox::symmetric(2, 2);
  const auto r = enumerate_candidates(rs, lambda, box, 3, 5, SearchTarget::CalabiYau);
  std::set<Key> got;
  for (const auto& c : r.candidates) got.emplace(c.normalized_mu, c.normalized_u, c.cone_count, c.section_degrees);
  CHECK(got.size() == r.candidates.size());

  std::set<Key> expected;
  std::set<std::pair<Coweight, std::int64_t>> classes;
  for (std::int64_t u = 3; u <= 5; ++u)
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) classes.insert(normalize_mu(rs, lambda, Coweight{a, b}, u));
  for (const auto& [m, u] : classes) {
    const auto part = brute_force_cy(rs, lambda, m, u);
    expected.insert(part.begin(), part.end());
  }
  CHECK(got == expected);
  CHECK(r.classes == classes.size());
}

TEST_CASE("search is independent of the thread count") {
  const auto rs = build_root_system(GroupType::g2());
  SearchLimits one;
  one.threads = 1;
  SearchLimits many;
  many.threads = 4;
  const auto a = enumerate_candidates(rs, Weight{3, 2}, MuBox::symmetric(2, 3), 1, 6, SearchTarget::Fano, one);
  const auto b = enumerate_candidates(rs, Weight{3, 2}, MuBox::symmetric(2, 3), 1, 6, SearchTarget::Fano, many);
  REQUIRE(a.candidates.size() == b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    CHECK(a.candidates[i].mu == b.candidates[i].mu);
    CHECK(a.candidates[i].u == b.candidates[i].u);
    CHECK(a.candidates[i].section_degrees == b.candidates[i].section_degrees);
    CHECK(a.candidates[i].cone_count == b.candidates[i].cone_count);
  }
}

TEST_CASE("Fano search keeps the straight section") {
  const auto rs = build_root_system(GroupType::g2());
  const auto r = enumerate_candidates(rs, Weight{3, 2}, MuBox::symmetric(2, 1), 1, 2, SearchTarget::Fano);
  bool straight = false;
  for (const auto& c : r.candidates) {
    CHECK(candidate_violations(c, SearchTarget::Fano).empty());
    for (const auto& m : c.stratum_meets) CHECK(m.expected_dim() <= 0);
    if (c.normalized_mu == Coweight{0, 0} && c.normalized_u == 1) {
      straight = true;
      CHECK(c.d3 == 18);
      CHECK(fano_genus(c) == 10);
    }
  }
  CHECK(straight);

  SearchLimits open;
  open.isolated_fano_singularities = false;
  const auto all = enumerate_candidates(rs, Weight{3, 2}, MuBox::symmetric(2, 1), 1, 2, SearchTarget::Fano, open);
  CHECK(all.candidates.size() >= r.candidates.size());
}

TEST_CASE("candidate limit truncates") {
  const auto rs = build_root_system(GroupType::g2());
  SearchLimits lim;
  lim.max_candidates = 3;
  const auto r = enumerate_candidates(rs, Weight{3, 2}, MuBox::symmetric(2, 3), 4, 4, SearchTarget::CalabiYau, lim);
  CHECK(r.truncated);
  CHECK(r.candidates.size() == 3);
}

TEST_CASE("search input errors") {
  const auto rs = build_root_system(GroupType::g2());
  CHECK_THROWS_AS(enumerate_candidates(rs, Weight{3, 2}, MuBox::symmetric(3, 1), 1, 1, SearchTarget::Fano), InputError);
  CHECK_THROWS_AS(enumerate_candidates(rs, Weight{-1, 0}, MuBox::symmetric(2, 1), 1, 1, SearchTarget::Fano),
                  PreconditionError);
  CHECK(enumerate_candidates(rs, Weight{3, 2}, MuBox::symmetric(2, 1), 3, 2, SearchTarget::Fano).cells == 0);
  CHECK_THROWS_AS(parse_search_target("k3"), InputError);
  CHECK(parse_search_target(to_string(SearchTarget::Fano)) == SearchTarget::Fano);
}

TEST_CASE("explicit candidates") {
  const auto rs = build_root_system(GroupType::g2());
  const auto c = build_candidate(rs, Weight{3, 2}, Coweight{2, -3}, 4, 0, {5, 7});
  CHECK(c.section_degrees == std::vector<int>{7, 5});
  CHECK(c.canonical_deg == 0);
  CHECK(c.d3 == Rational(45, 56));
  CHECK(c.normalized_mu == Coweight{1, 0});
  CHECK(candidate_violations(c, SearchTarget::CalabiYau).empty());
  CHECK_FALSE(candidate_violations(c, SearchTarget::Fano).empty());
  // r = 7 is a point of the ambient, r = 4 a curve, r = 6 is missed.
  for (const auto& m : c.stratum_meets) {
    if (m.r == 7) CHECK(m.ambient_dim == 1);
    if (m.r == 6) CHECK(m.ambient_dim == -1);
    if (m.r == 4) CHECK(m.expected_dim() == 1);
  }
  const auto report = candidate_report(c);
  CHECK(report.find("45/56") != std::string::npos);
  CHECK(report.find("unverified singularity analysis") != std::string::npos);

  CHECK_THROWS_AS(build_candidate(rs, Weight{3, 2}, Coweight{2, -3}, 4, 0, {5}), PreconditionError);
  CHECK_THROWS_AS(build_candidate(rs, Weight{3, 2}, Coweight{2, -3}, 4, 0, {5, 9}), PreconditionError);
}
