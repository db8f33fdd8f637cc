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

#include "wflag/errors.hpp"
#include "wflag/lattice.hpp"
#include "wflag/series.hpp"

using namespace wflag;

namespace {

std::vector<GroupType> all_groups() {
  std::vector<GroupType> out{GroupType::g2()};
  for (int n = 3; n <= 8; ++n) out.push_back(GroupType::gl(n));
  return out;
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("group type names round-trip") {
  for (const auto& g : all_groups()) CHECK(GroupType::parse(g.name()) == g);
  CHECK_THROWS_AS(GroupType::parse("E8"), InputError);
  CHECK_THROWS_AS(GroupType::parse("GL9"), InputError);
  CHECK_THROWS_AS(GroupType::parse("GL2"), InputError);
}

TEST_CASE("G2 root data") {
  const auto rs = build_root_system(GroupType::g2());
  CHECK(rs.fundamental_weights[0] == Weight{2, 1});
  CHECK(rs.fundamental_weights[1] == Weight{3, 2});
  CHECK(rs.weyl_vector == Weight{5, 3});
  CHECK(rs.positive_roots.size() == 6);
  CHECK(weyl_group(rs).size() == 12);

  // rho is half the sum of the positive roots.
  Weight sum = Weight::zero(2);
  for (const auto& r : rs.positive_roots) sum += r.weight;
  CHECK(sum == 2 * rs.weyl_vector);

  // s1(alpha2) = alpha2 + 3 alpha1
  const Weight a1 = rs.simple_roots[0], a2 = rs.simple_roots[1];
  CHECK(rs.reflect(a2, 0) == a2 + 3 * a1);
  CHECK(rs.reflect(a1, 1) == a1 + a2);

  // Orbit of omega1 is the set of short roots.
  std::set<Weight> orbit;
  for (const auto& g : weyl_group(rs)) orbit.insert(act(g, rs.fundamental_weights[0]));
  const auto shorts = rs.roots_of_length(RootLength::Short);
  CHECK(orbit == std::set<Weight>(shorts.begin(), shorts.end()));
  const auto longs = rs.roots_of_length(RootLength::Long);
  CHECK(shorts.size() == 6);
  CHECK(longs.size() == 6);
  for (const auto& r : shorts) CHECK(rs.inner(r, r) == 2);
  for (const auto& r : longs) CHECK(rs.inner(r, r) == 6);
}

TEST_CASE("GL(n) root data") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto rs = build_root_system(GroupType::gl(n));
    CHECK(rs.positive_roots.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(static_cast<std::int64_t>(weyl_group(rs).size()) == factorial(n));
    for (int i = 0; i < n; ++i) CHECK(rs.weyl_vector.coords[i] == n - 1 - i);
    // 2 rho and the positive-root sum differ by a multiple of (1, ..., 1).
    Weight diff = 2 * rs.weyl_vector;
    for (const auto& r : rs.positive_roots) diff -= r.weight;
    for (const auto& r : rs.all_roots()) CHECK(rs.inner(diff, r) == 0);
  }
}

TEST_CASE("reflections are involutions preserving the form") {
  for (const auto& g : all_groups()) {
    const auto rs = build_root_system(g);
    for (const auto& v : rs.all_roots())
      for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
        CHECK(rs.reflect(rs.reflect(v, i), i) == v);
        CHECK(rs.inner(rs.reflect(v, i), rs.reflect(v, i)) == rs.inner(v, v));
      }
  }
}

TEST_CASE("Weyl group parity is a homomorphism") {
  for (const auto& g : {GroupType::g2(), GroupType::gl(4)}) {
    const auto rs = build_root_system(g);
    const auto w = weyl_group(rs);
    for (const auto& a : w)
      for (const auto& b : w) {
        const WeylElement ab = a * b;
        CHECK(ab.parity == a.parity * b.parity);
      }
  }
}

TEST_CASE("contragredient action preserves the pairing") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (const auto& g : {GroupType::g2(), GroupType::gl(5)}) {
    const auto rs = build_root_system(g);
    for (int t = 0; t < 30; ++t) {
      std::vector<std::int64_t> wv(rs.lattice_dim()), mv(rs.lattice_dim());
      for (auto& x : wv) x = d(rng);
      for (auto& x : mv) x = d(rng);
      const Weight w(wv);
      const Coweight m(mv);
      for (const auto& e : weyl_group(rs)) CHECK(pair(act(e, w), m) == pair(w, act_dual(e, m)));
    }
  }
}

TEST_CASE("weight systems") {
  const auto g2 = build_root_system(GroupType::g2());
  const auto v7 = weight_system(g2, Weight{2, 1});
  CHECK(v7.total_dim == 7);
  CHECK(v7.multiplicity(Weight{0, 0}) == 1);
  const auto v14 = weight_system(g2, Weight{3, 2});
  CHECK(v14.total_dim == 14);
  CHECK(v14.multiplicity(Weight{0, 0}) == 2);
  for (const auto& r : g2.all_roots()) CHECK(v14.multiplicity(r) == 1);

  const auto gl6 = build_root_system(GroupType::gl(6));
  const auto w15 = weight_system(gl6, Weight{1, 1, 0, 0, 0, 0});
  CHECK(w15.total_dim == 15);
  for (const auto& [w, m] : w15.entries) CHECK(m == 1);

  CHECK_THROWS_AS(weight_system(g2, Weight{-1, 0}), PreconditionError);
}

TEST_CASE("Freudenthal agrees with the Weyl dimension formula") {
  const auto g2 = build_root_system(GroupType::g2());
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const Weight lambda = a * g2.fundamental_weights[0] + b * g2.fundamental_weights[1];
      CAPTURE(lambda);
      CHECK(weight_system(g2, lambda).total_dim == weyl_dimension(g2, lambda));
    }
  for (int n = 3; n <= 5; ++n) {
    const auto rs = build_root_system(GroupType::gl(n));
    for (const auto& c : std::vector<std::vector<std::int64_t>>{{2, 1}, {1, 1, 1}, {3, 0}, {2, 2, 1}}) {
      std::vector<std::int64_t> v(n, 0);
      std::copy(c.begin(), c.end(), v.begin());
      const Weight lambda(v);
      CHECK(weight_system(rs, lambda).total_dim == weyl_dimension(rs, lambda));
    }
  }
}

TEST_CASE("weight multiplicities are Weyl invariant") {
  const auto g2 = build_root_system(GroupType::g2());
  const auto ws = weight_system(g2, Weight{4, 2});
  for (const auto& g : weyl_group(g2))
    for (const auto& [w, m] : ws.entries) CHECK(ws.multiplicity(act(g, w)) == m);
}

TEST_CASE("Weyl denominator identity") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> d(-7, 7);
  for (const auto& g : {GroupType::g2(), GroupType::gl(3), GroupType::gl(4), GroupType::gl(5), GroupType::gl(6)}) {
    const auto rs = build_root_system(g);
    for (int t = 0; t < 25; ++t) {
      std::vector<std::int64_t> v(rs.lattice_dim());
      for (auto& x : v) x = d(rng);
      const Coweight mu(v);
      CAPTURE(mu);
      const auto [lhs, rhs] = weyl_denominator_sides(rs, mu);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("weight parsing") {
  const auto g2 = build_root_system(GroupType::g2());
  CHECK(parse_weight(g2, "omega2") == Weight{3, 2});
  CHECK(parse_weight(g2, "2*omega1+omega2") == Weight{7, 4});
  CHECK(parse_weight(g2, "3,2") == Weight{3, 2});
  const auto gl6 = build_root_system(GroupType::gl(6));
  CHECK(parse_weight(gl6, "e1+e2") == Weight{1, 1, 0, 0, 0, 0});
  CHECK(parse_coweight(gl6, "2,1,0,0,-1,-2") == Coweight{2, 1, 0, 0, -1, -2});
  CHECK_THROWS_AS(parse_coweight(gl6, "1,2"), InputError);
  CHECK_THROWS_AS(parse_weight(g2, "omega7"), InputError);
}
