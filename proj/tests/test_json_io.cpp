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

#include <cstdio>
#include <fstream>

#include "wflag/errors.hpp"
#include "wflag/json_io.hpp"

using namespace wflag;

TEST_CASE("series round trip") {
  const auto rs = build_root_system(GroupType::g2());
  const auto hs = hilbert_series(rs, Weight{3, 2}, Coweight{2, -3}, 4);
  const auto back = series_from_json(Json::parse(series_to_json(hs).dump()));
  CHECK(back.numerator == hs.numerator);
  CHECK(back.denominator == hs.denominator);
  CHECK(back.variety_dim == hs.variety_dim);
  CHECK_THROWS_AS(series_from_json(Json{{"numerator", 3}}), InputError);
}

TEST_CASE("quadric round trip keeps checksum and weights") {
  for (const auto& qs : {g2_quadrics(), pfaffians_gr26()}) {
    const Json j = quadrics_to_json(qs, "set");
    const QuadricSet back = quadrics_from_json(Json::parse(j.dump()));
    REQUIRE(back.size() == qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) CHECK(back.polynomials[i] == qs.polynomials[i]);
    CHECK(back.variable_names == qs.variable_names);
    CHECK(back.lattice_weights == qs.lattice_weights);
    CHECK(quadrics_to_json(back, "set")["checksum"] == j["checksum"]);
  }
  const auto rs = build_root_system(GroupType::g2());
  QuadricSet w = g2_quadrics();
  w = assign_weights(w, embedding_variable_weights(w, Coweight{2, -3}, 4));
  const QuadricSet back = quadrics_from_json(quadrics_to_json(w, "weighted"));
  CHECK(back.weights_assigned);
  CHECK(back.degrees == w.degrees);
}

TEST_CASE("corrupted quadric files are refused") {
  Json j = quadrics_to_json(pfaffians_gr26(), "gr26");
  Json tampered = j;
  tampered["polynomials"][0]["terms"][0][0] = "2";
  CHECK_THROWS_AS(quadrics_from_json(tampered), InputError);

  Json bad_index = j;
  bad_index.erase("checksum");
  bad_index["polynomials"][0]["terms"][0][1] = Json::array({1, 99});
  CHECK_THROWS_AS(quadrics_from_json(bad_index), InputError);

  Json inhomogeneous = j;
  inhomogeneous.erase("checksum");
  inhomogeneous["weights"][0] = 2;
  CHECK_THROWS_AS(quadrics_from_json(inhomogeneous), PreconditionError);

  CHECK_THROWS_AS(load_quadrics_file("/nonexistent/quadrics.json"), InputError);
  const char* path = "json_io_garbage.json";
  std::ofstream(path) << "{not json";
  CHECK_THROWS_AS(load_quadrics_file(path), InputError);
  std::remove(path);
}

TEST_CASE("candidate records") {
  const auto rs = build_root_system(GroupType::g2());
  const auto c = build_candidate(rs, Weight{3, 2}, Coweight{0, 0}, 1, 0, {1, 1});
  const Json j = candidate_to_json(c);
  CHECK(j["schema"] == "wflag-candidate/1");
  CHECK(j["d3"] == "18");
  CHECK(j["genus"] == 10);
  CHECK(j["h0"][1] == "12");
  CHECK(j["final_weights"] == "1^12");
  const HilbertSeries hs = series_from_json(j["series"]);
  CHECK(hs.numerator == c.numerator);
}
