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

#include "wflag/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>

#include "wflag/errors.hpp"

namespace wflag {

namespace {

Json coords_json(const std::vector<std::int64_t>& v) { return Json(v); }

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json series_to_json(const HilbertSeries& hs) {
  Json num = Json::array();
  for (const auto& [e, c] : hs.numerator.terms()) num.push_back(Json::array({e, to_string(c)}));
  return Json{{"numerator", num}, {"denominator_weights", hs.denominator.weights}, {"dim", hs.variety_dim}};
}

HilbertSeries series_from_json(const Json& j) {
  try {
    HilbertSeries hs;
    for (const auto& term : j.at("numerator")) {
      if (!term.is_array() || term.size() != 2) throw InputError("numerator terms must be [exp, coeff] pairs");
      hs.numerator.add_term(term.at(0).get<int>(), Integer(term.at(1).get<std::string>()));
    }
    hs.denominator = GradedWeightList(int_list(j.at("denominator_weights"), "denominator_weights"));
    hs.variety_dim = j.at("dim").get<int>();
    return hs;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed series JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("malformed integer in series JSON");
  }
}

std::string polynomials_checksum(const Json& polynomials) {
  std::string canon;
  for (const auto& p : polynomials) {
    canon += p.at("label").get<std::string>() + "|";
    for (const auto& t : p.at("terms")) {
      canon += t.at(0).get<std::string>() + "@";
      bool first = true;
      for (const auto& ix : t.at(1)) {
        if (!first) canon += ",";
        canon += std::to_string(ix.get<int>());
        first = false;
      }
      canon += ";";
    }
    canon += "\n";
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : canon) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json quadrics_to_json(const QuadricSet& qs, const std::string& name) {
  Json polys = Json::array();
  for (const auto& p : qs.polynomials) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      Json idx = Json::array();
      for (std::size_t v = 0; v < it->first.size(); ++v)
        for (int k = 0; k < it->first[v]; ++k) idx.push_back(v + 1);
      terms.push_back(Json::array({to_string(it->second), idx}));
    }
    polys.push_back(Json{{"label", p.label()}, {"terms", terms}});
  }
  Json j{{"schema", "wflag-quadrics/1"},
         {"name", name},
         {"variables", qs.variable_names},
         {"weights", qs.variable_weights}};
  if (qs.lattice_group) {
    Json lw = Json::array();
    for (const auto& w : qs.lattice_weights) lw.push_back(coords_json(w.coords));
    j["lattice"] = Json{{"group", qs.lattice_group->name()}, {"weights", lw}};
  }
  j["checksum"] = polynomials_checksum(polys);
  j["polynomials"] = polys;
  return j;
}

QuadricSet quadrics_from_json(const Json& j) {
  try {
    if (j.at("schema").get<std::string>() != "wflag-quadrics/1") throw InputError("unknown quadric schema");
    QuadricSet qs;
    qs.variable_names = j.at("variables").get<std::vector<std::string>>();
    const std::size_t n = qs.variable_names.size();
    qs.variable_weights = int_list(j.at("weights"), "weights");
    if (qs.variable_weights.size() != n) throw InputError("weights and variables differ in length");
    if (j.contains("lattice")) {
      qs.lattice_group = GroupType::parse(j["lattice"].at("group").get<std::string>());
      for (const auto& w : j["lattice"].at("weights")) qs.lattice_weights.emplace_back(w.get<std::vector<std::int64_t>>());
      if (qs.lattice_weights.size() != n) throw InputError("lattice weights and variables differ in length");
      for (const auto& w : qs.lattice_weights)
        if (static_cast<int>(w.size()) != qs.lattice_group->lattice_dim()) throw InputError("lattice weight length");
    }
    const Json& polys = j.at("polynomials");
    if (j.contains("checksum")) {
      const std::string expected = j["checksum"].get<std::string>();
      const std::string actual = polynomials_checksum(polys);
      if (expected != actual) throw InputError("quadric checksum mismatch: file says " + expected + ", data gives " + actual);
    }
    for (const auto& p : polys) {
      WeightedPolynomial poly(n, p.at("label").get<std::string>());
      for (const auto& t : p.at("terms")) {
        Exponents e(n, 0);
        for (const auto& ix : t.at(1)) {
          const int v = ix.get<int>();
          if (v < 1 || v > static_cast<int>(n)) throw InputError("variable index out of range in " + poly.label());
          ++e[v - 1];
        }
        poly.add_term(e, parse_rational(t.at(0).get<std::string>()));
      }
      qs.polynomials.push_back(std::move(poly));
    }
    // Re-verifies homogeneity and fills the degrees.
    QuadricSet checked = assign_weights(qs, qs.variable_weights);
    checked.weights_assigned =
        std::any_of(qs.variable_weights.begin(), qs.variable_weights.end(), [](int w) { return w != 1; });
    return checked;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed quadric JSON: ") + e.what());
  }
}

QuadricSet load_quadrics_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return quadrics_from_json(j);
}

Json stratum_to_json(const StratumRecord& s) {
  Json j{{"r", s.r}, {"dimension", s.dimension}, {"variable_indices", s.variable_indices}};
  if (!s.quotient_type.empty()) j["type"] = s.type_string();
  return j;
}

Json candidate_to_json(const CandidateVariety& c) {
  Json strata = Json::array();
  for (const auto& s : c.strata) {
    Json sj = stratum_to_json(s);
    std::vector<int> w;
    for (auto i : s.variable_indices) w.push_back(c.final_weights.weights[i]);
    sj["weights"] = w;
    strata.push_back(sj);
  }
  Json h0 = Json::array();
  for (const auto& v : expand(c.series(), 10).values) h0.push_back(to_string(v));
  Json j{{"schema", "wflag-candidate/1"},
         {"group", c.group_type.name()},
         {"lambda", c.lambda.coords},
         {"mu", c.mu.coords},
         {"u", c.u},
         {"normalized_mu", c.normalized_mu.coords},
         {"normalized_u", c.normalized_u},
         {"ambient_dim", c.ambient_dim},
         {"ambient_weights", exponent_notation(c.ambient_weights.weights)},
         {"cone_count", c.cone_count},
         {"section_degrees", c.section_degrees},
         {"final_weights", exponent_notation(c.final_weights.weights)},
         {"canonical_degree", c.canonical_deg},
         {"d3", to_string(c.d3)},
         {"series", series_to_json(c.series())},
         {"h0", h0},
         {"strata", strata},
         {"wellformed_ambient", c.wellformed_ambient},
         {"singularity_analysis", "unverified"}};
  if (auto g = fano_genus(c)) j["genus"] = *g;
  return j;
}

}  // namespace wflag
