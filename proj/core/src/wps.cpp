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

#include "wflag/wps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wflag/errors.hpp"

namespace wflag {

std::string StratumRecord::type_string() const {
  std::ostringstream os;
  os << "1/" << r << '(';
  for (std::size_t i = 0; i < quotient_type.size(); ++i) os << (i ? "," : "") << quotient_type[i];
  os << ')';
  return os.str();
}

bool is_wellformed_wps(const GradedWeightList& weights) {
  const auto& w = weights.weights;
  if (w.empty()) throw InputError("empty weight list");
  // Some n of the n+1 weights share a prime p exactly when at most one
  // weight is prime to p; it is enough to test the prime factors of each
  // weight.
  if (w.size() < 2) return true;
  auto shared_by_all_but_one = [&](int p) {
    return std::count_if(w.begin(), w.end(), [p](int y) { return y % p != 0; }) <= 1;
  };
  for (int x : w) {
    for (int p = 2; p * p <= x; ++p) {
      if (x % p) continue;
      if (shared_by_all_but_one(p)) return false;
      while (x % p == 0) x /= p;
    }
    if (x > 1 && shared_by_all_but_one(x)) return false;
  }
  return true;
}

std::vector<StratumRecord> singular_strata(const GradedWeightList& weights) {
  std::vector<StratumRecord> out;
  const int top = weights.max();
  for (int r = top; r >= 2; --r) {
    StratumRecord rec;
    rec.r = r;
    int g = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights.weights[i] % r == 0) {
        rec.variable_indices.push_back(i);
        g = std::gcd(g, weights.weights[i]);
      }
    if (rec.variable_indices.empty() || g != r) continue;
    rec.dimension = static_cast<int>(rec.variable_indices.size()) - 1;
    out.push_back(std::move(rec));
  }
  return out;
}

StratumRecord quotient_type(const GradedWeightList& weights, int r, const std::vector<int>& transverse_weights) {
  if (r <= 1) throw InputError("quotient type needs r >= 2, got " + std::to_string(r));
  StratumRecord rec;
  rec.r = r;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights.weights[i] % r == 0) rec.variable_indices.push_back(i);
  if (rec.variable_indices.empty())
    throw PreconditionError("no stratum: " + std::to_string(r) + " divides no weight");
  rec.dimension = static_cast<int>(rec.variable_indices.size()) - 1;
  for (int b : transverse_weights) rec.quotient_type.push_back(((b % r) + r) % r);
  return rec;
}

bool WellformedReport::any_forced() const {
  return std::any_of(flags.begin(), flags.end(), [](const StratumFlag& f) { return f.forced; });
}

WellformedReport subvariety_wellformed_report(const GradedWeightList& weights, int codim,
                                              const std::vector<StratumRecord>& strata) {
  WellformedReport report;
  report.codim = codim;
  const int n = static_cast<int>(weights.size()) - 1;
  for (const auto& s : strata) {
    StratumFlag f;
    f.stratum = s;
    f.codimension = n - s.dimension;
    if (f.codimension > codim + 1) continue;
    f.would_violate = true;
    f.forced = f.codimension <= 1;
    f.note = f.forced ? "meets X in a divisor for dimension reasons"
                      : "requires equation-level confirmation (restrict the equations to r = " + std::to_string(s.r) + ")";
    report.flags.push_back(std::move(f));
  }
  return report;
}

}  // namespace wflag
