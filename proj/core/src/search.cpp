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

#include "wflag/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "wflag/equations.hpp"
#include "wflag/errors.hpp"

namespace wflag {

std::string to_string(SearchTarget t) { return t == SearchTarget::CalabiYau ? "cy3" : "fano3"; }

SearchTarget parse_search_target(const std::string& s) {
  if (s == "cy3" || s == "cy" || s == "calabi-yau") return SearchTarget::CalabiYau;
  if (s == "fano3" || s == "fano") return SearchTarget::Fano;
  throw InputError("unknown search target '" + s + "' (expected cy3 or fano3)");
}

namespace {

std::int64_t target_canonical_degree(SearchTarget t) { return t == SearchTarget::CalabiYau ? 0 : -1; }

std::int64_t weight_level(const Weight& lambda) {
  return std::accumulate(lambda.coords.begin(), lambda.coords.end(), std::int64_t{0});
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Sub-multisets of `pool` (ascending) with k elements and the given sum.
void choose_sections(const std::vector<std::pair<int, int>>& pool, std::size_t pos, int k, std::int64_t sum,
                     std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (sum == 0) out.push_back(current);
    return;
  }
  if (pos == pool.size() || sum <= 0) return;
  const auto [value, available] = pool[pos];
  for (int take = std::min(available, k); take >= 0; --take) {
    if (static_cast<std::int64_t>(take) * value > sum) continue;
    for (int i = 0; i < take; ++i) current.push_back(value);
    choose_sections(pool, pos + 1, k - take, sum - static_cast<std::int64_t>(take) * value, current, out);
    current.resize(current.size() - take);
  }
}

// Colex on ascending multisets: compare from the largest element down.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

struct ClassCell {
  Coweight mu;  // first (u, mu) met in scan order
  std::int64_t u = 0;
  Coweight normalized_mu;
  std::int64_t normalized_u = 0;
};

std::vector<CandidateVariety> evaluate_cell(const RootSystemData& rs, const Weight& lambda, const ClassCell& cell,
                                            SearchTarget target, const SearchLimits& limits, bool& admissible) {
  std::vector<CandidateVariety> out;
  GradedWeightList ambient;
  try {
    ambient = embedding_weights(rs, lambda, cell.normalized_mu, cell.normalized_u);
  } catch (const PreconditionError&) {
    admissible = false;
    return out;
  }
  admissible = true;
  const int dim = rs.flag_variety_dimension(lambda);
  const HilbertSeries hs = hilbert_series(rs, lambda, cell.normalized_mu, cell.normalized_u);
  const std::int64_t k_sigma = canonical_degree(hs);
  const bool wellformed_ambient = is_wellformed_wps(ambient);

  // Dimension of wSigma on each stratum of its own weights, from the
  // shipped equations.
  std::optional<QuadricSet> equations = shipped_equations(rs, lambda);
  if (equations)
    *equations = assign_weights(*equations, embedding_variable_weights(*equations, cell.normalized_mu, cell.normalized_u));
  std::map<int, int> stratum_dim;
  auto ambient_stratum_dim = [&](int r) {
    auto it = stratum_dim.find(r);
    if (it != stratum_dim.end()) return it->second;
    int d = -1;
    if (std::any_of(ambient.weights.begin(), ambient.weights.end(), [r](int w) { return w % r == 0; }))
      d = projective_dimension(restrict_to_stratum(*equations, r));
    return stratum_dim[r] = d;
  };

  for (int cones = 0; cones <= limits.max_cones; ++cones) {
    const int k = dim + cones - 3;
    if (k < 0) continue;
    const std::int64_t section_sum = target_canonical_degree(target) - k_sigma + cones;

    GradedWeightList pool = ambient;
    for (int c = 0; c < cones; ++c) pool.add(1);
    std::vector<std::pair<int, int>> grouped;
    for (int w : pool.weights) {
      if (!grouped.empty() && grouped.back().first == w)
        ++grouped.back().second;
      else
        grouped.emplace_back(w, 1);
    }
    std::vector<std::vector<int>> choices;
    std::vector<int> current;
    if (k == 0) {
      if (section_sum == 0) choices.emplace_back();
    } else {
      choose_sections(grouped, 0, k, section_sum, current, choices);
    }
    std::sort(choices.begin(), choices.end(), colex_less);

    for (const auto& sections : choices) {
      // A cone followed by a degree-1 section gives back the series with
      // one cone fewer, already produced.
      if (cones > 0 && std::find(sections.begin(), sections.end(), 1) != sections.end()) continue;

      HilbertSeries x = hs;
      for (int c = 0; c < cones; ++c) x = apply_cone(x, 1);
      for (int d : sections) x = apply_section(x, d);
      if (!is_wellformed_wps(x.denominator)) continue;
      if (x.numerator.vanishing_order_at_one() != static_cast<int>(x.denominator.size()) - 4) continue;
      const Rational d3 = degree_D3(x);
      if (d3 <= 0) continue;

      CandidateVariety c;
      c.group_type = rs.group_type;
      c.lambda = lambda;
      c.mu = cell.mu;
      c.u = cell.u;
      c.normalized_mu = cell.normalized_mu;
      c.normalized_u = cell.normalized_u;
      c.ambient_dim = dim;
      c.ambient_weights = ambient;
      c.cone_count = cones;
      c.section_degrees.assign(sections.rbegin(), sections.rend());
      c.final_weights = GradedWeightList(x.denominator.weights);
      c.canonical_deg = canonical_degree(x);
      c.numerator = x.numerator;
      c.d3 = d3;
      c.strata = singular_strata(c.final_weights);
      c.wellformed_ambient = wellformed_ambient;
      if (equations) {
        for (const auto& st : c.strata) {
          StratumMeet m;
          m.r = st.r;
          m.ambient_dim = ambient_stratum_dim(st.r);
          m.cutting_sections =
              static_cast<int>(std::count_if(sections.begin(), sections.end(), [&](int d) { return d % st.r == 0; }));
          c.stratum_meets.push_back(m);
        }
        if (target == SearchTarget::Fano && limits.isolated_fano_singularities &&
            std::any_of(c.stratum_meets.begin(), c.stratum_meets.end(),
                        [](const StratumMeet& m) { return m.expected_dim() >= 1; }))
          continue;
      }
      if (c.canonical_deg != target_canonical_degree(target)) throw_internal("section bookkeeping disagrees");
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

HilbertSeries CandidateVariety::series() const {
  HilbertSeries hs;
  hs.numerator = numerator;
  hs.denominator = final_weights;
  hs.variety_dim = 3;
  return hs;
}

MuBox MuBox::symmetric(int dim, std::int64_t r) {
  return MuBox{Coweight(std::vector<std::int64_t>(dim, -r)), Coweight(std::vector<std::int64_t>(dim, r))};
}

bool MuBox::empty() const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo.coords[i] > hi.coords[i]) return true;
  return false;
}

std::pair<Coweight, std::int64_t> normalize_mu(const RootSystemData& rs, const Weight& lambda, const Coweight& mu,
                                               std::int64_t u) {
  if (static_cast<int>(mu.size()) != rs.lattice_dim()) throw InputError("coweight length mismatch");
  if (rs.group_type.kind == GroupKind::GL) {
    std::vector<std::int64_t> a = mu.coords;
    std::sort(a.begin(), a.end(), std::greater<>());
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t shift = floor_div(std::accumulate(a.begin(), a.end(), std::int64_t{0}), n);
    for (auto& x : a) x -= shift;
    return {Coweight(std::move(a)), u + shift * weight_level(lambda)};
  }
  Coweight m = mu;
  for (int guard = 0; guard < 64; ++guard) {
    bool moved = false;
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
      if (pair(rs.simple_roots[i], m) < 0) {
        m = act_dual(simple_reflection(rs, i), m);
        moved = true;
      }
    }
    if (!moved) return {m, u};
  }
  throw_internal("dual Weyl action did not reach the dominant chamber");
}

SearchResult enumerate_candidates(const RootSystemData& rs, const Weight& lambda, const MuBox& box,
                                  std::int64_t u_lo, std::int64_t u_hi, SearchTarget target,
                                  const SearchLimits& limits) {
  const int d = rs.lattice_dim();
  if (static_cast<int>(box.lo.size()) != d || static_cast<int>(box.hi.size()) != d)
    throw InputError("search box has wrong dimension for " + rs.group_type.name());
  if (!rs.is_dominant(lambda)) throw PreconditionError("highest weight is not dominant");
  if (limits.max_cones < 0) throw InputError("cone limit must be non-negative");

  SearchResult result;
  std::vector<ClassCell> classes;
  std::map<std::pair<Coweight, std::int64_t>, std::size_t> seen;
  if (!box.empty() && u_lo <= u_hi) {
    for (std::int64_t u = u_lo; u <= u_hi; ++u) {
      Coweight mu = box.lo;
      while (true) {
        ++result.cells;
        auto key = normalize_mu(rs, lambda, mu, u);
        if (seen.emplace(key, classes.size()).second) classes.push_back({mu, u, key.first, key.second});
        int i = d - 1;
        while (i >= 0 && mu.coords[i] == box.hi.coords[i]) {
          mu.coords[i] = box.lo.coords[i];
          --i;
        }
        if (i < 0) break;
        ++mu.coords[i];
      }
    }
  }
  result.classes = classes.size();

  std::vector<std::vector<CandidateVariety>> per_class(classes.size());
  std::vector<char> admissible(classes.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < classes.size(); i = next++) {
      try {
        bool ok = false;
        per_class[i] = evaluate_cell(rs, lambda, classes[i], target, limits, ok);
        admissible[i] = ok;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = limits.threads ? limits.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(classes.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < classes.size(); ++i) {
    result.admissible += admissible[i] ? 1 : 0;
    for (auto& c : per_class[i]) {
      if (result.candidates.size() == limits.max_candidates) {
        result.truncated = true;
        return result;
      }
      result.candidates.push_back(std::move(c));
    }
  }
  return result;
}

std::vector<std::string> candidate_violations(const CandidateVariety& c, SearchTarget target) {
  std::vector<std::string> v;
  if (c.ambient_dim + c.cone_count - static_cast<int>(c.section_degrees.size()) != 3)
    v.push_back("dimension count is not 3");
  for (int w : c.final_weights.weights)
    if (w < 1) v.push_back("non-positive final weight");
  GradedWeightList pool = c.ambient_weights;
  for (int i = 0; i < c.cone_count; ++i) pool.add(1);
  for (int d : c.section_degrees)
    if (!pool.remove_one(d)) v.push_back("section degree " + std::to_string(d) + " not among the weights");
  if (pool.weights != c.final_weights.weights) v.push_back("final weights do not match sections");
  if (c.canonical_deg != target_canonical_degree(target)) v.push_back("canonical degree misses the target");
  const HilbertSeries hs = c.series();
  if (canonical_degree(hs) != c.canonical_deg) v.push_back("canonical degree disagrees with the numerator");
  if (c.numerator.vanishing_order_at_one() != static_cast<int>(c.final_weights.size()) - 4)
    v.push_back("numerator has the wrong vanishing order at t = 1");
  else if (degree_D3(hs) != c.d3)
    v.push_back("stored D^3 disagrees with the series");
  if (c.d3 <= 0) v.push_back("D^3 is not positive");
  if (!is_wellformed_wps(c.final_weights)) v.push_back("final weights are not well-formed");
  return v;
}

CandidateVariety build_candidate(const RootSystemData& rs, const Weight& lambda, const Coweight& mu, std::int64_t u,
                                 int cones, const std::vector<int>& sections) {
  if (cones < 0) throw InputError("cone count must be non-negative");
  const auto [nmu, nu] = normalize_mu(rs, lambda, mu, u);
  const GradedWeightList ambient = embedding_weights(rs, lambda, nmu, nu);
  const int dim = rs.flag_variety_dimension(lambda);
  if (dim + cones - static_cast<int>(sections.size()) != 3)
    throw PreconditionError("dim " + std::to_string(dim) + " + " + std::to_string(cones) + " cones - " +
                            std::to_string(sections.size()) + " sections is not 3");
  HilbertSeries x = hilbert_series(rs, lambda, nmu, nu);
  for (int c = 0; c < cones; ++c) x = apply_cone(x, 1);
  for (int d : sections) x = apply_section(x, d);

  CandidateVariety c;
  c.group_type = rs.group_type;
  c.lambda = lambda;
  c.mu = mu;
  c.u = u;
  c.normalized_mu = nmu;
  c.normalized_u = nu;
  c.ambient_dim = dim;
  c.ambient_weights = ambient;
  c.cone_count = cones;
  c.section_degrees = sections;
  std::sort(c.section_degrees.begin(), c.section_degrees.end(), std::greater<>());
  c.final_weights = GradedWeightList(x.denominator.weights);
  c.canonical_deg = canonical_degree(x);
  c.numerator = x.numerator;
  if (x.numerator.vanishing_order_at_one() != static_cast<int>(x.denominator.size()) - 4)
    throw PreconditionError("numerator does not vanish to order " + std::to_string(x.denominator.size() - 4) +
                            " at t = 1");
  c.d3 = degree_D3(x);
  c.strata = singular_strata(c.final_weights);
  c.wellformed_ambient = is_wellformed_wps(ambient);
  if (auto eq = shipped_equations(rs, lambda)) {
    const QuadricSet weighted = assign_weights(*eq, embedding_variable_weights(*eq, nmu, nu));
    for (const auto& st : c.strata) {
      StratumMeet m;
      m.r = st.r;
      if (std::any_of(ambient.weights.begin(), ambient.weights.end(), [&](int w) { return w % st.r == 0; }))
        m.ambient_dim = projective_dimension(restrict_to_stratum(weighted, st.r));
      m.cutting_sections =
          static_cast<int>(std::count_if(sections.begin(), sections.end(), [&](int d) { return d % st.r == 0; }));
      c.stratum_meets.push_back(m);
    }
  }
  return c;
}

std::optional<std::int64_t> fano_genus(const CandidateVariety& c) {
  if (c.canonical_deg != -1 || c.d3.get_den() != 1) return std::nullopt;
  const Integer two_g = c.d3.get_num() + 2;
  if (two_g % 2 != 0) return std::nullopt;
  return Integer(two_g / 2).get_si();
}

std::string candidate_report(const CandidateVariety& c) {
  std::ostringstream os;
  const int n_final = static_cast<int>(c.final_weights.size()) - 1;
  os << "group             " << c.group_type.name() << '\n';
  os << "lambda            " << c.lambda << '\n';
  os << "mu, u             " << c.mu << ", " << c.u << '\n';
  os << "normalized mu, u  " << c.normalized_mu << ", " << c.normalized_u << '\n';
  os << "ambient           P^" << c.ambient_weights.size() - 1 << '[' << exponent_notation(c.ambient_weights.weights)
     << "], dim " << c.ambient_dim << '\n';
  os << "cones             " << c.cone_count << '\n';
  os << "sections          ";
  for (std::size_t i = 0; i < c.section_degrees.size(); ++i) os << (i ? "," : "") << c.section_degrees[i];
  os << '\n';
  os << "X in              P^" << n_final << '[' << exponent_notation(c.final_weights.weights) << "], codim "
     << c.codimension() << '\n';
  os << "canonical class   O(" << c.canonical_deg << ")\n";
  os << "D^3               " << to_string(c.d3) << '\n';
  if (auto g = fano_genus(c)) os << "genus             " << *g << '\n';
  os << "numerator         " << c.numerator.to_string() << '\n';
  const auto h0 = expand(c.series(), 10).values;
  os << "h0(nD), n=0..10   ";
  for (std::size_t i = 0; i < h0.size(); ++i) os << (i ? "," : "") << to_string(h0[i]);
  os << '\n';
  if (c.strata.empty()) {
    os << "strata            smooth ambient strata\n";
  } else {
    os << "strata\n";
    for (const auto& s : c.strata) {
      os << "  r=" << s.r << " dim " << s.dimension << " weights";
      for (auto i : s.variable_indices) os << ' ' << c.final_weights.weights[i];
      os << '\n';
    }
  }
  const auto wf = subvariety_wellformed_report(c.final_weights, c.codimension(), c.strata);
  for (const auto& f : wf.flags)
    os << "  check r=" << f.stratum.r << " (codim " << f.codimension << "): " << f.note << '\n';
  os << "singularities     unverified singularity analysis\n";
  return os.str();
}

}  // namespace wflag
