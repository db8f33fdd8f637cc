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

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wflag/equations.hpp"
#include "wflag/errors.hpp"
#include "wflag/json_io.hpp"
#include "wflag/lattice.hpp"
#include "wflag/search.hpp"
#include "wflag/series.hpp"
#include "wflag/wps.hpp"

namespace wflag::cli {

namespace {

struct Options {
  std::string group = "G2";
  bool group_given = false;
  std::string lambda;
  std::string mu;
  std::int64_t u = 1;
  std::string sections;
  int cones = 0;
  int order = 10;
  int max_order = 5000;
  std::string format = "text";
  unsigned threads = 0;
  int verbose = 0;

  int oracle = -1;
  int max_oracle_degree = 14;
  std::size_t max_monomials = 200000;
  std::string set = "g2";
  std::string file;
  int stratum = 0;
  std::string export_path;
  bool groebner = false;

  std::string weights;
  int codim = -1;
  int r = 0;
  std::string transverse;

  std::string target = "cy3";
  std::int64_t box = 3;
  std::string mu_lo, mu_hi;
  std::string u_range = "1:6";
  int max_cones = 2;
  std::size_t max_candidates = 100000;
  bool no_isolation_filter = false;

  std::string suite = "all";
  int trials = 20;
  std::uint64_t seed = 1;
};

// Thrown by `verify` when a check fails.
struct VerifyFailure : Error {
  using Error::Error;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string default_lambda(const GroupType& g) { return g.kind == GroupKind::G2 ? "omega2" : "e1+e2"; }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("cannot parse integer '" + item + "' in '" + s + "'");
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const std::int64_t v = std::stoll(s);
      return {v, v};
    }
    return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw InputError("cannot parse range '" + s + "' (expected a:b)");
  }
}

struct Setup {
  RootSystemData rs;
  Weight lambda;
  Coweight mu;
  std::int64_t u = 0;
};

Setup make_setup(const Options& o) {
  Setup s;
  s.rs = build_root_system(GroupType::parse(o.group));
  s.lambda = parse_weight(s.rs, o.lambda.empty() ? default_lambda(s.rs.group_type) : o.lambda);
  if (!s.rs.is_dominant(s.lambda)) throw PreconditionError("highest weight is not dominant");
  s.mu = o.mu.empty() ? Coweight::zero(s.rs.lattice_dim()) : parse_coweight(s.rs, o.mu);
  s.u = o.u;
  return s;
}

void check_order(const Options& o, int order) {
  if (order < 0) throw InputError("order must be non-negative");
  if (order > o.max_order)
    throw ResourceError("order " + std::to_string(order) + " exceeds --max-order " + std::to_string(o.max_order));
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

template <class T>
std::string join_ints(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------

int cmd_hilbert(const Options& o, std::ostream& out) {
  const Setup s = make_setup(o);
  check_order(o, o.order);
  HilbertSeries hs = hilbert_series(s.rs, s.lambda, s.mu, s.u);
  const GradedWeightList ambient = hs.denominator;
  for (int c = 0; c < o.cones; ++c) hs = apply_cone(hs, 1);
  for (int d : parse_int_list(o.sections)) hs = apply_section(hs, d);
  const auto h0 = expand(hs, o.order).values;
  const std::int64_t k = canonical_degree(hs);
  const auto gor = gorenstein_sign(hs.numerator);
  std::optional<Rational> d3;
  if (hs.variety_dim == 3 &&
      hs.numerator.vanishing_order_at_one() == static_cast<int>(hs.denominator.size()) - 4)
    d3 = degree_D3(hs);

  if (json_output(o)) {
    Json j{{"schema", "wflag-hilbert/1"},
           {"group", s.rs.group_type.name()},
           {"lambda", s.lambda.coords},
           {"mu", s.mu.coords},
           {"u", s.u},
           {"ambient_weights", exponent_notation(ambient.weights)},
           {"weights", exponent_notation(hs.denominator.weights)},
           {"series", series_to_json(hs)},
           {"canonical_degree", k},
           {"h0", Json::array()}};
    for (const auto& v : h0) j["h0"].push_back(to_string(v));
    j["gorenstein"] = gor ? Json(*gor) : Json(nullptr);
    if (d3) j["d3"] = to_string(*d3);
    out << j.dump() << '\n';
    return kOk;
  }
  out << "group       " << s.rs.group_type.name() << '\n';
  out << "lambda      " << s.lambda << '\n';
  out << "mu, u       " << s.mu << ", " << s.u << '\n';
  out << "weights     P^" << hs.denominator.size() - 1 << '[' << exponent_notation(hs.denominator.weights) << "]\n";
  out << "dim         " << hs.variety_dim << '\n';
  out << "numerator   " << (o.verbose ? hs.numerator.to_string() : hs.numerator.to_abbrev_string(6, 2)) << '\n';
  out << "K           O(" << k << ")\n";
  out << "gorenstein  " << (gor ? (*gor > 0 ? "+1" : "-1") : "no") << '\n';
  if (d3) out << "D^3         " << to_string(*d3) << '\n';
  out << "h0          " << join(h0) << '\n';
  return kOk;
}

int cmd_weights(const Options& o, std::ostream& out) {
  const Setup s = make_setup(o);
  const WeightSystem ws = weight_system(s.rs, s.lambda);
  const GradedWeightList grades = embedding_weights(s.rs, s.lambda, s.mu, s.u);
  if (json_output(o)) {
    Json rows = Json::array();
    for (const auto& [w, m] : ws.entries)
      rows.push_back(Json{{"weight", w.coords}, {"multiplicity", m}, {"grade", pair(w, s.mu) + s.u}});
    out << Json{{"schema", "wflag-weights/1"},
                {"group", s.rs.group_type.name()},
                {"lambda", s.lambda.coords},
                {"dimension", ws.total_dim},
                {"weyl_dimension", weyl_dimension(s.rs, s.lambda)},
                {"entries", rows},
                {"embedding_weights", exponent_notation(grades.weights)}}
               .dump()
        << '\n';
    return kOk;
  }
  out << "dim V = " << ws.total_dim << " (Weyl formula " << weyl_dimension(s.rs, s.lambda) << ")\n";
  for (const auto& [w, m] : ws.entries)
    out << w << "  mult " << m << "  grade " << pair(w, s.mu) + s.u << '\n';
  out << "embedding weights [" << exponent_notation(grades.weights) << "]\n";
  return kOk;
}

int cmd_strata(const Options& o, std::ostream& out) {
  GradedWeightList weights;
  if (!o.weights.empty()) {
    weights = parse_weight_list(o.weights);
  } else {
    const Setup s = make_setup(o);
    HilbertSeries hs = hilbert_series(s.rs, s.lambda, s.mu, s.u);
    for (int c = 0; c < o.cones; ++c) hs = apply_cone(hs, 1);
    for (int d : parse_int_list(o.sections)) hs = apply_section(hs, d);
    weights = hs.denominator;
  }
  const auto strata = singular_strata(weights);
  const bool wf = is_wellformed_wps(weights);
  std::optional<WellformedReport> report;
  if (o.codim >= 0) report = subvariety_wellformed_report(weights, o.codim, strata);
  std::optional<StratumRecord> qt;
  if (o.r != 0) qt = quotient_type(weights, o.r, parse_int_list(o.transverse));

  if (json_output(o)) {
    Json j{{"schema", "wflag-strata/1"}, {"weights", exponent_notation(weights.weights)}, {"wellformed", wf}};
    j["strata"] = Json::array();
    for (const auto& st : strata) j["strata"].push_back(stratum_to_json(st));
    if (report) {
      Json flags = Json::array();
      for (const auto& f : report->flags)
        flags.push_back(Json{{"r", f.stratum.r},
                             {"codimension", f.codimension},
                             {"would_violate", f.would_violate},
                             {"forced", f.forced},
                             {"note", f.note}});
      j["report"] = Json{{"codim", report->codim}, {"flags", flags}, {"any_forced", report->any_forced()}};
    }
    if (qt) j["quotient_type"] = qt->type_string();
    out << j.dump() << '\n';
    return kOk;
  }
  out << "P^" << weights.size() - 1 << '[' << exponent_notation(weights.weights) << "] "
      << (wf ? "well-formed" : "not well-formed") << '\n';
  if (strata.empty()) out << "no singular strata\n";
  for (const auto& st : strata) {
    out << "r=" << st.r << "  dim " << st.dimension << "  weights";
    for (auto i : st.variable_indices) out << ' ' << weights.weights[i];
    out << '\n';
  }
  if (report) {
    for (const auto& f : report->flags)
      out << "codim " << report->codim << " check r=" << f.stratum.r << " (stratum codim " << f.codimension
          << (f.forced ? ", forced" : "") << "): " << f.note << '\n';
    if (report->flags.empty()) out << "codim " << report->codim << " check: nothing flagged\n";
  }
  if (qt) out << "type " << qt->type_string() << '\n';
  return kOk;
}

QuadricSet selected_equations(const Options& o) {
  if (!o.file.empty()) return load_quadrics_file(o.file);
  if (o.set == "g2") return g2_quadrics();
  if (o.set == "gr26") return pfaffians_gr26();
  throw InputError("unknown equation set '" + o.set + "' (expected g2 or gr26)");
}

int cmd_equations(const Options& o, std::ostream& out) {
  QuadricSet qs = selected_equations(o);
  std::optional<HilbertSeries> expected;
  if (!o.mu.empty() || o.u != 1) {
    if (!qs.lattice_group) throw InputError("equation set carries no torus weights; cannot use --mu/--u");
    const RootSystemData rs = build_root_system(*qs.lattice_group);
    const Coweight mu = o.mu.empty() ? Coweight::zero(rs.lattice_dim()) : parse_coweight(rs, o.mu);
    qs = assign_weights(qs, embedding_variable_weights(qs, mu, o.u));
    const Weight lambda = parse_weight(rs, o.lambda.empty() ? default_lambda(rs.group_type) : o.lambda);
    if (shipped_equations(rs, lambda)) expected = hilbert_series(rs, lambda, mu, o.u);
  }
  if (o.stratum > 1) qs = restrict_to_stratum(qs, o.stratum);
  if (o.oracle > o.max_oracle_degree)
    throw ResourceError("oracle degree " + std::to_string(o.oracle) + " exceeds --max-oracle-degree " +
                        std::to_string(o.max_oracle_degree));
  const std::size_t rank = coefficient_rank(qs);
  std::vector<std::int64_t> oracle;
  if (o.oracle >= 0) oracle = graded_hilbert_function(qs, o.oracle, OracleLimits{o.max_monomials});
  std::optional<int> dim;
  if (o.groebner) dim = projective_dimension(qs);
  std::vector<Integer> series_values;
  if (expected && o.oracle >= 0 && o.stratum <= 1) series_values = expand(*expected, o.oracle).values;
  bool agree = true;
  for (std::size_t n = 0; n < series_values.size(); ++n) agree = agree && series_values[n] == oracle[n];

  if (!o.export_path.empty()) {
    std::ofstream f(o.export_path);
    if (!f) throw InputError("cannot write " + o.export_path);
    f << quadrics_to_json(qs, o.file.empty() ? o.set : o.file).dump(2) << '\n';
  }

  if (json_output(o)) {
    Json j = quadrics_to_json(qs, o.file.empty() ? o.set : o.file);
    j["rank"] = rank;
    j["degrees"] = qs.degrees;
    if (o.oracle >= 0) j["oracle"] = oracle;
    if (!series_values.empty()) j["oracle_matches_series"] = agree;
    if (dim) j["projective_dimension"] = *dim;
    out << j.dump() << '\n';
  } else {
    out << qs.size() << " polynomials in " << qs.num_vars() << " variables, coefficient rank " << rank << '\n';
    out << "weights " << join_ints(qs.variable_weights) << '\n';
    for (std::size_t i = 0; i < qs.size(); ++i) {
      out << qs.polynomials[i].label();
      if (qs.weights_assigned && i < qs.degrees.size()) out << " [deg " << qs.degrees[i] << "]";
      out << ": " << qs.polynomials[i].to_string(qs.variable_names) << '\n';
    }
    if (o.oracle >= 0) out << "oracle h0 " << join_ints(oracle) << '\n';
    if (!series_values.empty()) out << "series   " << join(series_values) << (agree ? "  (agree)" : "  (DIFFER)") << '\n';
    if (dim) out << "projective dimension " << *dim << '\n';
  }
  return agree ? kOk : kInternalError;
}

// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  std::string detail;
};

using SuiteFn = std::function<Check(const Options&, std::mt19937_64&)>;

[[noreturn]] void fail(const std::string& what) { throw VerifyFailure(what); }

Check suite_quadrics(const Options& o, std::mt19937_64&) {
  const QuadricSet qs = g2_quadrics();
  if (qs.size() != 28 || qs.num_vars() != 14) fail("expected 28 quadrics in 14 variables");
  const std::size_t rank = coefficient_rank(qs);
  if (rank != 28) fail("coefficient rank " + std::to_string(rank) + ", expected 28");
  const Coweight mu{2, -3};
  const QuadricSet w = assign_weights(qs, embedding_variable_weights(qs, mu, 4));
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.polynomials[i].weighted_degrees(w.variable_weights).size() != 1) fail(w.polynomials[i].label() + " is not homogeneous");
  const int degree = std::min(o.max_oracle_degree, 8);
  const auto h = graded_hilbert_function(w, degree, OracleLimits{o.max_monomials});
  const auto rs = build_root_system(GroupType::g2());
  const auto series = expand(hilbert_series(rs, Weight{3, 2}, mu, 4), degree).values;
  for (int n = 0; n <= degree; ++n)
    if (series[n] != h[n])
      fail("degree " + std::to_string(n) + ": oracle " + std::to_string(h[n]) + ", series " + to_string(series[n]));
  return {"appendixA", "28/28 homogeneous for mu=(2,-3) u=4, oracle matches the series to degree " +
                           std::to_string(degree)};
}

Check suite_denominator(const Options& o, std::mt19937_64& rng) {
  int count = 0;
  std::vector<GroupType> groups{GroupType::g2(), GroupType::gl(3), GroupType::gl(4), GroupType::gl(6)};
  if (o.group_given) groups = {GroupType::parse(o.group)};
  for (const auto& g : groups) {
    const RootSystemData rs = build_root_system(g);
    std::uniform_int_distribution<int> dist(-6, 6);
    for (int t = 0; t < o.trials; ++t) {
      std::vector<std::int64_t> c(rs.lattice_dim());
      for (auto& x : c) x = dist(rng);
      const Coweight mu(c);
      const auto [lhs, rhs] = weyl_denominator_sides(rs, mu);
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << g.name() << " mu=" << mu << ": " << lhs << " != " << rhs;
        fail(os.str());
      }
      ++count;
    }
  }
  return {"denominator", std::to_string(count) + " coweights"};
}

Check suite_pfaffian(const Options& o, std::mt19937_64& rng) {
  const QuadricSet qs = pfaffians_gr26();
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int t = 0; t < o.trials; ++t) {
    std::vector<Rational> a(6), b(6), point(15);
    for (int i = 0; i < 6; ++i) {
      a[i] = dist(rng);
      b[i] = dist(rng);
    }
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) point[gr26_variable(i, j)] = a[i] * b[j] - a[j] * b[i];
    for (const auto& p : qs.polynomials)
      if (p.evaluate(point) != 0) fail(p.label() + " does not vanish on a decomposable 2-vector");
  }
  return {"pfaffian", std::to_string(qs.size()) + " Pfaffians vanish on " + std::to_string(o.trials) +
                          " rank-2 forms"};
}

Check suite_closedform(const Options& o, std::mt19937_64& rng) {
  struct Case {
    GroupType g;
    const char* lambda;
  };
  int count = 0;
  for (const Case& c : {Case{GroupType::g2(), "omega1"}, Case{GroupType::g2(), "omega2"},
                        Case{GroupType::gl(6), "e1+e2"}}) {
    const RootSystemData rs = build_root_system(c.g);
    const Weight lambda = parse_weight(rs, c.lambda);
    std::uniform_int_distribution<int> dist(-3, 3);
    std::uniform_int_distribution<int> udist(1, 12);
    for (int t = 0; t < o.trials; ++t) {
      std::vector<std::int64_t> v(rs.lattice_dim());
      for (auto& x : v) x = dist(rng);
      const Coweight mu(v);
      const std::int64_t u = udist(rng);
      try {
        embedding_weights(rs, lambda, mu, u);
      } catch (const PreconditionError&) {
        continue;
      }
      if (!closed_form_check(rs, lambda, mu, u)) {
        std::ostringstream os;
        os << c.g.name() << ' ' << c.lambda << " mu=" << mu << " u=" << u << ": closed form differs";
        fail(os.str());
      }
      ++count;
    }
  }
  return {"closedform", std::to_string(count) + " admissible (mu, u)"};
}

Check suite_oracle(const Options& o, std::mt19937_64&) {
  struct Case {
    GroupType g;
    const char* lambda;
    Coweight mu;
    std::int64_t u;
    int degree;
  };
  for (const Case& c : {Case{GroupType::g2(), "omega2", Coweight{0, 0}, 1, 4},
                        Case{GroupType::g2(), "omega2", Coweight{1, 0}, 4, 8},
                        Case{GroupType::gl(6), "e1+e2", Coweight::zero(6), 1, 4}}) {
    const int degree = std::min(o.max_oracle_degree, c.degree);
    const RootSystemData rs = build_root_system(c.g);
    const Weight lambda = parse_weight(rs, c.lambda);
    QuadricSet qs = *shipped_equations(rs, lambda);
    qs = assign_weights(qs, embedding_variable_weights(qs, c.mu, c.u));
    const auto h = graded_hilbert_function(qs, degree, OracleLimits{o.max_monomials});
    const auto series = expand(hilbert_series(rs, lambda, c.mu, c.u), degree).values;
    for (int n = 0; n <= degree; ++n)
      if (series[n] != h[n]) {
        std::ostringstream os;
        os << c.g.name() << " mu=" << c.mu << " u=" << c.u << " degree " << n << ": oracle " << h[n] << ", series "
           << series[n];
        fail(os.str());
      }
  }
  return {"oracle", "3 embeddings agree with the series"};
}

Check suite_normalize(const Options& o, std::mt19937_64& rng) {
  int count = 0;
  for (const auto& g : {GroupType::g2(), GroupType::gl(4), GroupType::gl(6)}) {
    const RootSystemData rs = build_root_system(g);
    const Weight lambda = parse_weight(rs, default_lambda(g));
    std::uniform_int_distribution<int> dist(-5, 5);
    std::uniform_int_distribution<int> udist(-10, 20);
    for (int t = 0; t < o.trials; ++t) {
      std::vector<std::int64_t> v(rs.lattice_dim());
      for (auto& x : v) x = dist(rng);
      const Coweight mu(v);
      const std::int64_t u = udist(rng);
      const auto [nmu, nu] = normalize_mu(rs, lambda, mu, u);
      const auto grade = [&](const Coweight& m, std::int64_t uu) {
        std::vector<std::int64_t> out;
        for (const auto& w : weight_system(rs, lambda).expanded()) out.push_back(pair(w, m) + uu);
        std::sort(out.begin(), out.end());
        return out;
      };
      if (grade(mu, u) != grade(nmu, nu)) {
        std::ostringstream os;
        os << g.name() << " mu=" << mu << " u=" << u << " -> " << nmu << " u=" << nu << " changes the grades";
        fail(os.str());
      }
      if (normalize_mu(rs, lambda, nmu, nu) != std::pair{nmu, nu}) fail("normalization is not idempotent");
      ++count;
    }
  }
  return {"normalize", std::to_string(count) + " coweights"};
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.trials < 1) throw InputError("--trials must be positive");
  const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"appendixA", suite_quadrics}, {"denominator", suite_denominator}, {"pfaffian", suite_pfaffian},
      {"closedform", suite_closedform}, {"oracle", suite_oracle}, {"normalize", suite_normalize}};
  bool known = o.suite == "all";
  for (const auto& [name, fn] : suites) known = known || name == o.suite;
  if (!known) throw InputError("unknown suite '" + o.suite + "'");

  std::mt19937_64 rng(o.seed);
  for (const auto& [name, fn] : suites) {
    if (o.suite != "all" && o.suite != name) continue;
    try {
      const Check c = fn(o, rng);
      if (json_output(o))
        out << Json{{"suite", name}, {"pass", true}, {"detail", c.detail}}.dump() << '\n';
      else
        out << name << ": PASS " << c.detail << '\n';
    } catch (const VerifyFailure& e) {
      if (json_output(o))
        out << Json{{"suite", name}, {"pass", false}, {"detail", e.what()}}.dump() << '\n';
      else
        out << name << ": FAIL " << e.what() << '\n';
      return kInternalError;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const Setup s = make_setup(o);
  const SearchTarget target = parse_search_target(o.target);
  const int d = s.rs.lattice_dim();
  MuBox box = MuBox::symmetric(d, o.box);
  if (!o.mu_lo.empty() || !o.mu_hi.empty()) {
    if (o.mu_lo.empty() || o.mu_hi.empty()) throw InputError("--mu-lo and --mu-hi go together");
    box = MuBox{parse_coweight(s.rs, o.mu_lo), parse_coweight(s.rs, o.mu_hi)};
  }
  if (o.box < 0) throw InputError("--box must be non-negative");
  const auto [u_lo, u_hi] = parse_range(o.u_range);
  SearchLimits limits;
  limits.max_cones = o.max_cones;
  limits.isolated_fano_singularities = !o.no_isolation_filter;
  limits.max_candidates = o.max_candidates;
  limits.threads = o.threads;

  const auto start = std::chrono::steady_clock::now();
  const SearchResult r = enumerate_candidates(s.rs, s.lambda, box, u_lo, u_hi, target, limits);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const auto& c : r.candidates) {
    if (json_output(o)) {
      out << candidate_to_json(c).dump() << '\n';
      continue;
    }
    std::ostringstream row;
    row << "mu=" << c.mu << " u=" << c.u << "  cones " << c.cone_count << "  sections " << join_ints(c.section_degrees)
        << "  P^" << c.final_weights.size() - 1 << '[' << exponent_notation(c.final_weights.weights) << "]  D^3 "
        << to_string(c.d3);
    if (auto g = fano_genus(c)) row << "  g " << *g;
    if (!c.strata.empty()) {
      row << "  strata";
      for (const auto& st : c.strata) row << ' ' << st.r;
    }
    out << row.str() << '\n';
  }
  std::ostringstream summary;
  summary << r.candidates.size() << " candidates (" << to_string(target) << ") from " << r.cells << " cells, "
          << r.classes << " classes, " << r.admissible << " admissible";
  if (json_output(o)) {
    out << Json{{"schema", "wflag-search-summary/1"},
                {"target", to_string(target)},
                {"candidates", r.candidates.size()},
                {"cells", r.cells},
                {"classes", r.classes},
                {"admissible", r.admissible},
                {"truncated", r.truncated}}
               .dump()
        << '\n';
  } else {
    out << summary.str() << '\n';
  }
  if (o.verbose) err << "search took " << secs << " s\n";
  if (r.truncated) {
    err << "warning: stopped at --max-candidates " << o.max_candidates << "; the list is incomplete\n";
    return kResourceBound;
  }
  return kOk;
}

int cmd_report(const Options& o, std::ostream& out) {
  const Setup s = make_setup(o);
  const CandidateVariety c = build_candidate(s.rs, s.lambda, s.mu, s.u, o.cones, parse_int_list(o.sections));
  if (json_output(o))
    out << candidate_to_json(c).dump() << '\n';
  else
    out << candidate_report(c);
  return kOk;
}

unsigned env_threads() {
  if (const char* e = std::getenv("WFLAG_THREADS")) {
    try {
      const int v = std::stoi(e);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Weighted flag varieties: Hilbert series, equations, strata and threefold searches", "wflag"};
  app.set_config("--config", "", "Read options from a key=value file; command-line flags win");
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--group", o.group, "G2 or GL<n>, 3 <= n <= 8")->capture_default_str();
  app.add_option("--lambda", o.lambda, "Highest weight, e.g. omega2 or e1+e2")->join(',');
  app.add_option("--mu", o.mu, "Coweight, comma separated")->join(',');
  app.add_option("--u", o.u, "Shift u")->capture_default_str();
  app.add_option("--sections", o.sections, "Quasi-linear section degrees, comma separated")->join(',');
  app.add_option("--cones", o.cones, "Number of projective cones (weight 1)")->capture_default_str();
  app.add_option("--order", o.order, "Number of h0 terms beyond n=0")->capture_default_str();
  app.add_option("--max-order", o.max_order, "Upper bound for --order")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads (0: WFLAG_THREADS or all cores)");
  app.add_flag("-v,--verbose", o.verbose, "More output");

  app.add_option("--oracle", o.oracle, "Graded Hilbert function of the equations up to this degree");
  app.add_option("--max-oracle-degree", o.max_oracle_degree, "Upper bound for --oracle")->capture_default_str();
  app.add_option("--max-monomials", o.max_monomials, "Monomial bound per degree for the oracle")->capture_default_str();
  app.add_option("--set", o.set, "Built-in equations: g2 or gr26")->capture_default_str();
  app.add_option("--file", o.file, "Equation file (wflag-quadrics/1 JSON)");
  app.add_option("--stratum", o.stratum, "Restrict the equations to the stratum of this r");
  app.add_option("--export", o.export_path, "Write the equations as JSON");
  app.add_flag("--groebner", o.groebner, "Projective dimension from a Groebner basis");

  app.add_option("--weights", o.weights, "Weight list, e.g. 1^2,2,3")->join(',');
  app.add_option("--codim", o.codim, "Codimension for the subvariety well-formedness report");
  app.add_option("--r", o.r, "Stratum for a quotient type");
  app.add_option("--transverse", o.transverse, "Transverse weights for the quotient type")->join(',');

  app.add_option("--target", o.target, "cy3 or fano3")->capture_default_str();
  app.add_option("--box", o.box, "Half-width of the symmetric mu box")->capture_default_str();
  app.add_option("--mu-lo", o.mu_lo, "Lower corner of the mu box")->join(',');
  app.add_option("--mu-hi", o.mu_hi, "Upper corner of the mu box")->join(',');
  app.add_option("--u-range", o.u_range, "u range a:b")->capture_default_str();
  app.add_option("--max-cones", o.max_cones, "Most cones tried")->capture_default_str();
  app.add_option("--max-candidates", o.max_candidates, "Stop after this many candidates")->capture_default_str();
  app.add_flag("--no-isolation-filter", o.no_isolation_filter, "Keep Fano candidates with curves of singularities");

  app.add_option("--suite", o.suite, "appendixA, denominator, pfaffian, closedform, oracle, normalize or all")
      ->capture_default_str();
  app.add_option("--trials", o.trials, "Random trials per suite")->capture_default_str();
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of wSigma(mu, u), optionally cut and coned");
  auto* weights = app.add_subcommand("weights", "Weights of V_lambda and their grades");
  auto* strata = app.add_subcommand("strata", "Singular strata and well-formedness of a weighted projective space");
  auto* equations = app.add_subcommand("equations", "Shipped equations, weights, restriction and Hilbert function");
  auto* verify = app.add_subcommand("verify", "Self-checks");
  auto* search = app.add_subcommand("search", "Search for Calabi-Yau or Fano threefolds");
  auto* report = app.add_subcommand("report", "Report on one candidate");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (o.threads == 0) o.threads = env_threads();
  o.group_given = app.count("--group") > 0;

  try {
    if (hilbert->parsed()) return cmd_hilbert(o, out);
    if (weights->parsed()) return cmd_weights(o, out);
    if (strata->parsed()) return cmd_strata(o, out);
    if (equations->parsed()) return cmd_equations(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (search->parsed()) return cmd_search(o, out, err);
    if (report->parsed()) return cmd_report(o, out);
    err << "wflag: no command\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "wflag: input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "wflag: precondition failed: " << e.what() << '\n';
    return kPreconditionFailed;
  } catch (const ResourceError& e) {
    err << "wflag: resource bound: " << e.what() << '\n';
    return kResourceBound;
  } catch (const std::exception& e) {
    err << "wflag: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace wflag::cli
