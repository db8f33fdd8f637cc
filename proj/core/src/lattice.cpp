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

#include "wflag/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "wflag/errors.hpp"

namespace wflag {

// ---------------------------------------------------------------------------
// GroupType

GroupType GroupType::parse(std::string_view name) {
  if (name == "G2") return g2();
  if (name.size() == 3 && name.substr(0, 2) == "GL" && name[2] >= '3' && name[2] <= '8') {
    return gl(name[2] - '0');
  }
  throw InputError("unsupported group type '" + std::string(name) + "' (expected G2 or GL3..GL8)");
}

std::string GroupType::name() const {
  return kind == GroupKind::G2 ? std::string("G2") : "GL" + std::to_string(n);
}

// ---------------------------------------------------------------------------
// Weight / Coweight

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw InputError("weight length mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw InputError("weight length mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords) c = -c;
  return a;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

bool Coweight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

std::int64_t Coweight::sum() const { return std::accumulate(coords.begin(), coords.end(), std::int64_t{0}); }

namespace {
std::ostream& print_vec(std::ostream& os, const std::vector<std::int64_t>& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}
}  // namespace

std::ostream& operator<<(std::ostream& os, const Weight& w) { return print_vec(os, w.coords); }
std::ostream& operator<<(std::ostream& os, const Coweight& m) { return print_vec(os, m.coords); }

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw InputError("matrix shape mismatch");
  IntMatrix p(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

// ---------------------------------------------------------------------------
// RootSystemData

std::int64_t RootSystemData::inner(const Weight& a, const Weight& b) const {
  const int d = lattice_dim();
  if (static_cast<int>(a.size()) != d || static_cast<int>(b.size()) != d)
    throw InputError("weight length does not match lattice dimension");
  std::int64_t s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s += a.coords[i] * form(i, j) * b.coords[j];
  return s;
}

std::int64_t RootSystemData::coroot_pairing(const Weight& v, std::size_t i) const {
  const auto& a = simple_roots.at(i);
  const auto num = 2 * inner(v, a);
  const auto den = inner(a, a);
  if (num % den != 0) throw PreconditionError("vector is not in the weight lattice");
  return num / den;
}

Weight RootSystemData::reflect(const Weight& v, std::size_t i) const {
  return v - coroot_pairing(v, i) * simple_roots.at(i);
}

bool RootSystemData::is_dominant(const Weight& v) const {
  for (std::size_t i = 0; i < simple_roots.size(); ++i)
    if (coroot_pairing(v, i) < 0) return false;
  return true;
}

Weight RootSystemData::dominant_conjugate(const Weight& v) const {
  Weight w = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
      if (coroot_pairing(w, i) < 0) {
        w = reflect(w, i);
        changed = true;
      }
    }
  }
  return w;
}

std::vector<std::int64_t> RootSystemData::simple_root_coordinates(const Weight& v) const {
  if (static_cast<int>(v.size()) != lattice_dim()) throw InputError("weight length mismatch");
  if (group_type.kind == GroupKind::G2) return v.coords;
  // GL(n): v = sum c_k (e_k - e_{k+1}) with c_k the partial sums; total must vanish.
  std::vector<std::int64_t> c;
  std::int64_t partial = 0;
  for (int k = 0; k + 1 < lattice_dim(); ++k) {
    partial += v.coords[k];
    c.push_back(partial);
  }
  if (partial + v.coords.back() != 0) throw PreconditionError("vector is not in the root lattice");
  return c;
}

std::vector<Weight> RootSystemData::positive_root_weights() const {
  std::vector<Weight> out;
  for (const auto& r : positive_roots) out.push_back(r.weight);
  return out;
}

std::vector<Weight> RootSystemData::roots_of_length(RootLength len) const {
  std::vector<Weight> out;
  for (const auto& r : positive_roots) {
    if (r.length != len) continue;
    out.push_back(r.weight);
    out.push_back(-r.weight);
  }
  return out;
}

std::vector<Weight> RootSystemData::all_roots() const {
  std::vector<Weight> out;
  for (const auto& r : positive_roots) {
    out.push_back(r.weight);
    out.push_back(-r.weight);
  }
  return out;
}

int RootSystemData::flag_variety_dimension(const Weight& lambda) const {
  int d = 0;
  for (const auto& r : positive_roots)
    if (inner(lambda, r.weight) != 0) ++d;
  return d;
}

Coweight RootSystemData::regular_coweight() const {
  if (group_type.kind == GroupKind::G2) return Coweight{1, 1};
  std::vector<std::int64_t> c(group_type.n);
  for (int i = 0; i < group_type.n; ++i) c[i] = group_type.n - 1 - i;
  return Coweight(std::move(c));
}

RootSystemData build_root_system(GroupType type) {
  RootSystemData rs;
  rs.group_type = type;
  const int d = type.lattice_dim();
  rs.cartan_pairing = IntMatrix::identity(d);

  if (type.kind == GroupKind::G2) {
    if (type.n != 2) throw InputError("malformed G2 group type");
    rs.rank = 2;
    rs.form = IntMatrix(2, 2);
    rs.form(0, 0) = 2;
    rs.form(0, 1) = rs.form(1, 0) = -3;
    rs.form(1, 1) = 6;
    rs.simple_roots = {Weight{1, 0}, Weight{0, 1}};
    rs.positive_roots = {
        {Weight{1, 0}, RootLength::Short}, {Weight{0, 1}, RootLength::Long},
        {Weight{1, 1}, RootLength::Short}, {Weight{2, 1}, RootLength::Short},
        {Weight{3, 1}, RootLength::Long},  {Weight{3, 2}, RootLength::Long},
    };
    rs.fundamental_weights = {Weight{2, 1}, Weight{3, 2}};
  } else {
    if (type.n < 3 || type.n > 8) throw InputError("GL(n) supported for 3 <= n <= 8");
    const int n = type.n;
    rs.rank = n - 1;
    rs.form = IntMatrix::identity(n);
    auto e = [n](int i) {
      Weight w = Weight::zero(n);
      w.coords[i] = 1;
      return w;
    };
    for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(e(i) - e(i + 1));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) rs.positive_roots.push_back({e(i) - e(j), RootLength::Uniform});
    Weight acc = Weight::zero(n);
    for (int k = 0; k + 1 < n; ++k) {
      acc += e(k);
      rs.fundamental_weights.push_back(acc);
    }
  }
  rs.weyl_vector = Weight::zero(d);
  for (const auto& w : rs.fundamental_weights) rs.weyl_vector += w;
  return rs;
}

std::int64_t pair(const Weight& w, const Coweight& m) {
  if (w.size() != m.size()) throw InputError("pairing basis-length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w.coords[i] * m.coords[i];
  return s;
}

// ---------------------------------------------------------------------------
// Weyl group

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return WeylElement{a.action * b.action, a.parity * b.parity};
}

WeylElement simple_reflection(const RootSystemData& rs, std::size_t i) {
  const int d = rs.lattice_dim();
  IntMatrix m(d, d);
  for (int c = 0; c < d; ++c) {
    Weight basis = Weight::zero(d);
    basis.coords[c] = 1;
    const Weight img = rs.reflect(basis, i);
    for (int r = 0; r < d; ++r) m(r, c) = img.coords[r];
  }
  return WeylElement{std::move(m), -1};
}

std::vector<WeylElement> weyl_group(const RootSystemData& rs) {
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) gens.push_back(simple_reflection(rs, i));

  std::vector<WeylElement> elements;
  std::set<IntMatrix> seen;
  std::deque<std::size_t> queue;
  elements.push_back(WeylElement{IntMatrix::identity(rs.lattice_dim()), 1});
  seen.insert(elements.front().action);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      WeylElement next = s * elements[idx];
      if (seen.insert(next.action).second) {
        elements.push_back(std::move(next));
        queue.push_back(elements.size() - 1);
      }
    }
  }
  return elements;
}

Weight act(const WeylElement& g, const Weight& w) {
  if (static_cast<int>(w.size()) != g.action.cols) throw InputError("Weyl action rank mismatch");
  Weight out = Weight::zero(g.action.rows);
  for (int r = 0; r < g.action.rows; ++r)
    for (int c = 0; c < g.action.cols; ++c) out.coords[r] += g.action(r, c) * w.coords[c];
  return out;
}

Coweight act_dual(const WeylElement& g, const Coweight& m) {
  if (static_cast<int>(m.size()) != g.action.rows) throw InputError("Weyl action rank mismatch");
  Coweight out = Coweight::zero(g.action.cols);
  for (int r = 0; r < g.action.rows; ++r)
    for (int c = 0; c < g.action.cols; ++c) out.coords[c] += g.action(r, c) * m.coords[r];
  return out;
}

// ---------------------------------------------------------------------------
// Weight systems

std::int64_t WeightSystem::multiplicity(const Weight& w) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), w,
                             [](const auto& e, const Weight& key) { return e.first < key; });
  return (it != entries.end() && it->first == w) ? it->second : 0;
}

std::vector<Weight> WeightSystem::expanded() const {
  std::vector<Weight> out;
  for (const auto& [w, m] : entries)
    for (std::int64_t k = 0; k < m; ++k) out.push_back(w);
  return out;
}

namespace {

// mu is a weight of V_lambda iff its dominant conjugate lies below lambda.
bool is_weight_of(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
  const Weight dom = rs.dominant_conjugate(mu);
  std::vector<std::int64_t> c;
  try {
    c = rs.simple_root_coordinates(lambda - dom);
  } catch (const PreconditionError&) {
    return false;
  }
  return std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; });
}

}  // namespace

WeightSystem weight_system(const RootSystemData& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != rs.lattice_dim()) throw InputError("weight length mismatch");
  if (!rs.is_dominant(lambda)) {
    std::ostringstream os;
    os << "highest weight " << lambda << " is not dominant";
    throw PreconditionError(os.str());
  }

  // Breadth-first descent from lambda by simple roots; the weight set is
  // connected under this descent.
  std::map<Weight, std::int64_t> depth;
  std::deque<Weight> queue{lambda};
  depth[lambda] = 0;
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_roots) {
      Weight next = mu - a;
      if (depth.count(next) || !is_weight_of(rs, lambda, next)) continue;
      depth[next] = depth[mu] + 1;
      queue.push_back(next);
    }
  }

  std::vector<Weight> order;
  for (const auto& [w, _] : depth) order.push_back(w);
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& a, const Weight& b) { return depth[a] < depth[b]; });

  const Weight lr = lambda + rs.weyl_vector;
  const std::int64_t norm_lr = rs.inner(lr, lr);
  std::map<Weight, std::int64_t> mult;
  mult[lambda] = 1;
  for (const auto& mu : order) {
    if (mu == lambda) continue;
    std::int64_t num = 0;
    for (const auto& root : rs.positive_roots) {
      const Weight& a = root.weight;
      Weight step = mu + a;
      for (;;) {
        auto it = mult.find(step);
        if (it == mult.end()) {
          if (!depth.count(step)) break;  // left the weight set
        } else {
          num += it->second * rs.inner(step, a);
        }
        step += a;
      }
    }
    num *= 2;
    const Weight mr = mu + rs.weyl_vector;
    const std::int64_t den = norm_lr - rs.inner(mr, mr);
    if (den <= 0 || num % den != 0) throw_internal("Freudenthal recursion produced a non-integer multiplicity");
    const std::int64_t m = num / den;
    if (m > 0) mult[mu] = m;
  }

  WeightSystem ws;
  for (const auto& [w, m] : mult) {
    ws.entries.emplace_back(w, m);
    ws.total_dim += m;
  }
  return ws;
}

std::int64_t weyl_dimension(const RootSystemData& rs, const Weight& lambda) {
  mpq_class prod = 1;
  const Weight lr = lambda + rs.weyl_vector;
  for (const auto& root : rs.positive_roots) {
    prod *= mpq_class(mpz_class(static_cast<long>(rs.inner(lr, root.weight))),
                      mpz_class(static_cast<long>(rs.inner(rs.weyl_vector, root.weight))));
  }
  prod.canonicalize();
  if (prod.get_den() != 1 || !prod.get_num().fits_slong_p()) throw_internal("Weyl dimension not a machine integer");
  return prod.get_num().get_si();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  const std::string s = strip(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(',', pos);
    const std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw InputError("cannot parse integer list '" + std::string(text) + "'");
    out.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

Weight parse_weight(const RootSystemData& rs, std::string_view text) {
  const std::string s = strip(text);
  const int d = rs.lattice_dim();
  if (s.empty()) throw InputError("empty weight");
  if (std::isdigit(static_cast<unsigned char>(s[0])) || (s[0] == '-' && s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1])))) {
    if (s.find_first_of("eo") == std::string::npos && s.find("alpha") == std::string::npos) {
      auto v = parse_int_list(s);
      if (static_cast<int>(v.size()) != d) throw InputError("weight '" + s + "' has wrong length");
      return Weight(std::move(v));
    }
  }

  Weight acc = Weight::zero(d);
  std::size_t i = 0;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t coeff = 1;
    const std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > digits_start) coeff = std::stoll(s.substr(digits_start, i - digits_start));
    if (i < s.size() && s[i] == '*') ++i;
    std::size_t name_start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    const std::string name = s.substr(name_start, i - name_start);
    const std::size_t idx_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (name.empty() || i == idx_start) throw InputError("cannot parse weight '" + s + "'");
    const int idx = std::stoi(s.substr(idx_start, i - idx_start));

    const Weight* basis = nullptr;
    Weight e;
    if (name == "omega" && idx >= 1 && idx <= static_cast<int>(rs.fundamental_weights.size())) {
      basis = &rs.fundamental_weights[idx - 1];
    } else if (name == "alpha" && idx >= 1 && idx <= static_cast<int>(rs.simple_roots.size())) {
      basis = &rs.simple_roots[idx - 1];
    } else if (name == "e" && rs.group_type.kind == GroupKind::GL && idx >= 1 && idx <= d) {
      e = Weight::zero(d);
      e.coords[idx - 1] = 1;
      basis = &e;
    } else {
      throw InputError("unknown weight symbol '" + name + std::to_string(idx) + "' for " + rs.group_type.name());
    }
    acc += (sign * coeff) * *basis;
  }
  return acc;
}

Coweight parse_coweight(const RootSystemData& rs, std::string_view text) {
  auto v = parse_int_list(text);
  if (static_cast<int>(v.size()) != rs.lattice_dim())
    throw InputError("coweight '" + std::string(text) + "' has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(rs.lattice_dim()));
  return Coweight(std::move(v));
}

}  // namespace wflag
