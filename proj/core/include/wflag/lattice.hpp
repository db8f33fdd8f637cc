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

#pragma once

// Root systems, weight lattices, Weyl groups and weight systems for G2 and
// GL(n), 3 <= n <= 8.
//
// Weights of G2 are stored in the simple-root basis (alpha1 short, alpha2
// long); weights of GL(n) in the standard basis e1..en. Coweights use the
// dual basis in both cases (beta1, beta2 resp. f1..fn), so the pairing is the
// coordinate dot product.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wflag {

enum class GroupKind { G2, GL };

struct GroupType {
  GroupKind kind = GroupKind::G2;
  int n = 2;  // GL(n) size; 2 for G2

  static GroupType g2() { return {GroupKind::G2, 2}; }
  static GroupType gl(int n) { return {GroupKind::GL, n}; }

  /// "G2", "GL3" ... "GL8". Throws InputError on anything else.
  static GroupType parse(std::string_view name);
  std::string name() const;

  /// Dimension of the weight lattice (2 for G2, n for GL(n)).
  int lattice_dim() const { return kind == GroupKind::G2 ? 2 : n; }

  friend bool operator==(const GroupType&, const GroupType&) = default;
};

/// Integer vector in the weight basis of a group.
struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c) : coords(c) {}

  static Weight zero(int dim) { return Weight(std::vector<std::int64_t>(dim, 0)); }

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(std::int64_t k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Integer vector in the dual (coweight) basis.
struct Coweight {
  std::vector<std::int64_t> coords;

  Coweight() = default;
  explicit Coweight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Coweight(std::initializer_list<std::int64_t> c) : coords(c) {}

  static Coweight zero(int dim) { return Coweight(std::vector<std::int64_t>(dim, 0)); }
  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  std::int64_t sum() const;

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);
std::ostream& operator<<(std::ostream& os, const Coweight& m);

/// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  static IntMatrix identity(int n);

  std::int64_t& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
};

enum class RootLength { Long, Short, Uniform };

struct Root {
  Weight weight;
  RootLength length = RootLength::Uniform;
};

struct RootSystemData {
  GroupType group_type;
  int rank = 0;  // number of simple roots
  std::vector<Weight> simple_roots;
  std::vector<Root> positive_roots;
  std::vector<Weight> fundamental_weights;
  Weight weyl_vector;
  /// Matrix of the pairing Lambda_W x Lambda_W^* -> Z in the chosen bases.
  IntMatrix cartan_pairing;
  /// Symmetric W-invariant form on weight coordinates, normalized so short
  /// roots of G2 have square length 2 and all GL roots square length 2.
  IntMatrix form;

  int lattice_dim() const { return group_type.lattice_dim(); }

  std::int64_t inner(const Weight& a, const Weight& b) const;
  /// <v, alpha_i^vee> = 2 (v, alpha_i) / (alpha_i, alpha_i).
  std::int64_t coroot_pairing(const Weight& v, std::size_t simple_index) const;
  Weight reflect(const Weight& v, std::size_t simple_index) const;
  bool is_dominant(const Weight& v) const;
  /// Dominant representative of the W-orbit of v.
  Weight dominant_conjugate(const Weight& v) const;
  /// Coordinates of a root-lattice element in the simple-root basis.
  /// Throws PreconditionError if v is not in the root lattice.
  std::vector<std::int64_t> simple_root_coordinates(const Weight& v) const;

  std::vector<Weight> positive_root_weights() const;
  std::vector<Weight> roots_of_length(RootLength len) const;  // both signs
  std::vector<Weight> all_roots() const;                      // both signs
  /// Projective dimension of G/P_lambda: #positive roots not orthogonal to lambda.
  int flag_variety_dimension(const Weight& lambda) const;
  /// A coweight pairing strictly positively with every positive root.
  Coweight regular_coweight() const;
};

RootSystemData build_root_system(GroupType type);

std::int64_t pair(const Weight& w, const Coweight& m);

struct WeylElement {
  IntMatrix action;  // acts on weight coordinates (column vectors)
  int parity = 1;    // (-1)^length

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
};

/// All elements, identity first, in breadth-first order over simple reflections.
std::vector<WeylElement> weyl_group(const RootSystemData& rs);
/// The simple reflection s_i as a Weyl element.
WeylElement simple_reflection(const RootSystemData& rs, std::size_t i);

Weight act(const WeylElement& g, const Weight& w);
/// Contragredient action on coweights: <act(g, w), m> = <w, act_dual(g, m)>.
Coweight act_dual(const WeylElement& g, const Coweight& m);

struct WeightSystem {
  /// Sorted by weight; multiplicities positive.
  std::vector<std::pair<Weight, std::int64_t>> entries;
  std::int64_t total_dim = 0;

  std::int64_t multiplicity(const Weight& w) const;
  /// Flattened multiset, each weight repeated by multiplicity.
  std::vector<Weight> expanded() const;
};

/// Weights of the irreducible representation with highest weight lambda,
/// multiplicities from Freudenthal's recursion. Throws PreconditionError for
/// non-dominant lambda.
WeightSystem weight_system(const RootSystemData& rs, const Weight& lambda);

/// Weyl dimension formula; independent of weight_system.
std::int64_t weyl_dimension(const RootSystemData& rs, const Weight& lambda);

/// Parses "omega1", "omega2", "2*omega1+omega2" for G2 and "e1+e2",
/// "2e1+e3", "1,1,0,0,0,0" for GL(n).
Weight parse_weight(const RootSystemData& rs, std::string_view text);
/// Parses a comma separated coweight of the right length.
Coweight parse_coweight(const RootSystemData& rs, std::string_view text);

}  // namespace wflag
