/*
   Copyright 2026 The equivloc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EQUIVLOC_ROOTDATA_HPP
#define EQUIVLOC_ROOTDATA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "equivloc/linear_form.hpp"

namespace equivloc {

enum class RootType { A, B, C, D };

char root_type_letter(RootType t);

// Classical root data with the maximal parabolic of a Grassmannian: for type
// A the parabolic fixing an m-plane in C^n, for B/C/D the one with Levi of
// type A_{n-1}.
struct RootSystemSpec {
  RootType type = RootType::A;
  int rank = 1;  // n
  int m = 1;     // type A only

  static RootSystemSpec type_a(int m, int n);
  static RootSystemSpec of(RootType type, int n);
  void validate() const;
};

// Coordinate vector over e_1..e_n; a root such as e_1 + e_2 is {1, 1, 0, ...}.
using Weight = std::vector<int>;

// Signed permutation acting by e_i -> sign[i] * e_{perm[i]} (0-based).
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> sign;

  static WeylElement identity(int n);
  int size() const { return static_cast<int>(perm.size()); }
  int negative_count() const;
  // (this * other)(e_i) = this(other(e_i)).
  WeylElement compose(const WeylElement& other) const;
  Weight apply(const Weight& w) const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

// A signed coordinate +-e_index.
struct SignedIndex {
  int index = 0;
  int sign = 1;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
  friend auto operator<=>(const SignedIndex&, const SignedIndex&) = default;
};

// X_i for every residue variable i; type A orbits are taken under S_m acting
// on the m residue variables.
using OrbitSets = std::vector<std::vector<SignedIndex>>;

bool is_member(const RootSystemSpec& spec, const WeylElement& w);
std::vector<WeylElement> weyl_generators(const RootSystemSpec& spec);
// Full group by closure under the generators; meant for small rank.
std::vector<WeylElement> weyl_group(const RootSystemSpec& spec);
std::uint64_t weyl_order(const RootSystemSpec& spec);
std::uint64_t wp_order(const RootSystemSpec& spec);

// One representative per coset of W/W_P.
std::vector<WeylElement> coset_reps(const RootSystemSpec& spec);
// Positive roots outside the parabolic: the tangent weights of G/P.
std::vector<Weight> complement_roots(const RootSystemSpec& spec);
OrbitSets orbit_sets(const RootSystemSpec& spec);

// sum_k w[k] * vars[first + k]; the table must hold enough variables.
LinearForm weight_form(const Weight& w, const VarTablePtr& vars, std::size_t first);

}  // namespace equivloc

#endif  // EQUIVLOC_ROOTDATA_HPP
