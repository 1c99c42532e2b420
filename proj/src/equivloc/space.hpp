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

#ifndef EQUIVLOC_SPACE_HPP
#define EQUIVLOC_SPACE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "equivloc/rootdata.hpp"

namespace equivloc {

enum class SpaceKind {
  grass,       // Grass_m(C^n), type A
  lagrangian,  // LG(n), type C
  og_even,     // OG(n, 2n), type D
  og_odd,      // OG(n, 2n+1), type B
};

// A Grassmannian together with the variable table its classes live in:
// t1..tn for the torus, z1..zm (Grass) or z1..zn (LG/OG) for the residues.
class SpaceDescriptor {
 public:
  static SpaceDescriptor grass(int m, int n);
  static SpaceDescriptor lagrangian(int n);
  static SpaceDescriptor og_even(int n);
  static SpaceDescriptor og_odd(int n);
  static SpaceDescriptor from_root_system(const RootSystemSpec& spec);

  // grass:m,n | lg:n | og-:n | og+:n | root:<A|B|C|D>:<n>[:m]
  static SpaceDescriptor parse(std::string_view text);

  SpaceKind kind() const { return kind_; }
  int m() const { return m_; }
  int n() const { return n_; }
  const RootSystemSpec& root_system() const { return root_; }
  int dimension() const { return dimension_; }
  const VarTablePtr& vars() const { return vars_; }
  int residue_count() const { return kind_ == SpaceKind::grass ? m_ : n_; }
  std::size_t t_slot(int i) const { return static_cast<std::size_t>(i); }
  std::size_t z_slot(int i) const { return static_cast<std::size_t>(n_ + i); }

  std::string spec_string() const;  // canonical parseable form
  std::string name() const;         // e.g. "Grass_2(C^4)"

 private:
  SpaceDescriptor(SpaceKind kind, int m, int n);

  SpaceKind kind_;
  int m_;
  int n_;
  RootSystemSpec root_;
  int dimension_;
  VarTablePtr vars_;
};

}  // namespace equivloc

#endif  // EQUIVLOC_SPACE_HPP
