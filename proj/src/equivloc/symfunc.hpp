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

#ifndef EQUIVLOC_SYMFUNC_HPP
#define EQUIVLOC_SYMFUNC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "equivloc/polynomial.hpp"

namespace equivloc {

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;  // |lambda|
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of `total` with at most `max_length` parts, in reverse
// lexicographic order.
std::vector<Partition> partitions_of(int total, int max_length);

// Symmetric functions in the first m residue variables of the table.
Polynomial elementary(int k, const VarTablePtr& vars, int m);
Polynomial complete(int k, const VarTablePtr& vars, int m);
Polynomial power_sum(int k, const VarTablePtr& vars, int m);
// Jacobi-Trudi determinant in complete homogeneous polynomials.
Polynomial schur(const Partition& lambda, const VarTablePtr& vars, int m);

// Invariance under every transposition of residue variables (torus
// variables stay fixed).
bool check_symmetric(const Polynomial& p);
// Average over all permutations of the residue variables.
Polynomial symmetrize(const Polynomial& p);

}  // namespace equivloc

#endif  // EQUIVLOC_SYMFUNC_HPP
