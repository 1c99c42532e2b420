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

#include "equivloc/residue.hpp"

#include <set>

#include "equivloc/error.hpp"
#include "equivloc/series.hpp"

namespace equivloc {

namespace {

void check_residue_var(const FactoredRatFunc& f, std::size_t var) {
  if (var >= f.vars()->size() || !f.vars()->is_residue(var)) {
    fail("residue taken in a non-residue variable");
  }
  if (!f.is_canonical()) {
    fail("integrand has a denominator factor coupling two residue variables: " +
         f.to_string());
  }
}

FactoredRatFunc residue_unchecked(const FactoredRatFunc& f, std::size_t var) {
  return -series_coefficient(f, var, -1);
}

}  // namespace

FactoredRatFunc residue_at_infinity(const FactoredRatFunc& f, std::size_t var) {
  check_residue_var(f, var);
  if (!f.is_zero() && !f.involves(var)) {
    fail("residue variable " + f.vars()->name(var) + " does not occur in " +
         f.to_string());
  }
  return residue_unchecked(f, var);
}

FactoredRatFunc iterated_residue(const FactoredRatFunc& f, const ResidueOrder& order) {
  std::set<std::size_t> seen;
  for (auto v : order) {
    check_residue_var(f, v);
    if (!seen.insert(v).second) fail("residue order repeats a variable");
  }
  FactoredRatFunc current = f;
  for (std::size_t k = order.size(); k-- > 0;) {
    if (current.is_zero()) break;
    // Later residues in w vanish on numerator terms of w-degree <= d_w - 2.
    std::vector<std::pair<std::size_t, int>> floors;
    for (std::size_t j = 0; j < k; ++j) {
      int d = static_cast<int>(current.denominator_degree_in(order[j]));
      if (d >= 2) floors.emplace_back(order[j], d - 1);
    }
    if (!floors.empty()) {
      Polynomial kept = current.numerator().filtered([&](const Monomial& m) {
        for (auto [w, floor] : floors) {
          if (static_cast<int>(m[w]) < floor) return false;
        }
        return true;
      });
      current = FactoredRatFunc(std::move(kept), current.denominator(), current.scalar());
    }
    current = residue_unchecked(current, order[k]);
  }
  return current;
}

}  // namespace equivloc
