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

#ifndef EQUIVLOC_RESIDUE_HPP
#define EQUIVLOC_RESIDUE_HPP

#include <cstddef>
#include <vector>

#include "equivloc/ratfunc.hpp"

namespace equivloc {

// Residue variables listed outermost first: {z1, z2, ..., zm} stands for
// Res_{z1=inf} Res_{z2=inf} ... Res_{zm=inf}, so zm is taken first.
using ResidueOrder = std::vector<std::size_t>;

// Classical residue at infinity: MINUS the coefficient of var^-1 in the
// expansion in decreasing powers of var.  With this sign,
//   Res f(x) / ((t0 - x)(t1 - x)) = f(t0)/(t1 - t0) + f(t1)/(t0 - t1).
FactoredRatFunc residue_at_infinity(const FactoredRatFunc& f, std::size_t var);

// Applies residue_at_infinity innermost-first along `order`.  Numerator terms
// whose degree in a not-yet-processed variable is too low to ever reach the
// -1 power are discarded before each step.
FactoredRatFunc iterated_residue(const FactoredRatFunc& f, const ResidueOrder& order);

}  // namespace equivloc

#endif  // EQUIVLOC_RESIDUE_HPP
