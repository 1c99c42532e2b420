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
#ifndef EQUIVLOC_SERIES_HPP
#define EQUIVLOC_SERIES_HPP

#include <cstddef>
#include <vector>

#include "equivloc/ratfunc.hpp"

namespace equivloc {

// Expansion of a rational function in decreasing powers of one variable:
//   scalar / common_denominator * sum_k coefficients[k] * var^(leading_order - k)
// Coefficients are polynomials in the remaining variables.
struct TruncatedSeries {
  std::size_t var = 0;
  int leading_order = 0;
  std::vector<Polynomial> coefficients;
  std::vector<DenFactor> common_denominator;
  Rational scalar{1};

  // Lowest order still represented.
  int truncation_order() const {
    return leading_order - static_cast<int>(coefficients.size()) + 1;
  }
  // Coefficient of var^order as a rational function; zero above the leading
  // order, an error below the truncation order.
  FactoredRatFunc coefficient_at(int order) const;
  TruncatedSeries truncated(std::size_t depth) const;
};

// Expands f at var = infinity, producing `depth` coefficients starting at
// order deg_var(numerator) - deg_var(denominator).  Denominator factors
// that involve var must not involve other residue variables.
TruncatedSeries expand_at_infinity(const FactoredRatFunc& f, std::size_t var,
                                   std::size_t depth);

// Depth needed to reach the var^-1 coefficient (at least one term).
std::size_t depth_to_minus_one(const FactoredRatFunc& f, std::size_t var);

// Only the coefficient of var^order, without materializing the others.
FactoredRatFunc series_coefficient(const FactoredRatFunc& f, std::size_t var,
                                   int order);

}  // namespace equivloc

#endif  // EQUIVLOC_SERIES_HPP
