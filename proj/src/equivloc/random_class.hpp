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

#ifndef EQUIVLOC_RANDOM_CLASS_HPP
#define EQUIVLOC_RANDOM_CLASS_HPP

#include <random>

#include "equivloc/polynomial.hpp"

namespace equivloc {

struct RandomClassOptions {
  int min_degree = 0;
  int max_degree = 4;
  int max_terms = 3;  // Schur summands
};

// Nonzero rational with small numerator and denominator.
Rational random_rational(std::mt19937_64& rng);

// A random rational combination of Schur polynomials in the first m
// residue variables, each of degree in [min_degree, max_degree].
Polynomial random_symmetric_class(const VarTablePtr& vars, int m,
                                  const RandomClassOptions& options,
                                  std::mt19937_64& rng);

}  // namespace equivloc

#endif  // EQUIVLOC_RANDOM_CLASS_HPP
