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

#include "equivloc/random_class.hpp"

#include <algorithm>

#include "equivloc/error.hpp"
#include "equivloc/symfunc.hpp"

namespace equivloc {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1);
  long n = num(rng);
  return Rational(sign(rng) ? -n : n, den(rng));
}

Polynomial random_symmetric_class(const VarTablePtr& vars, int m,
                                  const RandomClassOptions& options,
                                  std::mt19937_64& rng) {
  if (options.min_degree < 0 || options.max_degree < options.min_degree) {
    fail("invalid degree range for random classes");
  }
  std::uniform_int_distribution<int> terms(1, std::max(1, options.max_terms));
  std::uniform_int_distribution<int> degree(options.min_degree, options.max_degree);
  Polynomial out(vars);
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    int d = degree(rng);
    auto shapes = partitions_of(d, m);
    if (shapes.empty()) continue;  // m = 0 and d > 0
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    out += schur(shapes[pick(rng)], vars, m) * random_rational(rng);
  }
  return out;
}

}  // namespace equivloc
