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
#ifndef EQUIVLOC_RATFUNC_HPP
#define EQUIVLOC_RATFUNC_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equivloc/linear_form.hpp"

namespace equivloc {

struct DenFactor {
  LinearForm form;  // normalized: first nonzero coefficient is +1
  unsigned mult = 1;
};

// scalar * numerator / prod(form^mult).  Denominator forms are normalized,
// merged and sorted; no multivariate gcd is ever taken.
class FactoredRatFunc {
 public:
  explicit FactoredRatFunc(Polynomial numerator,
                           const std::vector<LinearForm>& denominator = {},
                           const Rational& scalar = Rational(1));
  FactoredRatFunc(Polynomial numerator, const std::vector<DenFactor>& denominator,
                  const Rational& scalar);

  // core * prod(num_factors) / prod(den_factors), cancelling numerator and
  // denominator factors that agree after normalization before expanding.
  static FactoredRatFunc from_factors(Polynomial core,
                                      const std::vector<LinearForm>& num_factors,
                                      const std::vector<LinearForm>& den_factors,
                                      const Rational& scalar = Rational(1));

  const VarTablePtr& vars() const { return numerator_.vars(); }
  const Polynomial& numerator() const { return numerator_; }
  const std::vector<DenFactor>& denominator() const { return denominator_; }
  const Rational& scalar() const { return scalar_; }
  bool is_zero() const { return numerator_.is_zero(); }

  // Every denominator factor involves at most one residue variable.
  bool is_canonical() const;
  unsigned denominator_degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  // Throws when a denominator factor vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

  // Exact division of the numerator by every denominator factor.
  std::optional<Polynomial> try_polynomial() const;
  Polynomial to_polynomial() const;  // throws a consistency error if inexact

  FactoredRatFunc operator-() const;
  friend FactoredRatFunc operator+(const FactoredRatFunc& a, const FactoredRatFunc& b);
  friend FactoredRatFunc operator-(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    return a + (-b);
  }
  friend FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b);
  friend FactoredRatFunc operator*(FactoredRatFunc a, const Rational& c);

  // Structural equality of the canonical representation.
  friend bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b);
  // Equality as rational functions (cross-multiplied numerators agree).
  bool equivalent(const FactoredRatFunc& other) const;

  std::string to_string() const;

 private:
  void canonicalize(std::vector<DenFactor> raw);

  Polynomial numerator_;
  std::vector<DenFactor> denominator_;
  Rational scalar_{1};
};

}  // namespace equivloc

#endif  // EQUIVLOC_RATFUNC_HPP
