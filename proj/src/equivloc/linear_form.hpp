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
#ifndef EQUIVLOC_LINEAR_FORM_HPP
#define EQUIVLOC_LINEAR_FORM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equivloc/polynomial.hpp"

namespace equivloc {

// Affine-linear form  c + sum_i a_i x_i.  Denominator factors of every
// integrand are products of these.
class LinearForm {
 public:
  explicit LinearForm(VarTablePtr vars);

  static LinearForm variable(VarTablePtr vars, std::size_t var,
                             const Rational& coef = Rational(1));
  static LinearForm constant(VarTablePtr vars, const Rational& c);

  const VarTablePtr& vars() const { return vars_; }
  const Rational& coefficient(std::size_t var) const { return coef_.at(var); }
  const Rational& constant_term() const { return constant_; }
  bool is_zero() const;
  bool is_constant() const;
  bool involves(std::size_t var) const { return !coef_.at(var).is_zero(); }
  std::size_t residue_var_count() const;
  // Variables with nonzero coefficient, in table order.
  std::vector<std::size_t> support() const;

  // Returns (s, L') with *this == s * L' and the first nonzero coefficient of
  // L' equal to +1 (variables in table order, then the constant).
  std::pair<Rational, LinearForm> normalized() const;

  Polynomial to_polynomial() const;
  Rational evaluate(std::span<const Rational> point) const;
  LinearForm substitute(const std::map<std::size_t, LinearForm>& bindings) const;

  LinearForm operator-() const;
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& c);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& c) { return a *= c; }
  friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }

  friend bool operator==(const LinearForm& a, const LinearForm& b);
  // Arbitrary but fixed total order, for use as a map key.
  friend bool operator<(const LinearForm& a, const LinearForm& b);

  std::string to_string() const;

 private:
  VarTablePtr vars_;
  std::vector<Rational> coef_;
  Rational constant_;
};

// p / l when l divides p exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& p, const LinearForm& l);

}  // namespace equivloc

#endif  // EQUIVLOC_LINEAR_FORM_HPP
