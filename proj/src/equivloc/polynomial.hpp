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
#ifndef EQUIVLOC_POLYNOMIAL_HPP
#define EQUIVLOC_POLYNOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "equivloc/rational.hpp"
#include "equivloc/vartable.hpp"

namespace equivloc {

// Dense exponent vector over the slots of a VarTable.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t deg = 0;

  unsigned operator[](std::size_t var) const { return exp[var]; }
  void set(std::size_t var, unsigned e);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.exp.data(), b.exp.data(), kMaxVars) == 0;
  }
};

// Graded lexicographic order along VarTable order.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  return std::memcmp(a.exp.data(), b.exp.data(), kMaxVars) < 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  Rational coef;
};

class Polynomial;
using Substitution = std::map<std::size_t, Polynomial>;

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// sorted by decreasing graded-lex order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(VarTablePtr vars);

  static Polynomial constant(VarTablePtr vars, const Rational& c);
  static Polynomial variable(VarTablePtr vars, std::size_t var);
  static Polynomial monomial(VarTablePtr vars, const Monomial& m,
                             const Rational& c);
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(VarTablePtr vars, std::vector<Term> terms);

  const VarTablePtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  int min_degree_in(std::size_t var) const;
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;

  // result[k] is the coefficient of var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  // Replaces bound variables by the given polynomials and expands.
  Polynomial substitute(const Substitution& bindings) const;
  // Renames variable i to perm[i]; perm must be a permutation of slots.
  Polynomial permuted(std::span<const std::size_t> perm) const;
  // Keeps only terms accepted by the predicate.
  template <class Pred>
  Polynomial filtered(Pred keep) const {
    Polynomial out(vars_);
    for (const auto& t : terms_) {
      if (keep(t.mono)) out.terms_.push_back(t);
    }
    return out;
  }

  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string() const;

 private:
  void check_same(const Polynomial& o) const;

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

std::string monomial_string(const VarTable& vars, const Monomial& m);

}  // namespace equivloc

#endif  // EQUIVLOC_POLYNOMIAL_HPP
