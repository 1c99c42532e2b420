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
#include "equivloc/series.hpp"

#include <algorithm>

#include "equivloc/error.hpp"

namespace equivloc {

namespace {

// Splits f into the var-dependent denominator (leading coefficients and the
// tails r/c of each factor c*var + r) and everything else.
struct Split {
  Rational scalar{1};
  std::vector<DenFactor> rest;
  std::vector<std::pair<Polynomial, unsigned>> tails;  // (r/c, multiplicity)
  unsigned den_degree = 0;
};

Split split_denominator(const FactoredRatFunc& f, std::size_t var) {
  Split s;
  s.scalar = f.scalar();
  for (const auto& factor : f.denominator()) {
    if (!factor.form.involves(var)) {
      s.rest.push_back(factor);
      continue;
    }
    for (auto other : factor.form.support()) {
      if (other != var && f.vars()->is_residue(other)) {
        fail("denominator factor " + factor.form.to_string() +
             " couples residue variables " + f.vars()->name(var) + " and " +
             f.vars()->name(other));
      }
    }
    const Rational& c = factor.form.coefficient(var);
    LinearForm tail = factor.form;
    tail -= LinearForm::variable(f.vars(), var, c);
    s.tails.emplace_back(tail.to_polynomial() * (Rational(1) / c), factor.mult);
    s.scalar /= c.pow(factor.mult);
    s.den_degree += factor.mult;
  }
  return s;
}

// Coefficients S_0..S_{depth-1} of 1 / prod(1 + tail*u)^mult.
std::vector<Polynomial> reciprocal_series(const Split& s, const VarTablePtr& vars,
                                          std::size_t depth) {
  // Q(u) = prod (1 + tail u)^mult, truncated.
  std::vector<Polynomial> q{Polynomial::constant(vars, Rational(1))};
  for (const auto& [tail, mult] : s.tails) {
    for (unsigned k = 0; k < mult; ++k) {
      std::vector<Polynomial> next(std::min(q.size() + 1, depth),
                                   Polynomial(vars));
      for (std::size_t i = 0; i < q.size() && i < depth; ++i) {
        next[i] += q[i];
        if (i + 1 < next.size()) next[i + 1] += q[i] * tail;
      }
      q = std::move(next);
    }
  }
  std::vector<Polynomial> inv;
  inv.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    if (k == 0) {
      inv.push_back(Polynomial::constant(vars, Rational(1)));
      continue;
    }
    Polynomial acc(vars);
    for (std::size_t j = 1; j <= k && j < q.size(); ++j) acc -= q[j] * inv[k - j];
    inv.push_back(std::move(acc));
  }
  return inv;
}

}  // namespace

FactoredRatFunc TruncatedSeries::coefficient_at(int order) const {
  const VarTablePtr& vars = coefficients.empty()
                                ? common_denominator.front().form.vars()
                                : coefficients.front().vars();
  if (order > leading_order) return FactoredRatFunc(Polynomial(vars));
  if (order < truncation_order()) fail("series coefficient below truncation order");
  return FactoredRatFunc(coefficients[leading_order - order], common_denominator,
                         scalar);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t depth) const {
  if (depth > coefficients.size()) fail("cannot extend a truncated series");
  TruncatedSeries out = *this;
  out.coefficients.resize(depth, Polynomial(coefficients.front().vars()));
  return out;
}

TruncatedSeries expand_at_infinity(const FactoredRatFunc& f, std::size_t var,
                                   std::size_t depth) {
  if (var >= f.vars()->size()) fail("series variable out of range");
  if (depth == 0) fail("series depth must be positive");
  Split s = split_denominator(f, var);
  auto num = f.numerator().coefficients_in(var);
  const int num_degree = static_cast<int>(num.size()) - 1;

  TruncatedSeries out;
  out.var = var;
  out.common_denominator = s.rest;
  out.scalar = s.scalar;
  out.leading_order = std::max(num_degree, 0) - static_cast<int>(s.den_degree);
  if (num_degree < 0) {
    out.coefficients.assign(depth, Polynomial(f.vars()));
    return out;
  }
  auto inv = reciprocal_series(s, f.vars(), depth);
  for (std::size_t j = 0; j < depth; ++j) {
    Polynomial c(f.vars());
    for (std::size_t i = 0; i <= j && static_cast<int>(i) <= num_degree; ++i) {
      const Polynomial& p = num[num_degree - i];
      if (!p.is_zero()) c += p * inv[j - i];
    }
    out.coefficients.push_back(std::move(c));
  }
  return out;
}

std::size_t depth_to_minus_one(const FactoredRatFunc& f, std::size_t var) {
  int lead = std::max(f.numerator().degree_in(var), 0) -
             static_cast<int>(f.denominator_degree_in(var));
  return static_cast<std::size_t>(std::max(lead + 2, 1));
}

FactoredRatFunc series_coefficient(const FactoredRatFunc& f, std::size_t var,
                                   int order) {
  if (var >= f.vars()->size()) fail("series variable out of range");
  Split s = split_denominator(f, var);
  auto num = f.numerator().coefficients_in(var);
  const int num_degree = static_cast<int>(num.size()) - 1;
  const int lead = num_degree - static_cast<int>(s.den_degree);
  if (num_degree < 0 || order > lead) return FactoredRatFunc(Polynomial(f.vars()));
  const std::size_t j = static_cast<std::size_t>(lead - order);
  auto inv = reciprocal_series(s, f.vars(), j + 1);
  Polynomial c(f.vars());
  for (std::size_t i = 0; i <= j && static_cast<int>(i) <= num_degree; ++i) {
    const Polynomial& p = num[num_degree - i];
    if (!p.is_zero()) c += p * inv[j - i];
  }
  return FactoredRatFunc(std::move(c), s.rest, s.scalar);
}

}  // namespace equivloc
