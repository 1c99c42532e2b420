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
#include "equivloc/linear_form.hpp"

#include <algorithm>

#include "equivloc/error.hpp"

namespace equivloc {

LinearForm::LinearForm(VarTablePtr vars)
    : vars_(std::move(vars)), coef_(vars_->size()) {}

LinearForm LinearForm::variable(VarTablePtr vars, std::size_t var,
                                const Rational& coef) {
  LinearForm l(std::move(vars));
  if (var >= l.coef_.size()) fail("variable index out of range");
  l.coef_[var] = coef;
  return l;
}

LinearForm LinearForm::constant(VarTablePtr vars, const Rational& c) {
  LinearForm l(std::move(vars));
  l.constant_ = c;
  return l;
}

bool LinearForm::is_zero() const { return constant_.is_zero() && is_constant(); }

bool LinearForm::is_constant() const {
  return std::all_of(coef_.begin(), coef_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

std::size_t LinearForm::residue_var_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (!coef_[i].is_zero() && vars_->is_residue(i)) ++n;
  }
  return n;
}

std::vector<std::size_t> LinearForm::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (!coef_[i].is_zero()) out.push_back(i);
  }
  return out;
}

std::pair<Rational, LinearForm> LinearForm::normalized() const {
  if (is_zero()) fail("cannot normalize the zero linear form");
  Rational lead = constant_;
  for (const auto& c : coef_) {
    if (!c.is_zero()) {
      lead = c;
      break;
    }
  }
  LinearForm out = *this;
  out *= Rational(1) / lead;
  return {lead, std::move(out)};
}

Polynomial LinearForm::to_polynomial() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i].is_zero()) continue;
    Monomial m;
    m.set(i, 1);
    terms.push_back({m, coef_[i]});
  }
  if (!constant_.is_zero()) terms.push_back({Monomial{}, constant_});
  return Polynomial::from_terms(vars_, std::move(terms));
}

Rational LinearForm::evaluate(std::span<const Rational> point) const {
  if (point.size() != coef_.size()) fail("evaluation point has wrong arity");
  Rational v = constant_;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (!coef_[i].is_zero()) v += coef_[i] * point[i];
  }
  return v;
}

LinearForm LinearForm::substitute(
    const std::map<std::size_t, LinearForm>& bindings) const {
  LinearForm out = *this;
  for (const auto& [var, value] : bindings) {
    if (coef_.at(var).is_zero()) continue;
    Rational c = coef_[var];
    out.coef_[var] = Rational(0);
    out += value * c;
  }
  return out;
}

LinearForm LinearForm::operator-() const {
  LinearForm out = *this;
  out *= Rational(-1);
  return out;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (!same_table(vars_, o.vars_)) fail("linear forms over different tables");
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
  constant_ += o.constant_;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += -o; }

LinearForm& LinearForm::operator*=(const Rational& c) {
  for (auto& a : coef_) a *= c;
  constant_ *= c;
  return *this;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
  return same_table(a.vars_, b.vars_) && a.coef_ == b.coef_ &&
         a.constant_ == b.constant_;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  for (std::size_t i = 0; i < a.coef_.size() && i < b.coef_.size(); ++i) {
    auto c = a.coef_[i] <=> b.coef_[i];
    if (c != 0) return c > 0;  // larger leading coefficients first
  }
  if (a.coef_.size() != b.coef_.size()) return a.coef_.size() < b.coef_.size();
  return a.constant_ < b.constant_;
}

std::string LinearForm::to_string() const {
  std::string out;
  auto append = [&out](const Rational& c, const std::string& name) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (name.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += name;
    } else {
      out += mag.to_string() + "*" + name;
    }
  };
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (!coef_[i].is_zero()) append(coef_[i], vars_->name(i));
  }
  if (!constant_.is_zero() || out.empty()) append(constant_, "");
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& p,
                                       const LinearForm& l) {
  if (!same_table(p.vars(), l.vars())) fail("division across variable tables");
  if (l.is_zero()) fail("division by the zero linear form");
  if (p.is_zero()) return p;
  auto support = l.support();
  if (support.empty()) return p * (Rational(1) / l.constant_term());

  // Pivot on the variable in which p has the lowest degree.
  std::size_t pivot = support.front();
  for (auto v : support) {
    if (p.degree_in(v) < p.degree_in(pivot)) pivot = v;
  }
  const Rational inv = Rational(1) / l.coefficient(pivot);
  LinearForm rest_form = l;
  rest_form -= LinearForm::variable(l.vars(), pivot, l.coefficient(pivot));
  const Polynomial rest = rest_form.to_polynomial();

  auto a = p.coefficients_in(pivot);
  const int d = static_cast<int>(a.size()) - 1;
  if (d == 0) return std::nullopt;
  std::vector<Polynomial> q(d, Polynomial(p.vars()));
  q[d - 1] = a[d] * inv;
  for (int k = d - 1; k >= 1; --k) {
    q[k - 1] = (a[k] - rest * q[k]) * inv;
  }
  if (!(a[0] - rest * q[0]).is_zero()) return std::nullopt;

  std::vector<Term> terms;
  for (int k = 0; k < d; ++k) {
    for (const auto& t : q[k].terms()) {
      Monomial m = t.mono;
      m.set(pivot, k);
      terms.push_back({m, t.coef});
    }
  }
  return Polynomial::from_terms(p.vars(), std::move(terms));
}

}  // namespace equivloc
