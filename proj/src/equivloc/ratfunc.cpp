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
#include "equivloc/ratfunc.hpp"

#include <algorithm>
#include <map>

#include "equivloc/error.hpp"

namespace equivloc {

namespace {

using FactorCounts = std::map<LinearForm, unsigned>;

FactorCounts counts_of(const std::vector<DenFactor>& den) {
  FactorCounts out;
  for (const auto& f : den) out[f.form] += f.mult;
  return out;
}

Polynomial times_factors(Polynomial p, const FactorCounts& factors) {
  for (const auto& [form, mult] : factors) {
    p *= form.to_polynomial().pow(mult);
  }
  return p;
}

}  // namespace

FactoredRatFunc::FactoredRatFunc(Polynomial numerator,
                                 const std::vector<LinearForm>& denominator,
                                 const Rational& scalar)
    : numerator_(std::move(numerator)), scalar_(scalar) {
  std::vector<DenFactor> raw;
  raw.reserve(denominator.size());
  for (const auto& f : denominator) raw.push_back({f, 1});
  canonicalize(std::move(raw));
}

FactoredRatFunc::FactoredRatFunc(Polynomial numerator,
                                 const std::vector<DenFactor>& denominator,
                                 const Rational& scalar)
    : numerator_(std::move(numerator)), scalar_(scalar) {
  canonicalize(denominator);
}

void FactoredRatFunc::canonicalize(std::vector<DenFactor> raw) {
  FactorCounts counts;
  for (auto& f : raw) {
    if (!same_table(f.form.vars(), numerator_.vars())) {
      fail("denominator factor over a different variable table");
    }
    if (f.form.is_zero()) fail("zero denominator factor");
    if (f.mult == 0) continue;
    if (f.form.is_constant()) {
      scalar_ /= f.form.constant_term().pow(f.mult);
      continue;
    }
    auto [scale, form] = f.form.normalized();
    scalar_ /= scale.pow(f.mult);
    counts[std::move(form)] += f.mult;
  }
  denominator_.clear();
  if (numerator_.is_zero() || scalar_.is_zero()) {
    numerator_ = Polynomial(numerator_.vars());
    scalar_ = Rational(1);
    return;
  }
  for (auto& [form, mult] : counts) denominator_.push_back({form, mult});
}

FactoredRatFunc FactoredRatFunc::from_factors(
    Polynomial core, const std::vector<LinearForm>& num_factors,
    const std::vector<LinearForm>& den_factors, const Rational& scalar) {
  Rational s = scalar;
  FactorCounts num, den;
  for (const auto& f : num_factors) {
    if (f.is_zero()) return FactoredRatFunc(Polynomial(core.vars()));
    auto [scale, form] = f.normalized();
    s *= scale;
    if (!form.is_constant()) ++num[std::move(form)];
  }
  for (const auto& f : den_factors) {
    if (f.is_zero()) fail("zero denominator factor");
    auto [scale, form] = f.normalized();
    s /= scale;
    if (!form.is_constant()) ++den[std::move(form)];
  }
  for (auto it = num.begin(); it != num.end();) {
    auto d = den.find(it->first);
    if (d == den.end()) {
      ++it;
      continue;
    }
    unsigned common = std::min(it->second, d->second);
    it->second -= common;
    d->second -= common;
    if (d->second == 0) den.erase(d);
    it = it->second == 0 ? num.erase(it) : std::next(it);
  }
  Polynomial n = times_factors(std::move(core), num);
  std::vector<DenFactor> raw;
  for (auto& [form, mult] : den) raw.push_back({form, mult});
  return FactoredRatFunc(std::move(n), raw, s);
}

bool FactoredRatFunc::is_canonical() const {
  return std::all_of(denominator_.begin(), denominator_.end(),
                     [](const DenFactor& f) { return f.form.residue_var_count() <= 1; });
}

unsigned FactoredRatFunc::denominator_degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& f : denominator_) {
    if (f.form.involves(var)) d += f.mult;
  }
  return d;
}

bool FactoredRatFunc::involves(std::size_t var) const {
  return numerator_.involves(var) || denominator_degree_in(var) > 0;
}

Rational FactoredRatFunc::evaluate(std::span<const Rational> point) const {
  Rational value = scalar_ * numerator_.evaluate(point);
  for (const auto& f : denominator_) {
    Rational d = f.form.evaluate(point);
    if (d.is_zero()) fail("evaluation at a pole");
    value /= d.pow(f.mult);
  }
  return value;
}

std::optional<Polynomial> FactoredRatFunc::try_polynomial() const {
  Polynomial p = numerator_ * scalar_;
  // Dividing by the factor with fewest variables first keeps the
  // intermediate quotients small.
  std::vector<const DenFactor*> order;
  for (const auto& f : denominator_) order.push_back(&f);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return a->form.support().size() < b->form.support().size();
  });
  for (const auto* f : order) {
    for (unsigned k = 0; k < f->mult; ++k) {
      auto q = divide_exact(p, f->form);
      if (!q) return std::nullopt;
      p = std::move(*q);
    }
  }
  return p;
}

Polynomial FactoredRatFunc::to_polynomial() const {
  auto p = try_polynomial();
  if (!p) inconsistent("rational function does not reduce to a polynomial: " + to_string());
  return std::move(*p);
}

FactoredRatFunc FactoredRatFunc::operator-() const {
  FactoredRatFunc out = *this;
  if (!out.is_zero()) out.scalar_ = -out.scalar_;
  return out;
}

FactoredRatFunc operator+(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  if (!same_table(a.vars(), b.vars())) fail("rational functions over different tables");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FactorCounts ca = counts_of(a.denominator_), cb = counts_of(b.denominator_);
  FactorCounts missing_a, missing_b, common = ca;
  for (const auto& [form, mult] : cb) {
    auto& slot = common[form];
    slot = std::max(slot, mult);
  }
  for (const auto& [form, mult] : common) {
    auto ia = ca.find(form);
    auto ib = cb.find(form);
    unsigned ma = ia == ca.end() ? 0 : ia->second;
    unsigned mb = ib == cb.end() ? 0 : ib->second;
    if (mult > ma) missing_a[form] = mult - ma;
    if (mult > mb) missing_b[form] = mult - mb;
  }
  Polynomial n = times_factors(a.numerator_ * a.scalar_, missing_a) +
                 times_factors(b.numerator_ * b.scalar_, missing_b);
  std::vector<DenFactor> den;
  for (const auto& [form, mult] : common) den.push_back({form, mult});
  return FactoredRatFunc(std::move(n), den, Rational(1));
}

FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  std::vector<DenFactor> den = a.denominator_;
  den.insert(den.end(), b.denominator_.begin(), b.denominator_.end());
  return FactoredRatFunc(a.numerator_ * b.numerator_, den, a.scalar_ * b.scalar_);
}

FactoredRatFunc operator*(FactoredRatFunc a, const Rational& c) {
  if (c.is_zero()) return FactoredRatFunc(Polynomial(a.vars()));
  if (!a.is_zero()) a.scalar_ *= c;
  return a;
}

bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  if (a.denominator_.size() != b.denominator_.size()) return false;
  for (std::size_t i = 0; i < a.denominator_.size(); ++i) {
    if (!(a.denominator_[i].form == b.denominator_[i].form) ||
        a.denominator_[i].mult != b.denominator_[i].mult) {
      return false;
    }
  }
  return a.numerator_ * a.scalar_ == b.numerator_ * b.scalar_;
}

bool FactoredRatFunc::equivalent(const FactoredRatFunc& other) const {
  return (*this - other).is_zero();
}

std::string FactoredRatFunc::to_string() const {
  std::string out;
  if (!scalar_.is_one()) out += "(" + scalar_.to_string() + ")*";
  out += "(" + numerator_.to_string() + ")";
  if (denominator_.empty()) return out;
  out += " / (";
  bool first = true;
  for (const auto& f : denominator_) {
    if (!first) out += "*";
    first = false;
    out += "(" + f.form.to_string() + ")";
    if (f.mult > 1) out += "^" + std::to_string(f.mult);
  }
  return out + ")";
}

}  // namespace equivloc
