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
#include "equivloc/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "equivloc/error.hpp"

namespace equivloc {

namespace {

constexpr unsigned kMaxExponent = 255;

bool term_greater(const Term& a, const Term& b) {
  return grlex_less(b.mono, a.mono);
}

}  // namespace

void Monomial::set(std::size_t var, unsigned e) {
  if (e > kMaxExponent) fail("exponent overflow");
  deg = static_cast<std::uint16_t>(deg - exp[var] + e);
  exp[var] = static_cast<std::uint8_t>(e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(a.exp[i]) + b.exp[i];
    if (e > kMaxExponent) fail("exponent overflow");
    out.exp[i] = static_cast<std::uint8_t>(e);
  }
  out.deg = static_cast<std::uint16_t>(a.deg + b.deg);
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t words[kMaxVars / 8];
  std::memcpy(words, m.exp.data(), kMaxVars);
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Polynomial::Polynomial(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) fail("polynomial without variable table");
}

Polynomial Polynomial::constant(VarTablePtr vars, const Rational& c) {
  Polynomial p(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(VarTablePtr vars, std::size_t var) {
  if (var >= vars->size()) fail("variable index out of range");
  Monomial m;
  m.set(var, 1);
  return monomial(std::move(vars), m, Rational(1));
}

Polynomial Polynomial::monomial(VarTablePtr vars, const Monomial& m,
                                const Rational& c) {
  Polynomial p(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(VarTablePtr vars, std::vector<Term> terms) {
  Polynomial p(std::move(vars));
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void Polynomial::check_same(const Polynomial& o) const {
  if (!same_table(vars_, o.vars_)) fail("polynomials over different variable tables");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.deg == 0);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.deg == 0) return terms_.back().coef;
  return Rational(0);
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().mono.deg;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[var]);
  return d;
}

int Polynomial::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = kMaxExponent;
  for (const auto& t : terms_) d = std::min<int>(d, t.mono.exp[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.mono.exp[var] != 0; });
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.deg == terms_.back().mono.deg;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && term_greater(*a, *b))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_greater(*b, *a)) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coef + b->coef;
      if (!c.is_zero()) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial out(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a : b;
    const auto& other = a.terms_.size() == 1 ? b : a;
    const Term& s = single.terms_[0];
    out.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      out.terms_.push_back({t.mono * s.mono, t.coef * s.coef});
    }
    // Multiplying by a monomial preserves the order.
    return out;
  }
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  mpq_class prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpq_mul(prod.get_mpq_t(), x.coef.raw().get_mpq_t(), y.coef.raw().get_mpq_t());
      auto& slot = acc[x.mono * y.mono];
      mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), prod.get_mpq_t());
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.terms_.push_back({m, Rational(std::move(c))});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_table(a.vars_, b.vars_) || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  int d = degree_in(var);
  std::vector<Polynomial> out(std::max(d + 1, 0), Polynomial(vars_));
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned k = m.exp[var];
    m.set(var, 0);
    // Order within each bucket stays grlex-descending after dropping var
    // only up to ties in degree, so re-sort per bucket below.
    out[k].terms_.push_back({m, t.coef});
  }
  for (auto& p : out) std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return out;
}

Polynomial Polynomial::substitute(const Substitution& bindings) const {
  for (const auto& [var, value] : bindings) {
    if (var >= vars_->size()) fail("substitution variable out of range");
    check_same(value);
  }
  // Fast path: every binding is a signed single variable or a constant.
  bool simple = std::all_of(bindings.begin(), bindings.end(), [](const auto& b) {
    const auto& ts = b.second.terms_;
    return ts.size() <= 1 && (ts.empty() || ts[0].mono.deg <= 1);
  });
  if (simple) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      Rational c = t.coef;
      std::array<unsigned, kMaxVars> moved{};
      for (const auto& [var, value] : bindings) {
        unsigned e = m.exp[var];
        if (e == 0) continue;
        m.set(var, 0);
        if (value.terms_.empty()) {
          c = Rational(0);
          break;
        }
        const Term& s = value.terms_[0];
        c *= s.coef.pow(e);
        for (std::size_t j = 0; j < kMaxVars; ++j) {
          if (s.mono.exp[j]) moved[j] += e;
        }
      }
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < kMaxVars; ++j) {
        if (moved[j]) m.set(j, m.exp[j] + moved[j]);
      }
      out.push_back({m, std::move(c)});
    }
    return from_terms(vars_, std::move(out));
  }

  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      it = powers.emplace(key, bindings.at(var).pow(e)).first;
    }
    return it->second;
  };
  Polynomial result(vars_);
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  for (const auto& t : terms_) {
    Monomial rest = t.mono;
    Polynomial piece = constant(vars_, t.coef);
    for (const auto& [var, value] : bindings) {
      unsigned e = rest.exp[var];
      if (e == 0) continue;
      rest.set(var, 0);
      piece = piece * power_of(var, e);
    }
    for (const auto& pt : piece.terms_) {
      auto& slot = acc[pt.mono * rest];
      slot += pt.coef.raw();
    }
  }
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) result.terms_.push_back({m, Rational(std::move(c))});
  }
  std::sort(result.terms_.begin(), result.terms_.end(), term_greater);
  return result;
}

Polynomial Polynomial::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != vars_->size()) fail("permutation size mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (t.mono.exp[i]) m.set(perm[i], t.mono.exp[i]);
    }
    out.push_back({m, t.coef});
  }
  return from_terms(vars_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_->size()) fail("evaluation point has wrong arity");
  mpq_class sum = 0;
  mpq_class term, pw;
  for (const auto& t : terms_) {
    term = t.coef.raw();
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (!t.mono.exp[i]) continue;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].raw().get_num_mpz_t(), t.mono.exp[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].raw().get_den_mpz_t(), t.mono.exp[i]);
      term *= pw;
    }
    sum += term;
  }
  return Rational(std::move(sum));
}

std::string monomial_string(const VarTable& vars, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_string(*vars_, t.mono);
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

}  // namespace equivloc
