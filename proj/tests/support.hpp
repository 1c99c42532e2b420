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

// Shared helpers for the test binaries: random inputs and independent
// oracles that do not go through the evaluators under test.

#ifndef EQUIVLOC_TESTS_SUPPORT_HPP
#define EQUIVLOC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string_view>
#include <vector>

#include "equivloc/class_parser.hpp"
#include "equivloc/linear_form.hpp"
#include "equivloc/polynomial.hpp"
#include "equivloc/random_class.hpp"
#include "equivloc/ratfunc.hpp"
#include "equivloc/space.hpp"
#include "equivloc/vartable.hpp"

namespace equivloc::testing {

inline Polynomial poly(const VarTablePtr& vars, std::string_view text) {
  return parse_class(text, vars);
}

inline Polynomial var(const VarTablePtr& vars, std::string_view name) {
  return Polynomial::variable(vars, vars->index(name));
}

inline LinearForm lin(const VarTablePtr& vars, std::string_view name) {
  return LinearForm::variable(vars, vars->index(name));
}

// Small nonzero rational, numerator in [-9, 9] and denominator in [1, 5].
inline Rational small_rational(std::mt19937_64& rng) { return random_rational(rng); }

// Random polynomial with up to `terms` terms of total degree <= max_degree
// in the given variable slots.
inline Polynomial random_polynomial(const VarTablePtr& vars, const std::vector<std::size_t>& slots,
                                    int max_degree, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      std::size_t s = slots[pick(rng)];
      m.set(s, m[s] + 1);
    }
    out.push_back({m, small_rational(rng)});
  }
  return Polynomial::from_terms(vars, std::move(out));
}

inline std::vector<std::size_t> all_slots(const VarTablePtr& vars) {
  std::vector<std::size_t> s(vars->size());
  std::iota(s.begin(), s.end(), std::size_t{0});
  return s;
}

// Random rational point; entries are distinct-ish nonzero values.
inline std::vector<Rational> random_point(const VarTablePtr& vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-60, 60), den(1, 11);
  std::vector<Rational> p;
  for (std::size_t i = 0; i < vars->size(); ++i) p.emplace_back(num(rng), den(rng));
  return p;
}

// Fixed point data computed from first principles for each space kind:
// restriction z_i -> s_i * t_{perm_i} and the tangent weights there.
struct OraclePoint {
  Substitution restriction;
  std::vector<LinearForm> weights;
};

inline std::vector<OraclePoint> oracle_fixed_points(const SpaceDescriptor& space) {
  const auto& vars = space.vars();
  const int n = space.n();
  auto t = [&](int i) { return LinearForm::variable(vars, space.t_slot(i)); };
  std::vector<OraclePoint> out;
  if (space.kind() == SpaceKind::grass) {
    const int m = space.m();
    // m-subsets of {0..n-1} as bitmasks.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != m) continue;
      OraclePoint p;
      int slot = 0;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          p.restriction.insert_or_assign(space.z_slot(slot++), t(i).to_polynomial());
          for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) p.weights.push_back(t(j) - t(i));
          }
        }
      }
      out.push_back(std::move(p));
    }
    return out;
  }
  for (unsigned signs = 0; signs < (1u << n); ++signs) {
    OraclePoint p;
    std::vector<LinearForm> z;
    for (int i = 0; i < n; ++i) {
      LinearForm zi = (signs & (1u << i)) ? -t(i) : t(i);
      p.restriction.insert_or_assign(space.z_slot(i), zi.to_polynomial());
      z.push_back(zi);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) p.weights.push_back(z[i] + z[j]);
      if (space.kind() == SpaceKind::lagrangian) p.weights.push_back(z[i] * Rational(2));
      if (space.kind() == SpaceKind::og_odd) p.weights.push_back(z[i]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Fixed-point sum by pairwise addition of fractions, independent of the
// common-denominator summation in the library.
inline Polynomial oracle_abbv(const SpaceDescriptor& space, const Polynomial& v) {
  FactoredRatFunc total{Polynomial(space.vars())};
  for (const auto& p : oracle_fixed_points(space)) {
    total = total + FactoredRatFunc(v.substitute(p.restriction), p.weights);
  }
  return total.to_polynomial();
}

// Same sum evaluated at a numeric torus point.
inline Rational oracle_abbv_at(const SpaceDescriptor& space, const Polynomial& v,
                               const std::vector<Rational>& point) {
  Rational total(0);
  for (const auto& p : oracle_fixed_points(space)) {
    std::vector<Rational> at = point;
    for (const auto& [slot, value] : p.restriction) at[slot] = value.evaluate(point);
    Rational e(1);
    for (const auto& w : p.weights) e *= w.evaluate(point);
    total += v.evaluate(at) / e;
  }
  return total;
}

// Torus point where every tangent weight of every fixed point is nonzero.
inline std::vector<Rational> generic_torus_point(const SpaceDescriptor& space,
                                                 std::mt19937_64& rng) {
  const auto pts = oracle_fixed_points(space);
  for (;;) {
    auto p = random_point(space.vars(), rng);
    bool ok = true;
    for (const auto& fp : pts) {
      for (const auto& w : fp.weights) ok = ok && !w.evaluate(p).is_zero();
    }
    if (ok) return p;
  }
}

}  // namespace equivloc::testing

#endif  // EQUIVLOC_TESTS_SUPPORT_HPP
