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

#include "equivloc/pushforward.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "equivloc/error.hpp"
#include "equivloc/symfunc.hpp"

namespace equivloc {

std::string_view form_name(Form f) {
  switch (f) {
    case Form::first: return "first";
    case Form::rewritten: return "rewritten";
    case Form::unified: return "unified";
  }
  return "?";
}

Form parse_form(std::string_view text) {
  for (Form f : kAllForms) {
    if (form_name(f) == text) return f;
  }
  fail("unknown form '" + std::string(text) + "'");
}

namespace {

// Fixed points of OG(n,2n) fill both connected components, so they are
// indexed by all sign vectors rather than the even ones of W(D_n)/S_n.
RootSystemSpec fixed_point_group(const SpaceDescriptor& space) {
  if (space.kind() == SpaceKind::og_even) return RootSystemSpec::of(RootType::B, space.n());
  return space.root_system();
}

LinearForm t_form(const SpaceDescriptor& space, const Weight& w) {
  return weight_form(w, space.vars(), space.t_slot(0));
}

LinearForm z_form(const SpaceDescriptor& space, const Weight& w) {
  return weight_form(w, space.vars(), space.z_slot(0));
}

LinearForm var(const SpaceDescriptor& space, std::size_t slot, long coef = 1) {
  return LinearForm::variable(space.vars(), slot, Rational(coef));
}

}  // namespace

std::vector<FixedPoint> fixed_points(const SpaceDescriptor& space) {
  const auto roots = complement_roots(space.root_system());
  std::vector<FixedPoint> out;
  for (const auto& w : coset_reps(fixed_point_group(space))) {
    FixedPoint p;
    p.element = w;
    for (int i = 0; i < space.residue_count(); ++i) {
      p.restriction.emplace(space.z_slot(i), var(space, space.t_slot(w.perm[i]), w.sign[i]));
    }
    for (const auto& root : roots) {
      LinearForm e = t_form(space, w.apply(root));
      if (e.is_zero()) inconsistent("vanishing tangent weight at a fixed point");
      p.euler_factors.push_back(std::move(e));
    }
    out.push_back(std::move(p));
  }
  return out;
}

Polynomial prepare_class(const SpaceDescriptor& space, const Polynomial& v, bool symmetrize) {
  if (!same_table(v.vars(), space.vars())) fail("class is not defined over the space's variables");
  if (check_symmetric(v)) return v;
  if (!symmetrize) {
    fail("class " + v.to_string() + " is not symmetric in the residue variables");
  }
  return equivloc::symmetrize(v);
}

namespace {

Substitution as_substitution(const FixedPoint& p) {
  Substitution s;
  for (const auto& [slot, form] : p.restriction) s.emplace(slot, form.to_polynomial());
  return s;
}

}  // namespace

Polynomial abbv_pushforward(const SpaceDescriptor& space, const Polynomial& v,
                            bool symmetrize) {
  const Polynomial cls = prepare_class(space, v, symmetrize);
  const auto points = fixed_points(space);

  struct Local {
    Polynomial value;
    Rational scale{1};
    std::map<LinearForm, unsigned> factors;
  };
  std::vector<Local> locals;
  std::map<LinearForm, unsigned> common;
  for (const auto& p : points) {
    Local l{cls.substitute(as_substitution(p)), Rational(1), {}};
    if (l.value.is_zero()) continue;
    for (const auto& e : p.euler_factors) {
      auto [s, form] = e.normalized();
      l.scale *= s;
      ++l.factors[std::move(form)];
    }
    for (const auto& [form, mult] : l.factors) {
      auto& slot = common[form];
      slot = std::max(slot, mult);
    }
    locals.push_back(std::move(l));
  }

  Polynomial numerator(space.vars());
  for (auto& l : locals) {
    Polynomial term = l.value * (Rational(1) / l.scale);
    for (const auto& [form, mult] : common) {
      auto it = l.factors.find(form);
      unsigned have = it == l.factors.end() ? 0 : it->second;
      if (mult > have) term *= form.to_polynomial().pow(mult - have);
    }
    numerator += term;
  }
  std::vector<DenFactor> den;
  for (const auto& [form, mult] : common) den.push_back({form, mult});
  return FactoredRatFunc(std::move(numerator), den, Rational(1)).to_polynomial();
}

Rational abbv_evaluate(const SpaceDescriptor& space, const Polynomial& v,
                       std::span<const Rational> point) {
  if (point.size() != space.vars()->size()) fail("evaluation point has wrong arity");
  Rational total(0);
  std::vector<Rational> local(point.begin(), point.end());
  for (const auto& p : fixed_points(space)) {
    for (const auto& [slot, form] : p.restriction) local[slot] = form.evaluate(point);
    Rational euler(1);
    for (const auto& e : p.euler_factors) euler *= e.evaluate(point);
    if (euler.is_zero()) fail("Euler class vanishes at the evaluation point");
    total += v.evaluate(local) / euler;
  }
  return total;
}

Integrand build_integrand(const SpaceDescriptor& space, const Polynomial& v, Form form) {
  if (!same_table(v.vars(), space.vars())) fail("class is not defined over the space's variables");
  const int n = space.n();
  const int r = space.residue_count();
  std::vector<LinearForm> num, den;
  Rational scalar(1);
  Rational prefactor = Rational(1) / factorial(static_cast<unsigned>(r));
  auto t = [&](int i, long c = 1) { return var(space, space.t_slot(i), c); };
  auto z = [&](int i, long c = 1) { return var(space, space.z_slot(i), c); };

  if (form == Form::unified) {
    const auto& root = space.root_system();
    // X_i under signed permutations for OG(n,2n), matching its fixed points.
    OrbitSets orbits = orbit_sets(fixed_point_group(space));
    for (int i = 0; i < r; ++i) {
      if (orbits[i].size() != orbits[0].size()) inconsistent("orbit sets of unequal size");
      for (const auto& x : orbits[i]) {
        if (x.index == i && x.sign == 1) continue;
        num.push_back(z(i) - z(x.index, x.sign));
      }
    }
    if (r > 0) {
      for (int i = 0; i < n; ++i) {
        for (const auto& x : orbits[0]) den.push_back(t(i) - z(x.index, x.sign));
      }
    }
    // Type A roots outside the Levi pair residue with torus coordinates and
    // already sit in the Euler factors above.
    if (root.type != RootType::A) {
      for (const auto& y : complement_roots(root)) den.push_back(z_form(space, y));
    }
    return {FactoredRatFunc::from_factors(v, num, den, scalar), prefactor,
            [&] {
              ResidueOrder o;
              for (int i = 0; i < r; ++i) o.push_back(space.z_slot(i));
              return o;
            }()};
  }

  ResidueOrder order;
  for (int i = 0; i < r; ++i) order.push_back(space.z_slot(i));

  if (space.kind() == SpaceKind::grass) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        if (i != j) num.push_back(z(i) - z(j));
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < r; ++j) den.push_back(t(i) - z(j));
    }
    return {FactoredRatFunc::from_factors(v, num, den, scalar), prefactor, order};
  }

  if (space.kind() == SpaceKind::og_even) {
    for (int i = 0; i < n; ++i) num.push_back(z(i));
    scalar *= Rational(2).pow(n);
  } else if (space.kind() == SpaceKind::og_odd) {
    scalar *= Rational(2).pow(n);
  }

  if (form == Form::first) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) num.push_back(z(j) - z(i));
    }
    for (int i = 0; i < n; ++i) {
      den.push_back(t(i) - z(i));
      den.push_back(t(i) + z(i));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        den.push_back(t(i) + t(j));
        den.push_back(t(j) - t(i));
      }
    }
    // Each z_i only meets the poles +-t_i, so the sum runs once over the
    // fixed points and carries no 1/n! symmetrization.
    prefactor = Rational(1);
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) num.push_back(z(j) - z(i));
      }
      for (int j = i + 1; j < n; ++j) num.push_back(z(i) + z(j));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        den.push_back(t(i) - z(j));
        den.push_back(t(i) + z(j));
      }
    }
  }
  return {FactoredRatFunc::from_factors(v, num, den, scalar), prefactor, order};
}

Polynomial residue_pushforward(const SpaceDescriptor& space, const Polynomial& v, Form form,
                               bool symmetrize) {
  const Polynomial cls = prepare_class(space, v, symmetrize);
  Integrand in = build_integrand(space, cls, form);
  FactoredRatFunc res = iterated_residue(in.function, in.order);
  return res.to_polynomial() * in.prefactor;
}

bool AgreementReport::all_agree() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.agrees; });
}

AgreementReport verify_agreement(const SpaceDescriptor& space, const Polynomial& v,
                                 std::span<const Form> forms, const VerifyOptions& options) {
  AgreementReport report;
  std::optional<Polynomial> cls;
  std::optional<Polynomial> reference;
  AgreementEntry abbv{"abbv", std::nullopt, false, {}};
  try {
    cls = prepare_class(space, v, options.symmetrize);
    reference = abbv_pushforward(space, *cls);
    abbv.value = reference;
    abbv.agrees = true;
  } catch (const std::exception& e) {
    abbv.error = e.what();
  }
  report.entries.push_back(abbv);

  // Random torus points where no Euler factor vanishes.
  std::vector<std::vector<Rational>> points;
  if (cls && options.prefilter_points > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 7);
    const auto fps = fixed_points(space);
    int attempts = 0;
    while (static_cast<int>(points.size()) < options.prefilter_points && attempts++ < 1000) {
      std::vector<Rational> pt(space.vars()->size(), Rational(0));
      for (int i = 0; i < space.n(); ++i) pt[space.t_slot(i)] = Rational(num(rng), den(rng));
      bool ok = true;
      for (const auto& p : fps) {
        for (const auto& e : p.euler_factors) ok = ok && !e.evaluate(pt).is_zero();
      }
      if (ok) points.push_back(std::move(pt));
    }
  }

  for (Form f : forms) {
    AgreementEntry entry{"residue:" + std::string(form_name(f)), std::nullopt, false, {}};
    try {
      if (!cls) fail("class rejected: " + abbv.error);
      Polynomial value = residue_pushforward(space, *cls, f);
      if (options.inject_disagreement) value += Polynomial::constant(space.vars(), Rational(1));
      entry.value = value;
      if (!reference) {
        entry.error = "no reference value";
      } else {
        bool quick = true;
        for (const auto& pt : points) {
          if (abbv_evaluate(space, *cls, pt) != value.evaluate(pt)) {
            quick = false;
            entry.error = "differs from the fixed-point sum at a random torus point";
            break;
          }
        }
        entry.agrees = quick && value == *reference;
        if (quick && !entry.agrees) entry.error = "symbolic results differ";
      }
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

Rational specialize_at_zero(const Polynomial& p) {
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < p.vars()->size(); ++i) {
      if (t.mono[i] && p.vars()->is_residue(i)) {
        fail("specialization expects a polynomial in torus variables only");
      }
    }
  }
  return p.constant_term();
}

}  // namespace equivloc
