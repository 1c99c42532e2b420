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

#include "equivloc/jkgk.hpp"

#include <random>
#include <sstream>

#include "equivloc/error.hpp"
#include "equivloc/space.hpp"
#include "equivloc/symfunc.hpp"

namespace equivloc {

MomentImage MomentImage::orthant(int k) {
  if (k < 1) fail("orthant dimension must be positive");
  MomentImage m;
  m.k = k;
  m.upper.assign(k, std::nullopt);
  m.base.assign(k, Rational(1));
  return m;
}

MomentImage MomentImage::unit_interval() {
  MomentImage m;
  m.k = 1;
  m.upper = {Rational(1)};
  m.base = {Rational(1)};
  return m;
}

bool MomentImage::is_vertex(const Point& p) const {
  for (const auto& x : p) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<Point> Dendrite::terminal_points() const {
  std::vector<Point> out;
  for (const auto& b : branches) out.push_back(b.terminal);
  return out;
}

namespace {

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].to_string();
  }
  return s + ")";
}

struct Hit {
  std::size_t wall;
  Rational time;
};

// First lower wall met by p + s*d for s > 0 among the active coordinates,
// or nullopt when the ray escapes or leaves through an upper wall first.
// Ties between walls are reported as a second hit.
std::optional<std::pair<Hit, bool>> first_hit(const MomentImage& image, const Point& p,
                                              const Point& d,
                                              const std::vector<bool>& active) {
  std::optional<Hit> best;
  bool tie = false;
  std::optional<Rational> exit_time;
  for (int i = 0; i < image.k; ++i) {
    if (!active[i]) continue;
    if (d[i].sign() < 0) {
      Rational s = -p[i] / d[i];
      if (!best || s < best->time) {
        best = Hit{static_cast<std::size_t>(i), s};
        tie = false;
      } else if (s == best->time) {
        tie = true;
      }
    } else if (d[i].sign() > 0 && image.upper[i]) {
      Rational s = (*image.upper[i] - p[i]) / d[i];
      if (!exit_time || s < *exit_time) exit_time = s;
    }
  }
  if (!best) return std::nullopt;
  if (exit_time && *exit_time <= best->time) return std::nullopt;
  return std::make_pair(*best, tie);
}

}  // namespace

Dendrite dendrite_walk(const MomentImage& image, std::uint64_t seed) {
  if (image.k < 1 || static_cast<int>(image.upper.size()) != image.k ||
      static_cast<int>(image.base.size()) != image.k) {
    fail("malformed moment image");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  Dendrite out{image, {}};
  Branch branch;
  Point p = image.base;
  std::vector<bool> active(image.k, true);
  int remaining = image.k;
  while (remaining > 0) {
    if (branch.rejected_rays > 10000) inconsistent("dendrite walk failed to find a generic ray");
    // Random direction inside the current face.
    Point d(image.k, Rational(0));
    bool degenerate = false;
    for (int i = 0; i < image.k; ++i) {
      if (!active[i]) continue;
      long a = num(rng);
      if (a == 0) degenerate = true;
      d[i] = Rational(a, den(rng));
    }
    if (degenerate) {
      ++branch.rejected_rays;
      continue;
    }
    bool reversed = false;
    auto hit = first_hit(image, p, d, active);
    if (!hit) {
      for (auto& x : d) x = -x;
      reversed = true;
      hit = first_hit(image, p, d, active);
    }
    // Rays through a codimension >= 2 wall are not generic.
    if (!hit || hit->second) {
      ++branch.rejected_rays;
      continue;
    }
    RaySegment seg{p, d, reversed, hit->first.wall, {}};
    for (int i = 0; i < image.k; ++i) p[i] += hit->first.time * d[i];
    p[hit->first.wall] = Rational(0);
    seg.hit = p;
    active[hit->first.wall] = false;
    --remaining;
    branch.rays.push_back(std::move(seg));
  }
  branch.terminal = p;
  out.branches.push_back(std::move(branch));
  return out;
}

Dendrite dendrite_orthant(int k, std::uint64_t seed) {
  return dendrite_walk(MomentImage::orthant(k), seed);
}

std::string Dendrite::describe() const {
  std::ostringstream os;
  os << "moment image: ";
  for (int i = 0; i < image.k; ++i) {
    if (i) os << " x ";
    os << "[0, " << (image.upper[i] ? image.upper[i]->to_string() : "inf") << ")";
  }
  os << "\nbase point " << point_string(image.base) << "\n";
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const auto& br = branches[b];
    os << "branch " << b + 1 << ":\n";
    for (std::size_t s = 0; s < br.rays.size(); ++s) {
      const auto& r = br.rays[s];
      os << "  ray " << s + 1 << " from " << point_string(r.start) << " along "
         << point_string(r.direction) << (r.reversed ? " (reversed)" : "")
         << " crosses wall x" << r.wall + 1 << " = 0 at " << point_string(r.hit) << "\n";
    }
    os << "  terminal fixed point " << point_string(br.terminal)
       << (image.is_vertex(br.terminal) ? " (origin)" : "") << "\n";
  }
  return os.str();
}

WeylFactor unitary_weyl_factor(const VarTablePtr& vars, const std::vector<std::size_t>& z) {
  WeylFactor w{Polynomial::constant(vars, Rational(1)), 1};
  for (std::size_t i = 0; i < z.size(); ++i) {
    w.order *= i + 1;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (i != j) w.varpi *= Polynomial::variable(vars, z[i]) - Polynomial::variable(vars, z[j]);
    }
  }
  return w;
}

HomModel::HomModel(int k_, int n_) : k(k_), n(n_) {
  if (k < 1 || n < k) fail("Hom model needs 1 <= k <= n");
  vars = SpaceDescriptor::grass(k, n).vars();
}

std::vector<std::size_t> HomModel::z_slots() const {
  std::vector<std::size_t> out;
  for (int i = 0; i < k; ++i) out.push_back(static_cast<std::size_t>(n + i));
  return out;
}

std::vector<LinearForm> HomModel::euler_factors_at_origin() const {
  std::vector<LinearForm> out;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      out.push_back(LinearForm::variable(vars, static_cast<std::size_t>(j)) -
                    LinearForm::variable(vars, static_cast<std::size_t>(n + i)));
    }
  }
  return out;
}

AssembledFormula assemble_grassmannian_integrand(int k, int n, const Polynomial& v,
                                                 std::uint64_t seed) {
  HomModel model(k, n);
  if (!same_table(v.vars(), model.vars)) fail("class is not defined over Grass_k(C^n)");
  if (!check_symmetric(v)) fail("class must be symmetric in z1..zk");
  Dendrite dendrite = dendrite_orthant(k, seed);
  WeylFactor weyl = unitary_weyl_factor(model.vars, model.z_slots());
  const auto e0 = model.euler_factors_at_origin();

  std::optional<FactoredRatFunc> total;
  ResidueOrder order;
  for (const auto& branch : dendrite.branches) {
    if (!dendrite.image.is_vertex(branch.terminal)) {
      inconsistent("dendrite branch ends away from the only fixed point");
    }
    // Walls in crossing order; the last wall crossed is the innermost residue.
    ResidueOrder branch_order;
    for (const auto& ray : branch.rays) branch_order.push_back(model.z_slots()[ray.wall]);
    FactoredRatFunc local(weyl.varpi * v, e0);
    if (total) {
      if (branch_order != order) inconsistent("branches disagree on the residue order");
      total = *total + local;
    } else {
      total = std::move(local);
      order = std::move(branch_order);
    }
  }
  return {std::move(*total), Rational(1) / Rational(static_cast<long>(weyl.order)),
          std::move(order), std::move(dendrite)};
}

Polynomial assemble_grassmannian_formula(int k, int n, const Polynomial& v, std::uint64_t seed) {
  auto f = assemble_grassmannian_integrand(k, n, v, seed);
  return iterated_residue(f.integrand, f.order).to_polynomial() * f.prefactor;
}

VarTablePtr p2_vars() {
  static const VarTablePtr vars = VarTable::make(
      {{"t0", VarClass::torus}, {"t1", VarClass::torus}, {"x", VarClass::residue}});
  return vars;
}

FactoredRatFunc p2_example(const Polynomial& f) {
  const auto& vars = p2_vars();
  if (!same_table(f.vars(), vars)) fail("p2_example expects a polynomial over t0, t1, x");
  const std::size_t t0 = 0, t1 = 1, x = 2;
  if (f.involves(t0) || f.involves(t1)) fail("p2_example expects a polynomial in x alone");
  auto lx = LinearForm::variable(vars, x);
  FactoredRatFunc integrand(f, {LinearForm::variable(vars, t0) - lx,
                                LinearForm::variable(vars, t1) - lx});
  FactoredRatFunc res = f.is_zero() ? integrand : residue_at_infinity(integrand, x);

  Polynomial at0 = f.substitute({{x, Polynomial::variable(vars, t0)}});
  Polynomial at1 = f.substitute({{x, Polynomial::variable(vars, t1)}});
  auto closed = divide_exact(at0 - at1, LinearForm::variable(vars, t1) - LinearForm::variable(vars, t0));
  if (!closed) inconsistent("f(t0) - f(t1) is not divisible by t1 - t0");
  auto value = res.try_polynomial();
  if (!value || !(*value == *closed)) {
    inconsistent("residue " + res.to_string() + " differs from (f(t0) - f(t1))/(t1 - t0) = " +
                 closed->to_string());
  }
  return res;
}

}  // namespace equivloc
