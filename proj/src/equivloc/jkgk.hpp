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

#ifndef EQUIVLOC_JKGK_HPP
#define EQUIVLOC_JKGK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equivloc/ratfunc.hpp"
#include "equivloc/residue.hpp"

namespace equivloc {

using Point = std::vector<Rational>;

// Moment image that is a product of intervals [0, upper_i] (upper_i absent
// for half-lines).  Fixed points sit on the lower walls x_i = 0; upper walls
// carry none.  Dendrites start at `base`, the level being reduced.
struct MomentImage {
  int k = 1;
  std::vector<std::optional<Rational>> upper;
  Point base;

  // (R_{>=0})^k for Hom(C^k, C^n) with the diagonal torus; base (1,...,1).
  static MomentImage orthant(int k);
  // [0, 1] for the unit ball in C^2 under the scalar circle; base 1.
  static MomentImage unit_interval();
  bool is_vertex(const Point& p) const;
};

// One ray of a branch: it leaves `start` along `direction` and first meets
// the lower wall x_wall = 0 at `hit`.
struct RaySegment {
  Point start;
  Point direction;
  bool reversed = false;  // -l was used because l escaped
  std::size_t wall = 0;
  Point hit;
};

struct Branch {
  std::vector<RaySegment> rays;
  Point terminal;
  int rejected_rays = 0;  // samples discarded for non-generic incidence
};

struct Dendrite {
  MomentImage image;
  std::vector<Branch> branches;

  std::vector<Point> terminal_points() const;
  std::string describe() const;
};

// Walks rays with random rational slopes from the base point, stepping into
// the wall each ray meets and continuing inside it until a vertex is reached.
Dendrite dendrite_walk(const MomentImage& image, std::uint64_t seed);
Dendrite dendrite_orthant(int k, std::uint64_t seed = 1);

// varpi = prod over roots of U(k) and |W| = k!.
struct WeylFactor {
  Polynomial varpi;
  std::uint64_t order = 1;
};
WeylFactor unitary_weyl_factor(const VarTablePtr& vars, const std::vector<std::size_t>& z);

// Hom(C^k, C^n) with S acting on C^n (t1..tn) and T on C^k (z1..zk); the
// only fixed point is the origin with tangent weights t_j - z_i.
struct HomModel {
  int k;
  int n;
  VarTablePtr vars;  // same table as Grass_k(C^n)

  HomModel(int k, int n);
  std::vector<std::size_t> z_slots() const;
  std::vector<LinearForm> euler_factors_at_origin() const;
};

struct AssembledFormula {
  FactoredRatFunc integrand;  // varpi * V / e(0)
  Rational prefactor;         // 1 / |W|
  ResidueOrder order;
  Dendrite dendrite;
};

// Builds (1/|W|) sum_branches varpi V / e(p) from the dendrite of the
// orthant; the terminal points must all be the origin.
AssembledFormula assemble_grassmannian_integrand(int k, int n, const Polynomial& v,
                                                 std::uint64_t seed = 1);
Polynomial assemble_grassmannian_formula(int k, int n, const Polynomial& v,
                                         std::uint64_t seed = 1);

// Variables t0, t1 (torus) and x (residue) of the projective-line example.
VarTablePtr p2_vars();
// Res_{x=inf} f(x) / ((t0 - x)(t1 - x)); checked against
// (f(t0) - f(t1)) / (t1 - t0) and throws a consistency error on mismatch.
FactoredRatFunc p2_example(const Polynomial& f);

}  // namespace equivloc

#endif  // EQUIVLOC_JKGK_HPP
