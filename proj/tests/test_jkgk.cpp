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

#include <doctest.h>

#include <set>

#include "equivloc/error.hpp"
#include "equivloc/jkgk.hpp"
#include "equivloc/pushforward.hpp"
#include "support.hpp"

using namespace equivloc;
using namespace equivloc::testing;

TEST_SUITE("jkgk") {

TEST_CASE("orthant dendrites end at the origin") {
  for (int k = 1; k <= 4; ++k) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto d = dendrite_orthant(k, seed);
      REQUIRE(d.branches.size() == 1);
      const auto& b = d.branches[0];
      CHECK(d.image.is_vertex(b.terminal));
      CHECK(b.rays.size() == static_cast<std::size_t>(k));
      // Each crossing hits a new wall and lands on it.
      std::set<std::size_t> walls;
      for (const auto& r : b.rays) {
        walls.insert(r.wall);
        CHECK(r.hit[r.wall].is_zero());
        for (const auto& x : r.hit) CHECK(x.sign() >= 0);
      }
      CHECK(walls.size() == static_cast<std::size_t>(k));
    }
  }
  CHECK_THROWS_AS(dendrite_orthant(0), Error);
}

TEST_CASE("walk geometry") {
  auto d = dendrite_orthant(3, 7);
  const auto& rays = d.branches[0].rays;
  CHECK(rays[0].start == Point(3, Rational(1)));
  for (std::size_t s = 0; s < rays.size(); ++s) {
    // hit = start + tau * direction for one tau > 0.
    std::optional<Rational> tau;
    for (std::size_t i = 0; i < 3; ++i) {
      if (rays[s].direction[i].is_zero()) {
        CHECK(rays[s].hit[i] == rays[s].start[i]);
        continue;
      }
      Rational t = (rays[s].hit[i] - rays[s].start[i]) / rays[s].direction[i];
      if (tau) CHECK(t == *tau);
      tau = t;
    }
    REQUIRE(tau.has_value());
    CHECK(tau->sign() > 0);
    if (s + 1 < rays.size()) CHECK(rays[s + 1].start == rays[s].hit);
  }
}

TEST_CASE("reversed rays on the interval") {
  // From the upper end of [0, 1] a positive ray leaves the image at once,
  // so the walk must fall back to -l.
  bool saw_reversed = false;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto d = dendrite_walk(MomentImage::unit_interval(), seed);
    REQUIRE(d.branches.size() == 1);
    const auto& r = d.branches[0].rays.at(0);
    CHECK(r.direction[0].sign() < 0);
    CHECK(d.branches[0].terminal == Point{Rational(0)});
    saw_reversed = saw_reversed || r.reversed;
  }
  CHECK(saw_reversed);
}

TEST_CASE("Weyl factor of U(k)") {
  auto g = SpaceDescriptor::grass(3, 4);
  std::vector<std::size_t> z{g.z_slot(0), g.z_slot(1), g.z_slot(2)};
  auto w = unitary_weyl_factor(g.vars(), z);
  CHECK(w.order == 6);
  CHECK(w.varpi == poly(g.vars(), "-((z1 - z2)*(z1 - z3)*(z2 - z3))^2"));
}

TEST_CASE("Hom model Euler factors") {
  HomModel h(2, 3);
  CHECK(h.euler_factors_at_origin().size() == 6);
  CHECK_THROWS_AS(HomModel(3, 2), Error);
}

TEST_CASE("assembled formula examples") {
  auto p1 = SpaceDescriptor::grass(1, 2);
  CHECK(assemble_grassmannian_formula(1, 2, poly(p1.vars(), "z1")) ==
        Polynomial::constant(p1.vars(), Rational(-1)));
  auto g = SpaceDescriptor::grass(2, 4);
  CHECK(specialize_at_zero(assemble_grassmannian_formula(2, 4, poly(g.vars(), "(z1 + z2)^4"))) ==
        Rational(2));
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      auto s = SpaceDescriptor::grass(k, n);
      CHECK(assemble_grassmannian_formula(k, n, Polynomial::constant(s.vars(), Rational(1))).is_zero());
    }
  }
  CHECK_THROWS_AS(assemble_grassmannian_formula(2, 4, poly(g.vars(), "z1")), Error);
}

TEST_CASE("assembled formula matches both evaluators") {
  std::mt19937_64 rng(51);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= std::min(n, 3); ++k) {
      auto s = SpaceDescriptor::grass(k, n);
      for (int i = 0; i < 3; ++i) {
        RandomClassOptions opts{s.dimension(), s.dimension() + 3, 2};
        auto v = random_symmetric_class(s.vars(), k, opts, rng);
        auto value = assemble_grassmannian_formula(k, n, v, i + 1);
        CHECK(value == residue_pushforward(s, v, Form::rewritten));
        CHECK(value == oracle_abbv(s, v));
      }
    }
  }
}

TEST_CASE("projective line example") {
  auto v = p2_vars();
  auto x = var(v, "x"), t0 = var(v, "t0"), t1 = var(v, "t1");
  CHECK(p2_example(Polynomial::constant(v, Rational(1))).is_zero());
  CHECK(p2_example(x).to_polynomial() == Polynomial::constant(v, Rational(-1)));
  CHECK(p2_example(x * x).to_polynomial() == -(t0 + t1));
  CHECK_THROWS_AS(p2_example(t0 * x), Error);
  std::mt19937_64 rng(52);
  for (int d = 0; d <= 10; ++d) {
    Polynomial f(v);
    for (int j = 0; j <= d; ++j) f += small_rational(rng) * x.pow(static_cast<unsigned>(j));
    auto res = p2_example(f);
    // Independent check at a numeric point.
    Rational a(3, 7), b(-5, 2);
    std::vector<Rational> pt{a, b, Rational(0)};
    auto f_at = [&](const Rational& r) {
      std::vector<Rational> q{a, b, r};
      return f.evaluate(q);
    };
    CHECK(res.evaluate(pt) == f_at(a) / (b - a) + f_at(b) / (a - b));
  }
}

}  // TEST_SUITE
