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

#include "equivloc/error.hpp"
#include "equivloc/pushforward.hpp"
#include "equivloc/symfunc.hpp"
#include "support.hpp"

using namespace equivloc;
using namespace equivloc::testing;

namespace {

std::vector<SpaceDescriptor> small_spaces() {
  std::vector<SpaceDescriptor> out;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= n; ++m) out.push_back(SpaceDescriptor::grass(m, n));
  }
  for (int n = 1; n <= 3; ++n) {
    out.push_back(SpaceDescriptor::lagrangian(n));
    out.push_back(SpaceDescriptor::og_even(n));
    out.push_back(SpaceDescriptor::og_odd(n));
  }
  return out;
}

Polynomial random_class_for(const SpaceDescriptor& s, std::mt19937_64& rng, int extra = 3) {
  RandomClassOptions opts{std::max(0, s.dimension() - 1), s.dimension() + extra, 3};
  return random_symmetric_class(s.vars(), s.residue_count(), opts, rng);
}

// Applies t_i -> sign_i * t_{perm_i} to a polynomial in torus variables.
Polynomial act_on_t(const SpaceDescriptor& s, const Polynomial& p, const std::vector<int>& perm,
                    const std::vector<int>& sign) {
  Substitution sub;
  for (int i = 0; i < s.n(); ++i) {
    sub.insert_or_assign(s.t_slot(i), Rational(sign[i]) * Polynomial::variable(s.vars(), s.t_slot(perm[i])));
  }
  return p.substitute(sub);
}

}  // namespace

TEST_SUITE("pushforward") {

TEST_CASE("space descriptors") {
  auto g = SpaceDescriptor::parse("grass:2,4");
  CHECK(g.kind() == SpaceKind::grass);
  CHECK(g.dimension() == 4);
  CHECK(g.vars()->size() == 6);
  CHECK(g.spec_string() == "grass:2,4");
  CHECK(SpaceDescriptor::parse("lg:3").dimension() == 6);
  CHECK(SpaceDescriptor::parse("og-:3").dimension() == 3);
  CHECK(SpaceDescriptor::parse("og+:3").dimension() == 6);
  CHECK(SpaceDescriptor::parse("root:A:5:2").kind() == SpaceKind::grass);
  CHECK(SpaceDescriptor::parse("root:A:5:2").m() == 2);
  CHECK(SpaceDescriptor::parse("root:C:2").kind() == SpaceKind::lagrangian);
  CHECK(SpaceDescriptor::parse("root:D:2").kind() == SpaceKind::og_even);
  CHECK(SpaceDescriptor::parse("root:B:2").kind() == SpaceKind::og_odd);
  for (const auto& s : small_spaces()) {
    CHECK(SpaceDescriptor::parse(s.spec_string()).spec_string() == s.spec_string());
  }
  CHECK_THROWS_AS(SpaceDescriptor::parse("grass:3,2"), Error);
  CHECK_THROWS_AS(SpaceDescriptor::parse("lg:0"), Error);
  CHECK_THROWS_AS(SpaceDescriptor::parse("flag:2"), Error);
  CHECK_THROWS_AS(SpaceDescriptor::parse("grass:1"), Error);
}

TEST_CASE("fixed point examples") {
  auto p1 = SpaceDescriptor::grass(1, 2);
  auto v = p1.vars();
  auto fps = fixed_points(p1);
  REQUIRE(fps.size() == 2);
  const auto z = p1.z_slot(0);
  CHECK(fps[0].restriction.at(z) == lin(v, "t1"));
  CHECK(fps[0].euler_factors == std::vector<LinearForm>{lin(v, "t2") - lin(v, "t1")});
  CHECK(fps[1].restriction.at(z) == lin(v, "t2"));
  CHECK(fps[1].euler_factors == std::vector<LinearForm>{lin(v, "t1") - lin(v, "t2")});

  auto pt = fixed_points(SpaceDescriptor::grass(3, 3));
  REQUIRE(pt.size() == 1);
  CHECK(pt[0].euler_factors.empty());

  auto lg = SpaceDescriptor::lagrangian(1);
  auto lv = lg.vars();
  auto lfps = fixed_points(lg);
  REQUIRE(lfps.size() == 2);
  CHECK(lfps[0].restriction.at(lg.z_slot(0)) == lin(lv, "t1"));
  CHECK(lfps[0].euler_factors == std::vector<LinearForm>{lin(lv, "t1") * Rational(2)});
  CHECK(lfps[1].restriction.at(lg.z_slot(0)) == -lin(lv, "t1"));
  CHECK(lfps[1].euler_factors == std::vector<LinearForm>{lin(lv, "t1") * Rational(-2)});
}

TEST_CASE("fixed points agree with the first-principles enumeration") {
  for (const auto& s : small_spaces()) {
    auto fps = fixed_points(s);
    auto oracle = oracle_fixed_points(s);
    REQUIRE(fps.size() == oracle.size());
    for (const auto& fp : fps) {
      CHECK(fp.euler_factors.size() == static_cast<std::size_t>(s.dimension()));
      bool found = false;
      for (const auto& o : oracle) {
        bool same = true;
        for (const auto& [slot, form] : fp.restriction) {
          same = same && o.restriction.at(slot) == form.to_polynomial();
        }
        if (!same) continue;
        found = true;
        FactoredRatFunc lhs(Polynomial::constant(s.vars(), Rational(1)), fp.euler_factors);
        FactoredRatFunc rhs(Polynomial::constant(s.vars(), Rational(1)), o.weights);
        CHECK(lhs == rhs);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("fixed-point sum examples") {
  auto g11 = SpaceDescriptor::grass(1, 1);
  auto v11 = poly(g11.vars(), "z1^3 - 2*z1 + 5");
  CHECK(abbv_pushforward(g11, v11) == poly(g11.vars(), "t1^3 - 2*t1 + 5"));

  auto p1 = SpaceDescriptor::grass(1, 2);
  CHECK(abbv_pushforward(p1, poly(p1.vars(), "z1")) == Polynomial::constant(p1.vars(), Rational(-1)));
  CHECK(abbv_pushforward(p1, poly(p1.vars(), "z1^2")) == poly(p1.vars(), "-t1 - t2"));

  auto lg1 = SpaceDescriptor::lagrangian(1);
  CHECK(abbv_pushforward(lg1, poly(lg1.vars(), "z1")) ==
        Polynomial::constant(lg1.vars(), Rational(1)));
}

TEST_CASE("fixed-point sum agrees with the pairwise oracle") {
  std::mt19937_64 rng(41);
  for (const auto& s : small_spaces()) {
    for (int i = 0; i < 3; ++i) {
      auto v = random_class_for(s, rng);
      auto value = abbv_pushforward(s, v);
      CHECK(value == oracle_abbv(s, v));
      auto pt = generic_torus_point(s, rng);
      CHECK(abbv_evaluate(s, v, pt) == oracle_abbv_at(s, v, pt));
      CHECK(value.evaluate(pt) == oracle_abbv_at(s, v, pt));
    }
  }
}

TEST_CASE("non-symmetric classes need the symmetrize flag") {
  auto g = SpaceDescriptor::grass(2, 4);
  auto v = poly(g.vars(), "z1^5");
  CHECK_THROWS_AS(abbv_pushforward(g, v), Error);
  CHECK_THROWS_AS(residue_pushforward(g, v, Form::first), Error);
  auto sym = symmetrize(v);
  CHECK(abbv_pushforward(g, v, true) == abbv_pushforward(g, sym));
  CHECK(residue_pushforward(g, v, Form::rewritten, true) == abbv_pushforward(g, sym));
  auto other = SpaceDescriptor::grass(2, 5);
  CHECK_THROWS_AS(abbv_pushforward(other, poly(g.vars(), "z1 + z2")), Error);
}

TEST_CASE("integrand examples") {
  auto p1 = SpaceDescriptor::grass(1, 2);
  auto v = p1.vars();
  auto in = build_integrand(p1, poly(v, "z1"), Form::first);
  CHECK(in.prefactor == Rational(1));
  CHECK(in.function == FactoredRatFunc(poly(v, "z1"), {lin(v, "t1") - lin(v, "z1"),
                                                       lin(v, "t2") - lin(v, "z1")}));

  // LG(2), unified: the factor of z1 is prod over X1 minus z1 = 2 z1 (z1 - z2)(z1 + z2).
  auto lg2 = SpaceDescriptor::lagrangian(2);
  auto w = lg2.vars();
  auto u = build_integrand(lg2, Polynomial::constant(w, Rational(1)), Form::unified);
  CHECK(u.prefactor == Rational(1, 2));
  auto factor1 = poly(w, "2*z1*(z1 - z2)*(z1 + z2)");
  auto factor2 = poly(w, "2*z2*(z2 - z1)*(z2 + z1)");
  FactoredRatFunc expected = FactoredRatFunc::from_factors(
      factor1 * factor2, {},
      {lin(w, "t1") - lin(w, "z1"), lin(w, "t1") + lin(w, "z1"), lin(w, "t1") - lin(w, "z2"),
       lin(w, "t1") + lin(w, "z2"), lin(w, "t2") - lin(w, "z1"), lin(w, "t2") + lin(w, "z1"),
       lin(w, "t2") - lin(w, "z2"), lin(w, "t2") + lin(w, "z2"), lin(w, "z1") + lin(w, "z2"),
       lin(w, "z1") * Rational(2), lin(w, "z2") * Rational(2)});
  CHECK(u.function.equivalent(expected));

  // OG(n, 2n+1), rewritten: the numerator carries 2^n.
  for (int n = 1; n <= 3; ++n) {
    auto og = SpaceDescriptor::og_odd(n);
    auto lgn = SpaceDescriptor::lagrangian(n);
    auto one_og = Polynomial::constant(og.vars(), Rational(1));
    auto one_lg = Polynomial::constant(lgn.vars(), Rational(1));
    auto a = build_integrand(og, one_og, Form::rewritten);
    auto b = build_integrand(lgn, one_lg, Form::rewritten);
    CHECK(a.function.numerator() * a.function.scalar() ==
          Rational(1L << n) * b.function.numerator() * b.function.scalar());
  }
}

TEST_CASE("unified integrand equals the rewritten one") {
  std::mt19937_64 rng(42);
  for (const auto& s : small_spaces()) {
    auto v = random_class_for(s, rng, 1);
    auto u = build_integrand(s, v, Form::unified);
    auto r = build_integrand(s, v, Form::rewritten);
    CHECK(u.prefactor == r.prefactor);
    CHECK(u.function == r.function);
  }
}

TEST_CASE("integrands are canonical") {
  for (const auto& s : small_spaces()) {
    for (Form f : kAllForms) {
      auto in = build_integrand(s, Polynomial::constant(s.vars(), Rational(1)), f);
      CHECK(in.function.is_canonical());
      CHECK(in.order.size() == static_cast<std::size_t>(s.residue_count()));
    }
  }
}

TEST_CASE("residue evaluator examples") {
  auto p1 = SpaceDescriptor::grass(1, 2);
  CHECK(residue_pushforward(p1, poly(p1.vars(), "z1"), Form::first) ==
        Polynomial::constant(p1.vars(), Rational(-1)));
  auto g22 = SpaceDescriptor::grass(2, 2);
  for (Form f : kAllForms) {
    CHECK(residue_pushforward(g22, poly(g22.vars(), "z1*z2"), f) == poly(g22.vars(), "t1*t2"));
  }
  auto lg1 = SpaceDescriptor::lagrangian(1);
  CHECK(residue_pushforward(lg1, poly(lg1.vars(), "z1"), Form::first) ==
        Polynomial::constant(lg1.vars(), Rational(1)));
}

TEST_CASE("agreement reports") {
  auto g = SpaceDescriptor::grass(2, 4);
  auto v = poly(g.vars(), "s[2,1]*e[1]");
  auto report = verify_agreement(g, v, kAllForms);
  CHECK(report.all_agree());
  CHECK(report.entries.size() == 4);

  auto lg = SpaceDescriptor::lagrangian(2);
  CHECK(verify_agreement(lg, poly(lg.vars(), "e[1]^3"), kAllForms).all_agree());

  for (const auto& s : small_spaces()) {
    auto r = verify_agreement(s, Polynomial(s.vars()), kAllForms);
    CHECK(r.all_agree());
    for (const auto& e : r.entries) CHECK(e.value->is_zero());
  }

  VerifyOptions broken;
  broken.inject_disagreement = true;
  auto bad = verify_agreement(g, v, kAllForms, broken);
  CHECK_FALSE(bad.all_agree());
  CHECK(bad.entries[0].agrees);
  CHECK_FALSE(bad.entries[1].agrees);
  CHECK_FALSE(bad.entries[1].error.empty());

  // Errors become entries rather than exceptions.
  auto rejected = verify_agreement(g, poly(g.vars(), "z1"), kAllForms);
  CHECK_FALSE(rejected.all_agree());
  for (const auto& e : rejected.entries) CHECK_FALSE(e.error.empty());
}

TEST_CASE("specialization at zero") {
  auto g = SpaceDescriptor::grass(2, 4);
  CHECK(specialize_at_zero(abbv_pushforward(g, poly(g.vars(), "(z1 + z2)^4"))) == Rational(2));
  CHECK(specialize_at_zero(oracle_abbv(g, poly(g.vars(), "(z1 + z2)^4"))) == Rational(2));
  for (int n = 1; n <= 5; ++n) {
    auto p = SpaceDescriptor::grass(1, n);
    auto v = poly(p.vars(), "(-z1)^" + std::to_string(n - 1));
    CHECK(specialize_at_zero(oracle_abbv(p, v)) == Rational(1));
    CHECK(specialize_at_zero(residue_pushforward(p, v, Form::first)) == Rational(1));
  }
  CHECK(specialize_at_zero(abbv_pushforward(g, poly(g.vars(), "e[1]^5"))) == Rational(0));
  CHECK_THROWS_AS(specialize_at_zero(poly(g.vars(), "z1")), Error);
}

TEST_CASE("all forms agree with the fixed-point sum") {
  std::mt19937_64 rng(43);
  for (const auto& s : small_spaces()) {
    for (int i = 0; i < 3; ++i) {
      auto v = random_class_for(s, rng);
      auto reference = oracle_abbv(s, v);
      for (Form f : kAllForms) CHECK(residue_pushforward(s, v, f) == reference);
    }
  }
}

TEST_CASE("homogeneity and vanishing below the dimension") {
  std::mt19937_64 rng(44);
  for (const auto& s : small_spaces()) {
    for (int d = 0; d <= s.dimension() + 3; ++d) {
      RandomClassOptions opts{d, d, 2};
      auto v = random_symmetric_class(s.vars(), s.residue_count(), opts, rng);
      auto out = abbv_pushforward(s, v);
      if (d < s.dimension()) {
        CHECK(out.is_zero());
      } else if (!out.is_zero()) {
        CHECK(out.is_homogeneous());
        CHECK(out.total_degree() == d - s.dimension());
      }
    }
  }
}

TEST_CASE("linearity in the class") {
  std::mt19937_64 rng(45);
  for (const auto& s : small_spaces()) {
    auto a = random_class_for(s, rng), b = random_class_for(s, rng);
    Rational x = small_rational(rng), y = small_rational(rng);
    CHECK(abbv_pushforward(s, x * a + y * b) ==
          x * abbv_pushforward(s, a) + y * abbv_pushforward(s, b));
    CHECK(residue_pushforward(s, x * a + y * b, Form::unified) ==
          x * residue_pushforward(s, a, Form::unified) + y * residue_pushforward(s, b, Form::unified));
  }
}

TEST_CASE("outputs are symmetric in the torus variables") {
  std::mt19937_64 rng(46);
  for (const auto& s : small_spaces()) {
    auto v = random_class_for(s, rng);
    auto out = abbv_pushforward(s, v);
    std::vector<int> perm(s.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> plus(s.n(), 1);
    do {
      CHECK(act_on_t(s, out, perm, plus) == out);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (s.kind() == SpaceKind::grass) continue;
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < s.n(); ++i) {
      auto sign = plus;
      sign[i] = -1;
      CHECK(act_on_t(s, out, perm, sign) == out);
    }
  }
}

}  // TEST_SUITE
