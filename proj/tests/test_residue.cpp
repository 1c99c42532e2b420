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
#include "equivloc/residue.hpp"
#include "support.hpp"

using namespace equivloc;
using namespace equivloc::testing;

namespace {

// Local residue of f at the simple pole z = root of `pole` (a linear form
// c*z + rest), computed as N(z0) / (c * prod_{other} L(z0)) at a numeric point.
Rational local_residue(const Polynomial& num, const std::vector<LinearForm>& den, std::size_t k,
                       std::size_t z, std::vector<Rational> point) {
  const auto& pole = den[k];
  Rational c = pole.coefficient(z);
  point[z] = Rational(0);
  Rational rest = pole.evaluate(point);
  point[z] = -rest / c;
  Rational value = num.evaluate(point) / c;
  for (std::size_t j = 0; j < den.size(); ++j) {
    if (j != k) value /= den[j].evaluate(point);
  }
  return value;
}

}  // namespace

TEST_SUITE("residue") {

TEST_CASE("residue at infinity examples") {
  auto v = VarTable::standard(1, 1);
  const std::size_t z = v->index("z1");
  FactoredRatFunc f(Polynomial::constant(v, Rational(1)), {lin(v, "t1") - lin(v, "z1")});
  CHECK(residue_at_infinity(f, z).to_polynomial() == Polynomial::constant(v, Rational(1)));
  CHECK(residue_at_infinity(FactoredRatFunc(var(v, "z1").pow(3)), z).is_zero());

  auto w = VarTable::make({{"t0", VarClass::torus}, {"t1", VarClass::torus},
                           {"x", VarClass::residue}});
  FactoredRatFunc g(var(w, "x"), {lin(w, "t0") - lin(w, "x"), lin(w, "t1") - lin(w, "x")});
  CHECK(residue_at_infinity(g, 2).to_polynomial() == Polynomial::constant(w, Rational(-1)));
}

TEST_CASE("residue preconditions") {
  auto v = VarTable::standard(1, 2);
  FactoredRatFunc f(var(v, "z1"), {lin(v, "t1") - lin(v, "z1")});
  CHECK_THROWS_AS(residue_at_infinity(f, v->index("t1")), Error);
  CHECK_THROWS_AS(residue_at_infinity(f, v->index("z2")), Error);
  FactoredRatFunc coupled(var(v, "z1"), {lin(v, "z1") - lin(v, "z2")});
  CHECK_THROWS_AS(residue_at_infinity(coupled, v->index("z1")), Error);
  CHECK_THROWS_AS(iterated_residue(f, {v->index("z1"), v->index("z1")}), Error);
}

TEST_CASE("iterated residue examples") {
  auto v = VarTable::standard(2, 2);
  const std::size_t z1 = v->index("z1"), z2 = v->index("z2");
  FactoredRatFunc f(Polynomial::constant(v, Rational(1)),
                    {lin(v, "t1") - lin(v, "z1"), lin(v, "t2") - lin(v, "z2")});
  CHECK(iterated_residue(f, {z1, z2}).to_polynomial() == Polynomial::constant(v, Rational(1)));
  CHECK(iterated_residue(f, {z2, z1}) == iterated_residue(f, {z1, z2}));

  FactoredRatFunc g(var(v, "z1"), {lin(v, "t1") - lin(v, "z1"), lin(v, "t2") - lin(v, "z1")});
  // The finite residues sum to 1.
  CHECK(iterated_residue(g, {z1}).to_polynomial() == Polynomial::constant(v, Rational(-1)));
}

TEST_CASE("repeated poles are handled by the series") {
  auto v = VarTable::standard(1, 1);
  const std::size_t z = v->index("z1");
  // z^2 / (t1 - z)^2 = 1 + 2 t1/z + ...;  residue = -2 t1.
  FactoredRatFunc f(var(v, "z1").pow(2), {lin(v, "t1") - lin(v, "z1"), lin(v, "t1") - lin(v, "z1")});
  CHECK(residue_at_infinity(f, z).to_polynomial() == -2 * var(v, "t1"));
}

TEST_CASE("sum of residues: infinity equals minus the finite poles") {
  std::mt19937_64 rng(21);
  auto v = VarTable::standard(4, 1);
  const std::size_t z = v->index("z1");
  auto slots = all_slots(v);
  for (int trial = 0; trial < 40; ++trial) {
    const int poles = 1 + trial % 4;
    std::vector<LinearForm> den;
    for (int j = 1; j <= poles; ++j) {
      den.push_back(lin(v, "t" + std::to_string(j)) - lin(v, "z1") * small_rational(rng));
    }
    auto num = random_polynomial(v, slots, 5, 4, rng);
    if (!num.involves(z)) num += var(v, "z1").pow(poles);
    FactoredRatFunc f(num, den);
    auto res = residue_at_infinity(f, z);
    // Symbolic check: the finite residues N(z_k)/(c_k prod_{j!=k} L_j(z_k))
    // summed as fractions in t.
    FactoredRatFunc finite{Polynomial(v)};
    for (std::size_t k = 0; k < den.size(); ++k) {
      Rational c = den[k].coefficient(z);
      // z_k = -(den[k] - c z)/c as a linear form in t.
      LinearForm rest = den[k] - LinearForm::variable(v, z, c);
      LinearForm root = rest * (Rational(-1) / c);
      std::map<std::size_t, LinearForm> at{{z, root}};
      std::vector<LinearForm> others;
      for (std::size_t j = 0; j < den.size(); ++j) {
        if (j != k) others.push_back(den[j].substitute(at));
      }
      finite = finite + FactoredRatFunc(num.substitute({{z, root.to_polynomial()}}), others,
                                        Rational(1) / c);
    }
    CHECK(res.equivalent(-finite));
    auto pt = random_point(v, rng);
    Rational sum(0);
    for (std::size_t k = 0; k < den.size(); ++k) sum += local_residue(num, den, k, z, pt);
    CHECK(res.evaluate(pt) == -sum);
  }
}

TEST_CASE("linearity of the residue") {
  std::mt19937_64 rng(22);
  auto v = VarTable::standard(3, 1);
  const std::size_t z = v->index("z1");
  auto slots = all_slots(v);
  std::vector<LinearForm> den{lin(v, "t1") - lin(v, "z1"), lin(v, "t2") - lin(v, "z1"),
                              lin(v, "t3") + lin(v, "z1")};
  for (int i = 0; i < 30; ++i) {
    auto f = random_polynomial(v, slots, 5, 4, rng) + var(v, "z1").pow(3);
    auto g = random_polynomial(v, slots, 5, 4, rng) + var(v, "z1").pow(2);
    Rational a = small_rational(rng), b = small_rational(rng);
    auto lhs = residue_at_infinity(FactoredRatFunc(a * f + b * g, den), z);
    auto rhs = residue_at_infinity(FactoredRatFunc(f, den), z) * a +
               residue_at_infinity(FactoredRatFunc(g, den), z) * b;
    CHECK(lhs.equivalent(rhs));
  }
}

TEST_CASE("degree vanishing") {
  std::mt19937_64 rng(23);
  auto v = VarTable::standard(4, 1);
  const std::size_t z = v->index("z1");
  std::vector<LinearForm> den;
  for (int j = 1; j <= 4; ++j) den.push_back(lin(v, "t" + std::to_string(j)) - lin(v, "z1"));
  for (int i = 0; i < 20; ++i) {
    // deg_z numerator <= 2 = 4 - 2.
    auto num = var(v, "z1").pow(2) * small_rational(rng) + var(v, "z1") * var(v, "t3") +
               Polynomial::constant(v, small_rational(rng));
    CHECK(residue_at_infinity(FactoredRatFunc(num, den), z).is_zero());
  }
}

TEST_CASE("order independence on the integrand families") {
  std::mt19937_64 rng(24);
  const SpaceDescriptor spaces[] = {SpaceDescriptor::grass(2, 4), SpaceDescriptor::grass(3, 5),
                                    SpaceDescriptor::lagrangian(3), SpaceDescriptor::og_even(3),
                                    SpaceDescriptor::og_odd(2)};
  for (const auto& space : spaces) {
    for (Form form : kAllForms) {
      RandomClassOptions opts{space.dimension(), space.dimension() + 2, 2};
      auto v = random_symmetric_class(space.vars(), space.residue_count(), opts, rng);
      auto in = build_integrand(space, v, form);
      auto order = in.order;
      auto reference = iterated_residue(in.function, order).to_polynomial();
      std::reverse(order.begin(), order.end());
      CHECK(iterated_residue(in.function, order).to_polynomial() == reference);
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(iterated_residue(in.function, order).to_polynomial() == reference);
    }
  }
}

}  // TEST_SUITE
