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
#include "equivloc/symfunc.hpp"
#include "support.hpp"

using namespace equivloc;
using namespace equivloc::testing;

namespace {

// Bialternant oracle: det(z_i^{lambda_j + m - j}) divided by the Vandermonde.
Polynomial bialternant(const Partition& lambda, const VarTablePtr& vars, int m) {
  const auto z = vars->residue_vars();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial alt(vars);
  do {
    int inversions = 0;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) inversions += perm[a] > perm[b];
    }
    Polynomial term = Polynomial::constant(vars, Rational(inversions % 2 ? -1 : 1));
    for (int j = 0; j < m; ++j) {
      int part = j < static_cast<int>(lambda.length()) ? lambda.parts()[j] : 0;
      term *= Polynomial::variable(vars, z[perm[j]]).pow(static_cast<unsigned>(part + m - 1 - j));
    }
    alt += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto q = divide_exact(alt, LinearForm::variable(vars, z[i]) - LinearForm::variable(vars, z[j]));
      REQUIRE(q.has_value());
      alt = *q;
    }
  }
  return alt;
}

}  // namespace

TEST_SUITE("symfunc") {

TEST_CASE("partitions") {
  CHECK(Partition({2, 1}).size() == 3);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK(partitions_of(4, 4).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(0, 3).size() == 1);
}

TEST_CASE("Schur examples") {
  auto v = VarTable::standard(0, 2);
  CHECK(schur(Partition({1}), v, 2) == poly(v, "z1 + z2"));
  CHECK(schur(Partition({1, 1}), v, 2) == poly(v, "z1*z2"));
  CHECK(schur(Partition({2, 1}), v, 2) == poly(v, "z1^2*z2 + z1*z2^2"));
  CHECK(schur(Partition(), v, 2) == Polynomial::constant(v, Rational(1)));
  CHECK_THROWS_AS(schur(Partition({1, 1, 1}), v, 2), Error);
}

TEST_CASE("Schur polynomials match the bialternant formula") {
  for (int m = 1; m <= 4; ++m) {
    auto v = VarTable::standard(1, m);
    for (int total = 0; total <= 6; ++total) {
      for (const auto& lambda : partitions_of(total, m)) {
        auto s = schur(lambda, v, m);
        CHECK(s == bialternant(lambda, v, m));
        CHECK(check_symmetric(s));
        CHECK(s.is_homogeneous());
        CHECK(s.total_degree() == total);
      }
    }
  }
}

TEST_CASE("Pieri rule s1 * s1 = s2 + s11") {
  for (int m = 2; m <= 6; ++m) {
    auto v = VarTable::standard(0, m);
    auto s1 = schur(Partition({1}), v, m);
    CHECK(s1 * s1 == schur(Partition({2}), v, m) + schur(Partition({1, 1}), v, m));
  }
}

TEST_CASE("elementary, complete and power sums") {
  auto v = VarTable::standard(0, 3);
  CHECK(elementary(2, v, 3) == poly(v, "z1*z2 + z1*z3 + z2*z3"));
  CHECK(elementary(4, v, 3).is_zero());
  CHECK(complete(2, v, 2) == poly(v, "z1^2 + z1*z2 + z2^2"));
  CHECK(power_sum(3, v, 3) == poly(v, "z1^3 + z2^3 + z3^3"));
  CHECK(elementary(0, v, 3) == Polynomial::constant(v, Rational(1)));
  // Newton identity: 2 e2 = p1^2 - p2.
  CHECK(2 * elementary(2, v, 3) == power_sum(1, v, 3).pow(2) - power_sum(2, v, 3));
  // sum_{i} (-1)^i e_i h_{k-i} = 0 for k >= 1.
  for (int k = 1; k <= 5; ++k) {
    Polynomial s(v);
    for (int i = 0; i <= k; ++i) {
      s += Rational(i % 2 ? -1 : 1) * (elementary(i, v, 3) * complete(k - i, v, 3));
    }
    CHECK(s.is_zero());
  }
}

TEST_CASE("symmetry checker") {
  auto v = VarTable::standard(1, 2);
  CHECK(check_symmetric(poly(v, "z1 + z2")));
  CHECK_FALSE(check_symmetric(poly(v, "z1")));
  CHECK(check_symmetric(poly(v, "t1*z1*z2")));
  CHECK(symmetrize(poly(v, "z1")) == poly(v, "1/2*z1 + 1/2*z2"));
  CHECK(symmetrize(poly(v, "z1*z2 + t1")) == poly(v, "z1*z2 + t1"));
}

TEST_CASE("symmetrize output is symmetric") {
  std::mt19937_64 rng(31);
  auto v = VarTable::standard(2, 3);
  for (int i = 0; i < 20; ++i) {
    auto p = random_polynomial(v, all_slots(v), 4, 4, rng);
    auto s = symmetrize(p);
    CHECK(check_symmetric(s));
    CHECK(symmetrize(s) == s);
  }
}

}  // TEST_SUITE

TEST_SUITE("class_parser") {

TEST_CASE("builtins expand over the residue variables") {
  auto v = VarTable::standard(2, 2);
  CHECK(parse_class("s[2,1]", v) == poly(v, "z1^2*z2 + z1*z2^2"));
  auto e1 = var(v, "z1") + var(v, "z2");
  CHECK(parse_class("e[1]^4", v) == e1.pow(4));
  CHECK(parse_class("t1*p[1]", v) == var(v, "t1") * var(v, "z1") + var(v, "t1") * var(v, "z2"));
  CHECK(parse_class("h[2]", v) == complete(2, v, 2));
  CHECK(parse_class("s[]", v) == Polynomial::constant(v, Rational(1)));
}

TEST_CASE("arithmetic and precedence") {
  auto v = VarTable::standard(1, 1);
  auto t = var(v, "t1"), z = var(v, "z1");
  CHECK(parse_class("1 + 2*3^2", v) == Polynomial::constant(v, Rational(19)));
  CHECK(parse_class("-z1^2", v) == -(z * z));
  CHECK(parse_class("(t1 - z1)*(t1 + z1)", v) == t * t - z * z);
  CHECK(parse_class("3/6*z1", v) == Rational(1, 2) * z);
  CHECK(parse_class("z1/(2*3)", v) == Rational(1, 6) * z);
  CHECK(parse_class("  t1\t*  z1 ", v) == t * z);
  CHECK(parse_class("0", v).is_zero());
}

TEST_CASE("parse errors carry positions") {
  auto v = VarTable::standard(1, 2);
  auto position = [&](std::string_view text) -> std::size_t {
    try {
      parse_class(text, v);
    } catch (const ParseError& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(position("z1 +* 2") == 4);
  CHECK(position("q1") == 0);
  CHECK(position("(z1") == 3);
  CHECK(position("z1 / z2") == 5);
  CHECK(position("z1 ^ t1") == 5);
  CHECK(position("s[2,x]") == 4);
  CHECK(position("z1 z2") == 3);
  CHECK_THROWS_AS(parse_class("s[1,2]", v), Error);
  CHECK_THROWS_AS(parse_class("e[1", v), ParseError);
}

}  // TEST_SUITE
