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

#include "equivloc/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "equivloc/error.hpp"

namespace equivloc {

char root_type_letter(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

RootSystemSpec RootSystemSpec::type_a(int m, int n) {
  RootSystemSpec s{RootType::A, n, m};
  s.validate();
  return s;
}

RootSystemSpec RootSystemSpec::of(RootType type, int n) {
  RootSystemSpec s{type, n, type == RootType::A ? 1 : 0};
  s.validate();
  return s;
}

void RootSystemSpec::validate() const {
  if (rank < 1) fail("root system rank must be positive");
  // m = 0 is the degenerate point Grass(0, n).
  if (type == RootType::A && (m < 0 || m > rank)) {
    fail("type A parabolic requires 0 <= m <= n");
  }
}

WeylElement WeylElement::identity(int n) {
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.sign.assign(n, 1);
  return w;
}

int WeylElement::negative_count() const {
  return static_cast<int>(std::count(sign.begin(), sign.end(), -1));
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  WeylElement out;
  out.perm.resize(perm.size());
  out.sign.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int j = other.perm[i];
    out.perm[i] = perm[j];
    out.sign[i] = other.sign[i] * sign[j];
  }
  return out;
}

Weight WeylElement::apply(const Weight& w) const {
  Weight out(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) out[perm[i]] += sign[i] * w[i];
  return out;
}

bool is_member(const RootSystemSpec& spec, const WeylElement& w) {
  if (w.size() != spec.rank) return false;
  switch (spec.type) {
    case RootType::A: return w.negative_count() == 0;
    case RootType::D: return w.negative_count() % 2 == 0;
    default: return true;
  }
}

std::vector<WeylElement> weyl_generators(const RootSystemSpec& spec) {
  const int n = spec.rank;
  std::vector<WeylElement> gens;
  for (int i = 0; i + 1 < n; ++i) {
    auto s = WeylElement::identity(n);
    std::swap(s.perm[i], s.perm[i + 1]);
    gens.push_back(s);
  }
  if (spec.type == RootType::B || spec.type == RootType::C) {
    auto s = WeylElement::identity(n);
    s.sign[n - 1] = -1;
    gens.push_back(s);
  } else if (spec.type == RootType::D && n >= 2) {
    // Reflection in e_{n-1} + e_n.
    auto s = WeylElement::identity(n);
    std::swap(s.perm[n - 2], s.perm[n - 1]);
    s.sign[n - 2] = s.sign[n - 1] = -1;
    gens.push_back(s);
  }
  return gens;
}

std::vector<WeylElement> weyl_group(const RootSystemSpec& spec) {
  spec.validate();
  auto gens = weyl_generators(spec);
  std::set<WeylElement> seen{WeylElement::identity(spec.rank)};
  std::vector<WeylElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        auto x = g.compose(w);
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::uint64_t fact(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::uint64_t weyl_order(const RootSystemSpec& spec) {
  spec.validate();
  const int n = spec.rank;
  switch (spec.type) {
    case RootType::A: return fact(n);
    case RootType::B:
    case RootType::C: return (std::uint64_t{1} << n) * fact(n);
    case RootType::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
  }
  return 0;
}

std::uint64_t wp_order(const RootSystemSpec& spec) {
  spec.validate();
  if (spec.type == RootType::A) return fact(spec.m) * fact(spec.rank - spec.m);
  return fact(spec.rank);
}

std::vector<WeylElement> coset_reps(const RootSystemSpec& spec) {
  spec.validate();
  const int n = spec.rank;
  std::vector<WeylElement> reps;
  if (spec.type == RootType::A) {
    // Order-preserving shuffles: {1..m} onto an m-subset, the rest onto its
    // complement.  Subsets are enumerated in lexicographic order.
    std::vector<int> chosen(n, 0);
    std::fill(chosen.begin(), chosen.begin() + spec.m, 1);
    do {
      auto w = WeylElement::identity(n);
      int a = 0, b = spec.m;
      for (int j = 0; j < n; ++j) {
        if (chosen[j]) {
          w.perm[a++] = j;
        } else {
          w.perm[b++] = j;
        }
      }
      reps.push_back(std::move(w));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return reps;
  }
  // Sign vectors, ordered with +1 before -1 position by position.
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto w = WeylElement::identity(n);
    for (int i = 0; i < n; ++i) {
      if (bits >> (n - 1 - i) & 1u) w.sign[i] = -1;
    }
    if (spec.type == RootType::D && w.negative_count() % 2) continue;
    reps.push_back(std::move(w));
  }
  return reps;
}

std::vector<Weight> complement_roots(const RootSystemSpec& spec) {
  spec.validate();
  const int n = spec.rank;
  std::vector<Weight> roots;
  auto unit = [n](int i, int coef) {
    Weight w(n, 0);
    w[i] = coef;
    return w;
  };
  if (spec.type == RootType::A) {
    for (int i = 0; i < spec.m; ++i) {
      for (int j = spec.m; j < n; ++j) {
        Weight w(n, 0);
        w[j] = 1;
        w[i] = -1;
        roots.push_back(std::move(w));
      }
    }
    return roots;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Weight w(n, 0);
      w[i] = w[j] = 1;
      roots.push_back(std::move(w));
    }
  }
  if (spec.type == RootType::C) {
    for (int i = 0; i < n; ++i) roots.push_back(unit(i, 2));
  } else if (spec.type == RootType::B) {
    for (int i = 0; i < n; ++i) roots.push_back(unit(i, 1));
  }
  return roots;
}

OrbitSets orbit_sets(const RootSystemSpec& spec) {
  spec.validate();
  const int vars = spec.type == RootType::A ? spec.m : spec.rank;
  RootSystemSpec acting = spec;
  if (spec.type == RootType::A) acting = RootSystemSpec{RootType::A, std::max(vars, 1), std::max(vars, 1)};
  auto gens = vars > 0 ? weyl_generators(acting) : std::vector<WeylElement>{};
  OrbitSets out;
  for (int i = 0; i < vars; ++i) {
    std::set<SignedIndex> orbit{{i, 1}};
    std::vector<SignedIndex> frontier{{i, 1}};
    while (!frontier.empty()) {
      std::vector<SignedIndex> next;
      for (const auto& x : frontier) {
        for (const auto& g : gens) {
          SignedIndex y{g.perm[x.index], g.sign[x.index] * x.sign};
          if (orbit.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

LinearForm weight_form(const Weight& w, const VarTablePtr& vars, std::size_t first) {
  LinearForm out(vars);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    if (first + k >= vars->size()) fail("weight does not fit the variable table");
    out += LinearForm::variable(vars, first + k, Rational(w[k]));
  }
  return out;
}

}  // namespace equivloc
