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

#include "equivloc/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "equivloc/error.hpp"

namespace equivloc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) fail("partition must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int total, int max_length) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_length) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (total >= 0) rec(total, total);
  return out;
}

namespace {

std::vector<std::size_t> first_residue_vars(const VarTablePtr& vars, int m) {
  auto z = vars->residue_vars();
  if (m < 0 || static_cast<std::size_t>(m) > z.size()) {
    fail("table has fewer than " + std::to_string(m) + " residue variables");
  }
  z.resize(m);
  return z;
}

// h_0..h_k by inverting prod (1 - z_i u) as a power series in u.
std::vector<Polynomial> complete_upto(int k, const VarTablePtr& vars, int m) {
  auto z = first_residue_vars(vars, m);
  std::vector<Polynomial> e{Polynomial::constant(vars, Rational(1))};
  for (auto v : z) {
    std::vector<Polynomial> next(e.size() + 1, Polynomial(vars));
    Polynomial zv = Polynomial::variable(vars, v);
    for (std::size_t i = 0; i < e.size(); ++i) {
      next[i] += e[i];
      next[i + 1] -= e[i] * zv;
    }
    e = std::move(next);
  }
  std::vector<Polynomial> h{Polynomial::constant(vars, Rational(1))};
  for (int n = 1; n <= k; ++n) {
    Polynomial acc(vars);
    for (int j = 1; j <= n && j < static_cast<int>(e.size()); ++j) acc -= e[j] * h[n - j];
    h.push_back(std::move(acc));
  }
  return h;
}

}  // namespace

Polynomial elementary(int k, const VarTablePtr& vars, int m) {
  auto z = first_residue_vars(vars, m);
  if (k < 0 || k > m) return Polynomial(vars);
  Polynomial out(vars);
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  do {
    Monomial mono;
    for (int i = 0; i < m; ++i) {
      if (pick[i]) mono.set(z[i], 1);
    }
    out += Polynomial::monomial(vars, mono, Rational(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Polynomial complete(int k, const VarTablePtr& vars, int m) {
  if (k < 0) return Polynomial(vars);
  return complete_upto(k, vars, m)[k];
}

Polynomial power_sum(int k, const VarTablePtr& vars, int m) {
  auto z = first_residue_vars(vars, m);
  if (k < 0) fail("negative power-sum index");
  if (k == 0) return Polynomial::constant(vars, Rational(m));
  Polynomial out(vars);
  for (auto v : z) {
    Monomial mono;
    mono.set(v, k);
    out += Polynomial::monomial(vars, mono, Rational(1));
  }
  return out;
}

Polynomial schur(const Partition& lambda, const VarTablePtr& vars, int m) {
  const int len = static_cast<int>(lambda.length());
  if (len > m) {
    fail("partition " + lambda.to_string() + " is longer than the " +
         std::to_string(m) + " available variables");
  }
  if (len == 0) return Polynomial::constant(vars, Rational(1));
  const auto& parts = lambda.parts();
  auto h = complete_upto(parts[0] + len - 1, vars, m);
  auto entry = [&](int i, int j) -> Polynomial {
    int idx = parts[i] - i + j;
    return idx < 0 ? Polynomial(vars) : h[idx];
  };
  // Laplace expansion along rows, memoized on the set of unused columns.
  std::map<unsigned, Polynomial> memo;
  std::function<Polynomial(unsigned)> det = [&](unsigned cols) -> Polynomial {
    int row = len - std::popcount(cols);
    if (cols == 0) return Polynomial::constant(vars, Rational(1));
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Polynomial acc(vars);
    int position = 0;
    for (int j = 0; j < len; ++j) {
      if (!(cols >> j & 1u)) continue;
      Polynomial e = entry(row, j);
      if (!e.is_zero()) {
        Polynomial minor = det(cols & ~(1u << j)) * e;
        if (position % 2) acc -= minor; else acc += minor;
      }
      ++position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return det((1u << len) - 1);
}

namespace {

std::vector<std::size_t> identity_slots(const Polynomial& p) {
  std::vector<std::size_t> slots(p.vars()->size());
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  return slots;
}

}  // namespace

bool check_symmetric(const Polynomial& p) {
  auto z = p.vars()->residue_vars();
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    auto perm = identity_slots(p);
    std::swap(perm[z[i]], perm[z[i + 1]]);
    if (!(p.permuted(perm) == p)) return false;
  }
  return true;
}

Polynomial symmetrize(const Polynomial& p) {
  auto z = p.vars()->residue_vars();
  std::vector<std::size_t> order = z;
  Polynomial acc(p.vars());
  std::uint64_t count = 0;
  do {
    auto perm = identity_slots(p);
    for (std::size_t i = 0; i < z.size(); ++i) perm[z[i]] = order[i];
    acc += p.permuted(perm);
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return acc * (Rational(1) / Rational(static_cast<long>(count)));
}

}  // namespace equivloc
