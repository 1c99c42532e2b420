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
#include "equivloc/vartable.hpp"

#include <set>

#include "equivloc/error.hpp"

namespace equivloc {

VarTable::VarTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.size() > kMaxVars) {
    fail("variable table exceeds " + std::to_string(kMaxVars) + " variables");
  }
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.name.empty()) fail("empty variable name");
    if (!seen.insert(e.name).second) fail("duplicate variable '" + e.name + "'");
  }
}

VarTablePtr VarTable::standard(int n_torus, int n_residue) {
  std::vector<Entry> entries;
  for (int i = 1; i <= n_torus; ++i) {
    entries.push_back({"t" + std::to_string(i), VarClass::torus});
  }
  for (int i = 1; i <= n_residue; ++i) {
    entries.push_back({"z" + std::to_string(i), VarClass::residue});
  }
  return std::make_shared<const VarTable>(std::move(entries));
}

VarTablePtr VarTable::make(std::vector<Entry> entries) {
  return std::make_shared<const VarTable>(std::move(entries));
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VarTable::index(std::string_view name) const {
  auto i = find(name);
  if (!i) fail("unknown variable '" + std::string(name) + "'");
  return *i;
}

std::vector<std::size_t> VarTable::torus_vars() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!is_residue(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> VarTable::residue_vars() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (is_residue(i)) out.push_back(i);
  }
  return out;
}

bool operator==(const VarTable& a, const VarTable& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].name != b.entries_[i].name ||
        a.entries_[i].cls != b.entries_[i].cls) {
      return false;
    }
  }
  return true;
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace equivloc
