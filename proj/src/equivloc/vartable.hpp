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
#ifndef EQUIVLOC_VARTABLE_HPP
#define EQUIVLOC_VARTABLE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace equivloc {

// Torus characters (t-class) are the coefficients of every push-forward;
// residue variables (z-class) are integrated out.
enum class VarClass { torus, residue };

inline constexpr std::size_t kMaxVars = 32;

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

class VarTable {
 public:
  struct Entry {
    std::string name;
    VarClass cls;
  };

  explicit VarTable(std::vector<Entry> entries);

  // t1..t<n_torus> followed by z1..z<n_residue>.
  static VarTablePtr standard(int n_torus, int n_residue);
  static VarTablePtr make(std::vector<Entry> entries);

  std::size_t size() const { return entries_.size(); }
  const std::string& name(std::size_t i) const { return entries_[i].name; }
  VarClass cls(std::size_t i) const { return entries_[i].cls; }
  bool is_residue(std::size_t i) const {
    return entries_[i].cls == VarClass::residue;
  }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if absent

  // Indices of one class, in table order.
  std::vector<std::size_t> torus_vars() const;
  std::vector<std::size_t> residue_vars() const;

  friend bool operator==(const VarTable& a, const VarTable& b);

 private:
  std::vector<Entry> entries_;
};

bool same_table(const VarTablePtr& a, const VarTablePtr& b);

}  // namespace equivloc

#endif  // EQUIVLOC_VARTABLE_HPP
