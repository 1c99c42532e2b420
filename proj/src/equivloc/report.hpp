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

#ifndef EQUIVLOC_REPORT_HPP
#define EQUIVLOC_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equivloc/polynomial.hpp"
#include "equivloc/pushforward.hpp"

namespace equivloc {

enum class Method { abbv, residue, both };

std::string_view method_name(Method m);
Method parse_method(std::string_view text);

struct RunConfig {
  std::string command = "integrate";  // integrate | verify | dendrite
  std::string space;
  std::string class_expr;
  Method method = Method::both;
  std::optional<Form> form;  // empty: every form
  bool at_zero = false;
  bool symmetrize = false;
  bool json = false;
  std::uint64_t seed = 1;
  int trials = 10;
  std::optional<int> max_degree;  // empty: dim + 4
  bool parallel = false;
  int k = 0;  // dendrite only
  int n = 0;
  bool inject_disagreement = false;
  bool timing = false;

  void validate() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct TermRecord {
  std::string coefficient;  // "p" or "p/q", lowest terms
  std::map<std::string, int> monomial;
  friend bool operator==(const TermRecord&, const TermRecord&) = default;
};

std::vector<TermRecord> term_records(const Polynomial& p);

struct MethodRecord {
  std::string method;
  std::optional<std::vector<TermRecord>> result;
  bool agrees = false;
  std::string error;
  friend bool operator==(const MethodRecord&, const MethodRecord&) = default;
};

struct TrialRecord {
  int index = 0;
  std::string class_expr;
  bool passed = false;
  std::vector<MethodRecord> methods;  // filled only for failed trials
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct RayRecord {
  std::vector<std::string> start;
  std::vector<std::string> direction;
  bool reversed = false;
  int wall = 0;  // 1-based coordinate index
  std::vector<std::string> hit;
  friend bool operator==(const RayRecord&, const RayRecord&) = default;
};

struct BranchRecord {
  std::vector<RayRecord> rays;
  std::vector<std::string> terminal;
  friend bool operator==(const BranchRecord&, const BranchRecord&) = default;
};

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct ResultDocument {
  std::string command;
  RunConfig config;
  std::string space_name;
  std::optional<std::vector<TermRecord>> result;
  std::optional<std::string> at_zero;
  std::vector<MethodRecord> methods;
  std::optional<bool> agreement;
  // verify
  int trials_run = 0;
  int trials_passed = 0;
  std::vector<TrialRecord> trials;
  // dendrite
  std::vector<BranchRecord> branches;
  std::string formula;
  std::vector<CheckRecord> checks;
  std::optional<double> timing_ms;

  // True iff every requested check passed.
  bool passed() const;
  std::string to_json() const;  // two-space indented, trailing newline
  static ResultDocument from_json(const std::string& text);
  std::string to_text() const;
  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

// Usage problems (bad spaces, parse errors, non-symmetric classes) throw;
// evaluator disagreement is reported in the document.
ResultDocument run_integrate(const RunConfig& config);
ResultDocument run_verify(const RunConfig& config);
ResultDocument run_dendrite(const RunConfig& config);
ResultDocument run(const RunConfig& config);

}  // namespace equivloc

#endif  // EQUIVLOC_REPORT_HPP
