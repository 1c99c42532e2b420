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

// Command-line front end.  Talks to the engine only through the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "equivloc/equivloc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string space;
  std::string class_expr;
  std::string method = "both";
  std::string form = "all";
  bool at_zero = false;
  bool symmetrize = false;
  bool json = false;
  long long seed = 1;
  int trials = 10;
  int max_degree = -1;
  bool parallel = false;
  int k = 0;
  int n = 0;
  bool inject_disagreement = false;
  bool timing = false;
};

using ConfigPtr = std::unique_ptr<eql_config, decltype(&eql_config_free)>;
using ResultPtr = std::unique_ptr<eql_result, decltype(&eql_result_free)>;

int report_error(eql_status status, const Options& opts) {
  std::cerr << "equivloc: " << eql_status_name(status) << ": " << eql_last_error() << "\n";
  std::size_t pos = eql_last_error_position();
  if (status == EQL_ERR_PARSE && pos != static_cast<std::size_t>(-1) &&
      pos <= opts.class_expr.size()) {
    std::cerr << "  " << opts.class_expr << "\n  " << std::string(pos, ' ') << "^\n";
  }
  return status == EQL_ERR_PARSE || status == EQL_ERR_INVALID_ARGUMENT ? kExitUsage
                                                                        : kExitFailed;
}

int execute(const std::string& command, const Options& opts) {
  eql_config* raw = nullptr;
  if (auto s = eql_config_new(command.c_str(), &raw); s != EQL_OK) return report_error(s, opts);
  ConfigPtr config(raw, eql_config_free);

  eql_status s = EQL_OK;
  auto set_str = [&](const char* key, const std::string& value) {
    if (s == EQL_OK) s = eql_config_set_string(config.get(), key, value.c_str());
  };
  auto set_int = [&](const char* key, long long value) {
    if (s == EQL_OK) s = eql_config_set_int(config.get(), key, value);
  };
  auto set_flag = [&](const char* key, bool value) {
    if (s == EQL_OK) s = eql_config_set_flag(config.get(), key, value ? 1 : 0);
  };
  set_str("space", opts.space);
  set_str("class", opts.class_expr);
  set_str("method", opts.method);
  set_str("form", opts.form);
  set_int("seed", opts.seed);
  set_int("trials", opts.trials);
  if (opts.max_degree >= 0) set_int("max_degree", opts.max_degree);
  set_int("k", opts.k);
  set_int("n", opts.n);
  set_flag("at_zero", opts.at_zero);
  set_flag("symmetrize", opts.symmetrize);
  set_flag("json", opts.json);
  set_flag("parallel", opts.parallel);
  set_flag("inject_disagreement", opts.inject_disagreement);
  set_flag("timing", opts.timing);
  if (s != EQL_OK) return report_error(s, opts);

  eql_result* result_raw = nullptr;
  if (s = eql_run(config.get(), &result_raw); s != EQL_OK) return report_error(s, opts);
  ResultPtr result(result_raw, eql_result_free);
  std::fputs(opts.json ? eql_result_json(result.get()) : eql_result_text(result.get()), stdout);
  return eql_result_passed(result.get()) ? kExitOk : kExitFailed;
}

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--seed", opts.seed, "random seed")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--json", opts.json, "print the result document as JSON");
  cmd->add_flag("--timing", opts.timing, "include wall-clock time in the output");
  cmd->add_flag("--symmetrize", opts.symmetrize, "average a non-symmetric class over S_m");
  cmd->add_flag("--inject-disagreement", opts.inject_disagreement)->group("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact torus-equivariant integration over Grassmannians"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eql_version()));
  Options opts;

  auto* integrate = app.add_subcommand("integrate", "push a class forward to a point");
  integrate->add_option("--space", opts.space, "grass:m,n | lg:n | og-:n | og+:n | root:X:n[:m]")
      ->required();
  integrate->add_option("--class", opts.class_expr, "class expression, e.g. \"s[2,1]*e[1]\"")
      ->required();
  integrate->add_option("--method", opts.method, "abbv | residue | both")
      ->check(CLI::IsMember({"abbv", "residue", "both"}));
  integrate->add_option("--form", opts.form, "first | rewritten | unified | all")
      ->check(CLI::IsMember({"first", "rewritten", "unified", "all"}));
  integrate->add_flag("--at-zero", opts.at_zero, "also report the value at t = 0");
  add_common(integrate, opts);

  auto* verify = app.add_subcommand("verify", "compare evaluators on random symmetric classes");
  verify->add_option("--space", opts.space, "space specification")->required();
  verify->add_option("--trials", opts.trials, "number of random classes")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-degree", opts.max_degree, "maximum class degree (default dim+4)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--form", opts.form, "first | rewritten | unified | all")
      ->check(CLI::IsMember({"first", "rewritten", "unified", "all"}));
  verify->add_flag("--parallel", opts.parallel, "run trials on several threads");
  add_common(verify, opts);

  auto* dendrite = app.add_subcommand("dendrite", "walk the orthant dendrite for Hom(C^k, C^n)");
  dendrite->add_option("--k", opts.k, "rank of the subspace")->required();
  dendrite->add_option("--n", opts.n, "dimension of the ambient space")->required();
  dendrite->add_option("--class", opts.class_expr, "class to integrate (default e[1]^dim)");
  dendrite->add_flag("--at-zero", opts.at_zero, "also report the value at t = 0");
  add_common(dendrite, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (dendrite->parsed() && (opts.k < 1 || opts.n < opts.k)) {
    std::cerr << "equivloc: dendrite needs 1 <= k <= n\n";
    return kExitUsage;
  }
  std::string command = integrate->parsed() ? "integrate" : verify->parsed() ? "verify" : "dendrite";
  return execute(command, opts);
}
