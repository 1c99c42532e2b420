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

#include "equivloc/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "equivloc/class_parser.hpp"
#include "equivloc/error.hpp"
#include "equivloc/jkgk.hpp"
#include "equivloc/random_class.hpp"
#include "equivloc/symfunc.hpp"

namespace equivloc {

using Json = nlohmann::ordered_json;

std::string_view method_name(Method m) {
  switch (m) {
    case Method::abbv: return "abbv";
    case Method::residue: return "residue";
    case Method::both: return "both";
  }
  return "both";
}

Method parse_method(std::string_view text) {
  if (text == "abbv") return Method::abbv;
  if (text == "residue") return Method::residue;
  if (text == "both") return Method::both;
  fail("unknown method '" + std::string(text) + "'");
}

void RunConfig::validate() const {
  if (command != "integrate" && command != "verify" && command != "dendrite") {
    fail("unknown command '" + command + "'");
  }
  if (trials < 1) fail("trials must be at least 1");
  if (max_degree && *max_degree < 0) fail("max-degree must be nonnegative");
  if (command == "dendrite" && (k < 1 || n < k)) fail("dendrite needs 1 <= k <= n");
  if (command != "dendrite" && space.empty()) fail("missing --space");
  if (command == "integrate" && class_expr.empty()) fail("missing --class");
}

std::vector<TermRecord> term_records(const Polynomial& p) {
  std::vector<TermRecord> out;
  const auto& vars = *p.vars();
  for (const auto& t : p.terms()) {
    TermRecord r{t.coef.to_string(), {}};
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.mono[i]) r.monomial[vars.name(i)] = t.mono[i];
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// ---- JSON ----

Json terms_json(const std::vector<TermRecord>& terms) {
  Json a = Json::array();
  for (const auto& t : terms) {
    Json mono = Json::object();
    for (const auto& [v, e] : t.monomial) mono[v] = e;
    a.push_back({{"coefficient", t.coefficient}, {"monomial", mono}});
  }
  return a;
}

std::vector<TermRecord> terms_from(const Json& a) {
  std::vector<TermRecord> out;
  for (const auto& t : a) {
    TermRecord r{t.at("coefficient").get<std::string>(), {}};
    for (const auto& [v, e] : t.at("monomial").items()) r.monomial[v] = e.get<int>();
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> opt_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Json config_json(const RunConfig& c) {
  return {{"command", c.command},
          {"space", c.space},
          {"class", c.class_expr},
          {"method", std::string(method_name(c.method))},
          {"form", c.form ? Json(std::string(form_name(*c.form))) : Json(nullptr)},
          {"at_zero", c.at_zero},
          {"symmetrize", c.symmetrize},
          {"json", c.json},
          {"seed", c.seed},
          {"trials", c.trials},
          {"max_degree", opt(c.max_degree)},
          {"parallel", c.parallel},
          {"k", c.k},
          {"n", c.n},
          {"inject_disagreement", c.inject_disagreement},
          {"timing", c.timing}};
}

RunConfig config_from(const Json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.space = j.at("space").get<std::string>();
  c.class_expr = j.at("class").get<std::string>();
  c.method = parse_method(j.at("method").get<std::string>());
  if (auto f = opt_from<std::string>(j, "form")) c.form = parse_form(*f);
  c.at_zero = j.at("at_zero").get<bool>();
  c.symmetrize = j.at("symmetrize").get<bool>();
  c.json = j.at("json").get<bool>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.trials = j.at("trials").get<int>();
  c.max_degree = opt_from<int>(j, "max_degree");
  c.parallel = j.at("parallel").get<bool>();
  c.k = j.at("k").get<int>();
  c.n = j.at("n").get<int>();
  c.inject_disagreement = j.at("inject_disagreement").get<bool>();
  c.timing = j.at("timing").get<bool>();
  return c;
}

Json methods_json(const std::vector<MethodRecord>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) {
    a.push_back({{"method", m.method},
                 {"result", m.result ? terms_json(*m.result) : Json(nullptr)},
                 {"agrees", m.agrees},
                 {"error", m.error}});
  }
  return a;
}

std::vector<MethodRecord> methods_from(const Json& a) {
  std::vector<MethodRecord> out;
  for (const auto& m : a) {
    MethodRecord r;
    r.method = m.at("method").get<std::string>();
    if (!m.at("result").is_null()) r.result = terms_from(m.at("result"));
    r.agrees = m.at("agrees").get<bool>();
    r.error = m.at("error").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

// ---- helpers ----

std::vector<Form> requested_forms(const RunConfig& c) {
  if (c.form) return {*c.form};
  return {std::begin(kAllForms), std::end(kAllForms)};
}

MethodRecord method_record(const AgreementEntry& e) {
  MethodRecord r{e.method, std::nullopt, e.agrees, e.error};
  if (e.value) r.result = term_records(*e.value);
  return r;
}

std::vector<std::string> point_strings(const Point& p) {
  std::vector<std::string> out;
  for (const auto& x : p) out.push_back(x.to_string());
  return out;
}

std::string terms_text(const std::vector<TermRecord>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string c = terms[i].coefficient;
    bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono;
    for (const auto& [v, e] : terms[i].monomial) {
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += c;
    } else {
      s += (c == "1" ? "" : c + "*") + mono;
    }
  }
  return s;
}

std::string tuple_text(const std::vector<std::string>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out + ")";
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

// ---- ResultDocument ----

bool ResultDocument::passed() const {
  for (const auto& m : methods) {
    if (!m.error.empty() && !m.agrees) return false;
  }
  if (agreement && !*agreement) return false;
  if (command == "verify" && trials_passed != trials_run) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string ResultDocument::to_json() const {
  Json j;
  j["command"] = command;
  j["config"] = config_json(config);
  j["space_name"] = space_name;
  j["result"] = result ? terms_json(*result) : Json(nullptr);
  j["at_zero"] = opt(at_zero);
  j["methods"] = methods_json(methods);
  j["agreement"] = opt(agreement);
  j["trials_run"] = trials_run;
  j["trials_passed"] = trials_passed;
  Json tr = Json::array();
  for (const auto& t : trials) {
    tr.push_back({{"index", t.index},
                  {"class", t.class_expr},
                  {"passed", t.passed},
                  {"methods", methods_json(t.methods)}});
  }
  j["trials"] = tr;
  Json br = Json::array();
  for (const auto& b : branches) {
    Json rays = Json::array();
    for (const auto& r : b.rays) {
      rays.push_back({{"start", r.start},
                      {"direction", r.direction},
                      {"reversed", r.reversed},
                      {"wall", r.wall},
                      {"hit", r.hit}});
    }
    br.push_back({{"rays", rays}, {"terminal", b.terminal}});
  }
  j["branches"] = br;
  j["formula"] = formula;
  Json ch = Json::array();
  for (const auto& c : checks) {
    ch.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = ch;
  j["passed"] = passed();
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j.dump(2) + "\n";
}

ResultDocument ResultDocument::from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON: " + std::string(e.what()), e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    ResultDocument d;
    d.command = j.at("command").get<std::string>();
    d.config = config_from(j.at("config"));
    d.space_name = j.at("space_name").get<std::string>();
    if (!j.at("result").is_null()) d.result = terms_from(j.at("result"));
    d.at_zero = opt_from<std::string>(j, "at_zero");
    d.methods = methods_from(j.at("methods"));
    d.agreement = opt_from<bool>(j, "agreement");
    d.trials_run = j.at("trials_run").get<int>();
    d.trials_passed = j.at("trials_passed").get<int>();
    for (const auto& t : j.at("trials")) {
      d.trials.push_back({t.at("index").get<int>(), t.at("class").get<std::string>(),
                          t.at("passed").get<bool>(), methods_from(t.at("methods"))});
    }
    for (const auto& b : j.at("branches")) {
      BranchRecord rec;
      for (const auto& r : b.at("rays")) {
        rec.rays.push_back({r.at("start").get<std::vector<std::string>>(),
                            r.at("direction").get<std::vector<std::string>>(),
                            r.at("reversed").get<bool>(), r.at("wall").get<int>(),
                            r.at("hit").get<std::vector<std::string>>()});
      }
      rec.terminal = b.at("terminal").get<std::vector<std::string>>();
      d.branches.push_back(std::move(rec));
    }
    d.formula = j.at("formula").get<std::string>();
    for (const auto& c : j.at("checks")) {
      d.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                          c.at("detail").get<std::string>()});
    }
    d.timing_ms = opt_from<double>(j, "timing_ms");
    return d;
  } catch (const Json::exception& e) {
    fail("malformed result document: " + std::string(e.what()));
  }
}

std::string ResultDocument::to_text() const {
  std::ostringstream os;
  if (!space_name.empty()) os << "space: " << space_name << "\n";
  if (command == "integrate") {
    os << "class: " << config.class_expr << "\n";
    for (const auto& m : methods) {
      os << m.method << ": " << (m.result ? terms_text(*m.result) : "-");
      if (!m.error.empty()) os << "  [" << m.error << "]";
      os << "\n";
    }
    if (result) os << "result: " << terms_text(*result) << "\n";
    if (at_zero) os << "at zero: " << *at_zero << "\n";
    if (agreement) os << "agreement: " << (*agreement ? "true" : "false") << "\n";
  } else if (command == "verify") {
    os << "passed " << trials_passed << "/" << trials_run << " trials\n";
    for (const auto& t : trials) {
      if (t.passed) continue;
      os << "FAIL trial " << t.index << ": " << t.class_expr << "\n";
      for (const auto& m : t.methods) {
        os << "  " << m.method << ": " << (m.result ? terms_text(*m.result) : "-");
        if (!m.error.empty()) os << "  [" << m.error << "]";
        os << "\n";
      }
    }
  } else {
    for (std::size_t b = 0; b < branches.size(); ++b) {
      os << "branch " << b + 1 << ":\n";
      for (std::size_t s = 0; s < branches[b].rays.size(); ++s) {
        const auto& r = branches[b].rays[s];
        os << "  ray " << s + 1 << " along " << tuple_text(r.direction)
           << (r.reversed ? " (reversed)" : "") << " crosses x" << r.wall << " = 0 at "
           << tuple_text(r.hit) << "\n";
      }
      os << "  terminal point: " << tuple_text(branches[b].terminal) << "\n";
    }
    os << "formula: " << formula << "\n";
    if (result) os << "result: " << terms_text(*result) << "\n";
    if (at_zero) os << "at zero: " << *at_zero << "\n";
    for (const auto& c : checks) {
      os << (c.passed ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
  }
  if (timing_ms) os << "time: " << *timing_ms << " ms\n";
  return os.str();
}

// ---- commands ----

ResultDocument run_integrate(const RunConfig& config) {
  config.validate();
  Stopwatch clock;
  auto space = SpaceDescriptor::parse(config.space);
  Polynomial v = prepare_class(space, parse_class(config.class_expr, space.vars()),
                               config.symmetrize);
  ResultDocument doc;
  doc.command = "integrate";
  doc.config = config;
  doc.space_name = space.name();

  const auto forms = requested_forms(config);
  std::optional<Polynomial> value;
  if (config.method == Method::both) {
    VerifyOptions opts;
    opts.seed = config.seed;
    opts.inject_disagreement = config.inject_disagreement;
    auto report = verify_agreement(space, v, forms, opts);
    for (const auto& e : report.entries) doc.methods.push_back(method_record(e));
    doc.agreement = report.all_agree();
    if (report.entries.front().value) value = report.entries.front().value;
  } else if (config.method == Method::abbv) {
    value = abbv_pushforward(space, v);
    doc.methods.push_back({"abbv", term_records(*value), true, {}});
  } else {
    bool agree = true;
    for (Form f : forms) {
      Polynomial r = residue_pushforward(space, v, f);
      if (config.inject_disagreement) r += Polynomial::constant(space.vars(), Rational(1));
      if (!value) value = r;
      agree = agree && r == *value;
      doc.methods.push_back({"residue:" + std::string(form_name(f)), term_records(r), true, {}});
    }
    if (forms.size() > 1) {
      doc.agreement = agree;
      for (auto& m : doc.methods) m.agrees = agree;
    }
  }
  if (value) {
    doc.result = term_records(*value);
    if (config.at_zero) doc.at_zero = specialize_at_zero(*value).to_string();
  }
  if (config.timing) doc.timing_ms = clock.ms();
  return doc;
}

ResultDocument run_verify(const RunConfig& config) {
  config.validate();
  Stopwatch clock;
  auto space = SpaceDescriptor::parse(config.space);
  ResultDocument doc;
  doc.command = "verify";
  doc.config = config;
  doc.space_name = space.name();

  const int dim = space.dimension();
  RandomClassOptions opts;
  opts.max_degree = config.max_degree.value_or(dim + 4);
  opts.min_degree = std::max(0, std::min(dim - 2, opts.max_degree));

  // Classes are drawn sequentially so the campaign depends only on the seed.
  std::mt19937_64 rng(config.seed);
  std::vector<Polynomial> classes;
  for (int i = 0; i < config.trials; ++i) {
    classes.push_back(random_symmetric_class(space.vars(), space.residue_count(), opts, rng));
  }

  const auto forms = requested_forms(config);
  std::vector<AgreementReport> reports(classes.size());
  auto work = [&](std::size_t i) {
    VerifyOptions vo;
    vo.seed = config.seed + i;
    vo.inject_disagreement = config.inject_disagreement;
    reports[i] = verify_agreement(space, classes[i], forms, vo);
  };
  if (config.parallel && classes.size() > 1) {
    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(classes.size())));
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < classes.size(); i = next++) work(i);
      });
    }
  } else {
    for (std::size_t i = 0; i < classes.size(); ++i) work(i);
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    TrialRecord t{static_cast<int>(i + 1), classes[i].to_string(), reports[i].all_agree(), {}};
    if (!t.passed) {
      for (const auto& e : reports[i].entries) t.methods.push_back(method_record(e));
    }
    doc.trials_passed += t.passed;
    doc.trials.push_back(std::move(t));
  }
  doc.trials_run = config.trials;
  doc.agreement = doc.trials_passed == doc.trials_run;
  if (config.timing) doc.timing_ms = clock.ms();
  return doc;
}

ResultDocument run_dendrite(const RunConfig& config) {
  config.validate();
  Stopwatch clock;
  const int k = config.k, n = config.n;
  auto space = SpaceDescriptor::grass(k, n);
  Polynomial v = config.class_expr.empty()
                     ? elementary(1, space.vars(), k).pow(static_cast<unsigned>(space.dimension()))
                     : prepare_class(space, parse_class(config.class_expr, space.vars()),
                                     config.symmetrize);
  ResultDocument doc;
  doc.command = "dendrite";
  doc.config = config;
  doc.space_name = space.name();

  auto assembled = assemble_grassmannian_integrand(k, n, v, config.seed);
  for (const auto& b : assembled.dendrite.branches) {
    BranchRecord rec;
    for (const auto& r : b.rays) {
      rec.rays.push_back({point_strings(r.start), point_strings(r.direction), r.reversed,
                          static_cast<int>(r.wall) + 1, point_strings(r.hit)});
    }
    rec.terminal = point_strings(b.terminal);
    doc.branches.push_back(std::move(rec));
  }

  std::string res;
  for (std::size_t slot : assembled.order) res += "Res_{" + space.vars()->name(slot) + "=inf} ";
  doc.formula = "(" + assembled.prefactor.to_string() + ") " + res + "[" +
                assembled.integrand.to_string() + "]";

  Polynomial value =
      iterated_residue(assembled.integrand, assembled.order).to_polynomial() * assembled.prefactor;
  if (config.inject_disagreement) value += Polynomial::constant(space.vars(), Rational(1));
  doc.result = term_records(value);
  if (config.at_zero) doc.at_zero = specialize_at_zero(value).to_string();

  const auto& branches = assembled.dendrite.branches;
  bool single = branches.size() == 1 && assembled.dendrite.image.is_vertex(branches[0].terminal);
  doc.checks.push_back({"single terminal fixed point at the origin", single,
                        std::to_string(branches.size()) + " branch(es)"});

  auto rewritten = build_integrand(space, v, Form::rewritten);
  bool same = rewritten.function.equivalent(assembled.integrand) &&
              rewritten.prefactor == assembled.prefactor;
  doc.checks.push_back({"integrand matches the rewritten Grassmannian form", same, ""});

  Polynomial residue = residue_pushforward(space, v, Form::rewritten);
  doc.checks.push_back({"agrees with the residue evaluator", value == residue,
                        value == residue ? "" : "residue evaluator gives " + residue.to_string()});
  Polynomial abbv = abbv_pushforward(space, v);
  doc.checks.push_back({"agrees with the fixed-point sum", value == abbv,
                        value == abbv ? "" : "fixed-point sum gives " + abbv.to_string()});
  if (config.timing) doc.timing_ms = clock.ms();
  return doc;
}

ResultDocument run(const RunConfig& config) {
  if (config.command == "verify") return run_verify(config);
  if (config.command == "dendrite") return run_dendrite(config);
  return run_integrate(config);
}

}  // namespace equivloc
