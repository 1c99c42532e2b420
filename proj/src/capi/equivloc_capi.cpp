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

#include "equivloc/equivloc.h"

#include <exception>
#include <new>
#include <optional>
#include <string>

#include "equivloc/class_parser.hpp"
#include "equivloc/error.hpp"
#include "equivloc/pushforward.hpp"
#include "equivloc/report.hpp"

struct eql_space {
  equivloc::SpaceDescriptor value;
  std::string name;
};

struct eql_poly {
  equivloc::Polynomial value;
  mutable std::optional<std::string> text;
  mutable std::optional<std::string> at_zero;
};

struct eql_config {
  equivloc::RunConfig value;
};

struct eql_result {
  equivloc::ResultDocument value;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_position = static_cast<std::size_t>(-1);

void set_error(std::string message, std::size_t position = static_cast<std::size_t>(-1)) {
  last_error = std::move(message);
  last_position = position;
}

// Runs body and maps exceptions to status codes.
template <class F>
eql_status guarded(F&& body) {
  set_error("");
  try {
    body();
    return EQL_OK;
  } catch (const equivloc::ParseError& e) {
    set_error(e.what(), e.position());
    return EQL_ERR_PARSE;
  } catch (const equivloc::Error& e) {
    set_error(e.what());
    switch (e.code()) {
      case equivloc::ErrorCode::parse: return EQL_ERR_PARSE;
      case equivloc::ErrorCode::consistency: return EQL_ERR_CONSISTENCY;
      case equivloc::ErrorCode::invalid_argument: return EQL_ERR_INVALID_ARGUMENT;
    }
    return EQL_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return EQL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return EQL_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return EQL_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) equivloc::fail(std::string(what) + " is null");
}

bool* flag_field(equivloc::RunConfig& c, std::string_view key) {
  if (key == "at_zero") return &c.at_zero;
  if (key == "symmetrize") return &c.symmetrize;
  if (key == "json") return &c.json;
  if (key == "parallel") return &c.parallel;
  if (key == "inject_disagreement") return &c.inject_disagreement;
  if (key == "timing") return &c.timing;
  return nullptr;
}

eql_result* make_result(equivloc::ResultDocument doc) {
  auto* r = new eql_result{std::move(doc), {}, {}};
  r->json = r->value.to_json();
  r->text = r->value.to_text();
  return r;
}

}  // namespace

extern "C" {

const char* eql_version(void) { return EQUIVLOC_VERSION; }

const char* eql_status_name(eql_status status) {
  switch (status) {
    case EQL_OK: return "ok";
    case EQL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EQL_ERR_PARSE: return "parse error";
    case EQL_ERR_CONSISTENCY: return "consistency error";
    case EQL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* eql_last_error(void) { return last_error.c_str(); }
size_t eql_last_error_position(void) { return last_position; }

eql_status eql_space_parse(const char* spec, eql_space** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    auto s = equivloc::SpaceDescriptor::parse(spec);
    std::string name = s.name();
    *out = new eql_space{std::move(s), std::move(name)};
  });
}

void eql_space_free(eql_space* space) { delete space; }
int eql_space_dimension(const eql_space* space) { return space ? space->value.dimension() : -1; }
const char* eql_space_name(const eql_space* space) { return space ? space->name.c_str() : ""; }

eql_status eql_poly_parse(const eql_space* space, const char* expr, eql_poly** out) {
  return guarded([&] {
    require(space, "space");
    require(expr, "expr");
    require(out, "out");
    *out = new eql_poly{equivloc::parse_class(expr, space->value.vars()), {}, {}};
  });
}

void eql_poly_free(eql_poly* poly) { delete poly; }

const char* eql_poly_text(const eql_poly* poly) {
  if (!poly) return "";
  if (!poly->text) poly->text = poly->value.to_string();
  return poly->text->c_str();
}

eql_status eql_poly_equal(const eql_poly* a, const eql_poly* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->value == b->value ? 1 : 0;
  });
}

eql_status eql_poly_at_zero(const eql_poly* poly, const char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    if (!poly->at_zero) poly->at_zero = equivloc::specialize_at_zero(poly->value).to_string();
    *out = poly->at_zero->c_str();
  });
}

eql_status eql_abbv(const eql_space* space, const eql_poly* v, int symmetrize, eql_poly** out) {
  return guarded([&] {
    require(space, "space");
    require(v, "v");
    require(out, "out");
    *out = new eql_poly{equivloc::abbv_pushforward(space->value, v->value, symmetrize != 0), {}, {}};
  });
}

eql_status eql_residue(const eql_space* space, const eql_poly* v, const char* form,
                       int symmetrize, eql_poly** out) {
  return guarded([&] {
    require(space, "space");
    require(v, "v");
    require(form, "form");
    require(out, "out");
    auto f = equivloc::parse_form(form);
    *out = new eql_poly{
        equivloc::residue_pushforward(space->value, v->value, f, symmetrize != 0), {}, {}};
  });
}

eql_status eql_config_new(const char* command, eql_config** out) {
  return guarded([&] {
    require(command, "command");
    require(out, "out");
    std::string c = command;
    if (c != "integrate" && c != "verify" && c != "dendrite") {
      equivloc::fail("unknown command '" + c + "'");
    }
    auto* cfg = new eql_config{};
    cfg->value.command = c;
    *out = cfg;
  });
}

void eql_config_free(eql_config* config) { delete config; }

eql_status eql_config_set_string(eql_config* config, const char* key, const char* value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    std::string_view k = key;
    auto& c = config->value;
    if (k == "space") {
      c.space = value;
    } else if (k == "class") {
      c.class_expr = value;
    } else if (k == "method") {
      c.method = equivloc::parse_method(value);
    } else if (k == "form") {
      if (std::string_view(value) == "all") {
        c.form.reset();
      } else {
        c.form = equivloc::parse_form(value);
      }
    } else {
      equivloc::fail("unknown string option '" + std::string(k) + "'");
    }
  });
}

eql_status eql_config_set_int(eql_config* config, const char* key, long long value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    std::string_view k = key;
    auto& c = config->value;
    auto small = [&] {
      if (value < 0 || value > 1000000) {
        equivloc::fail("option '" + std::string(k) + "' out of range");
      }
      return static_cast<int>(value);
    };
    if (k == "seed") {
      if (value < 0) equivloc::fail("seed must be nonnegative");
      c.seed = static_cast<std::uint64_t>(value);
    } else if (k == "trials") {
      c.trials = small();
    } else if (k == "max_degree") {
      c.max_degree = small();
    } else if (k == "k") {
      c.k = small();
    } else if (k == "n") {
      c.n = small();
    } else {
      equivloc::fail("unknown integer option '" + std::string(k) + "'");
    }
  });
}

eql_status eql_config_set_flag(eql_config* config, const char* key, int value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    bool* field = flag_field(config->value, key);
    if (!field) equivloc::fail("unknown flag '" + std::string(key) + "'");
    *field = value != 0;
  });
}

eql_status eql_run(const eql_config* config, eql_result** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = make_result(equivloc::run(config->value));
  });
}

eql_status eql_result_from_json(const char* json, eql_result** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = make_result(equivloc::ResultDocument::from_json(json));
  });
}

void eql_result_free(eql_result* result) { delete result; }
int eql_result_passed(const eql_result* result) { return result && result->value.passed(); }
const char* eql_result_json(const eql_result* result) { return result ? result->json.c_str() : ""; }
const char* eql_result_text(const eql_result* result) { return result ? result->text.c_str() : ""; }

eql_status eql_result_equal(const eql_result* a, const eql_result* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->value == b->value ? 1 : 0;
  });
}

}  // extern "C"
