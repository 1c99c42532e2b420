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

/* C interface to the equivloc engine.
 *
 * Objects are opaque handles created by the *_parse / *_new / eql_run
 * functions and released with the matching *_free.  Every fallible call
 * returns an eql_status; on failure eql_last_error() describes the problem
 * for the calling thread.  Strings returned by accessors are owned by the
 * handle and stay valid until it is freed. */

#ifndef EQUIVLOC_EQUIVLOC_H
#define EQUIVLOC_EQUIVLOC_H

#include <stddef.h>

#if defined(EQUIVLOC_BUILDING_LIBRARY)
#define EQUIVLOC_API __attribute__((visibility("default")))
#else
#define EQUIVLOC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct eql_space eql_space;
typedef struct eql_poly eql_poly;
typedef struct eql_config eql_config;
typedef struct eql_result eql_result;

typedef enum eql_status {
  EQL_OK = 0,
  EQL_ERR_INVALID_ARGUMENT = 1,
  EQL_ERR_PARSE = 2,
  EQL_ERR_CONSISTENCY = 3,
  EQL_ERR_INTERNAL = 4
} eql_status;

EQUIVLOC_API const char* eql_version(void);
EQUIVLOC_API const char* eql_status_name(eql_status status);
EQUIVLOC_API const char* eql_last_error(void);
/* Byte offset of the last parse error, or (size_t)-1. */
EQUIVLOC_API size_t eql_last_error_position(void);

/* Spaces: "grass:m,n", "lg:n", "og-:n", "og+:n", "root:<A|B|C|D>:<n>[:m]". */
EQUIVLOC_API eql_status eql_space_parse(const char* spec, eql_space** out);
EQUIVLOC_API void eql_space_free(eql_space* space);
EQUIVLOC_API int eql_space_dimension(const eql_space* space);
EQUIVLOC_API const char* eql_space_name(const eql_space* space);

/* Classes are polynomials in the space's variables t1..tn, z1..; the
 * builtins s[..], e[k], h[k], p[k] expand over the residue variables. */
EQUIVLOC_API eql_status eql_poly_parse(const eql_space* space, const char* expr, eql_poly** out);
EQUIVLOC_API void eql_poly_free(eql_poly* poly);
EQUIVLOC_API const char* eql_poly_text(const eql_poly* poly);
EQUIVLOC_API eql_status eql_poly_equal(const eql_poly* a, const eql_poly* b, int* out);
/* Constant term of a polynomial in torus variables, as "p" or "p/q". */
EQUIVLOC_API eql_status eql_poly_at_zero(const eql_poly* poly, const char** out);

EQUIVLOC_API eql_status eql_abbv(const eql_space* space, const eql_poly* v, int symmetrize,
                                 eql_poly** out);
/* form is "first", "rewritten" or "unified". */
EQUIVLOC_API eql_status eql_residue(const eql_space* space, const eql_poly* v, const char* form,
                                    int symmetrize, eql_poly** out);

/* Run configuration for the integrate / verify / dendrite commands.
 * String keys: space, class, method, form.
 * Integer keys: seed, trials, max_degree, k, n.
 * Flag keys: at_zero, symmetrize, json, parallel, inject_disagreement, timing. */
EQUIVLOC_API eql_status eql_config_new(const char* command, eql_config** out);
EQUIVLOC_API void eql_config_free(eql_config* config);
EQUIVLOC_API eql_status eql_config_set_string(eql_config* config, const char* key,
                                              const char* value);
EQUIVLOC_API eql_status eql_config_set_int(eql_config* config, const char* key,
                                           long long value);
EQUIVLOC_API eql_status eql_config_set_flag(eql_config* config, const char* key, int value);

EQUIVLOC_API eql_status eql_run(const eql_config* config, eql_result** out);
EQUIVLOC_API eql_status eql_result_from_json(const char* json, eql_result** out);
EQUIVLOC_API void eql_result_free(eql_result* result);
/* 1 when every requested check passed. */
EQUIVLOC_API int eql_result_passed(const eql_result* result);
EQUIVLOC_API const char* eql_result_json(const eql_result* result);
EQUIVLOC_API const char* eql_result_text(const eql_result* result);
EQUIVLOC_API eql_status eql_result_equal(const eql_result* a, const eql_result* b, int* out);

#ifdef __cplusplus
}
#endif

#endif /* EQUIVLOC_EQUIVLOC_H */
