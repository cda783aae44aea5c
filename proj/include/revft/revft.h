/* Copyright 2026 The revft Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the revft library. Every call returns a revft_status; on
 * failure revft_last_error() describes the problem (per thread). Strings
 * returned through char** are owned by the caller and released with
 * revft_string_free. Handles are released with their *_free function. */

#ifndef REVFT_REVFT_H
#define REVFT_REVFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(REVFT_BUILDING_LIBRARY)
#define REVFT_API __declspec(dllexport)
#else
#define REVFT_API __declspec(dllimport)
#endif
#else
#define REVFT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum revft_status {
    REVFT_OK = 0,
    REVFT_ERR_INVALID_ARGUMENT = 1,
    REVFT_ERR_OUT_OF_RANGE = 2,
    REVFT_ERR_PARSE = 3,
    REVFT_ERR_IO = 4,
    REVFT_ERR_NOT_INVERTIBLE = 5,
    REVFT_ERR_NO_FINITE_LEVEL = 6,
    REVFT_ERR_INTERNAL = 7
} revft_status;

typedef struct revft_circuit revft_circuit;
typedef struct revft_cycle revft_cycle;

REVFT_API const char *revft_version(void);
REVFT_API const char *revft_last_error(void);
REVFT_API const char *revft_status_name(revft_status status);
REVFT_API void revft_string_free(char *s);

/* Circuits ---------------------------------------------------------------- */

REVFT_API revft_status revft_circuit_from_json(const char *json, revft_circuit **out);
REVFT_API revft_status revft_circuit_to_json(const revft_circuit *c, char **out_json);
REVFT_API void revft_circuit_free(revft_circuit *c);

REVFT_API revft_status revft_circuit_width(const revft_circuit *c, size_t *out);
REVFT_API revft_status revft_circuit_census_json(const revft_circuit *c, char **out_json);

/* bits_in/bits_out are '0'/'1' strings of the circuit width. */
REVFT_API revft_status revft_circuit_evaluate(const revft_circuit *c, const char *bits_in, char **bits_out);
REVFT_API revft_status revft_circuit_invert(const revft_circuit *c, revft_circuit **out);
REVFT_API revft_status revft_circuit_is_permutation(const revft_circuit *c, int *out);

/* topology: "nonlocal", "1d" or "2d:W:H" (row-major lattice). */
REVFT_API revft_status revft_circuit_locality_violations(const revft_circuit *c, const char *topology,
                                                         size_t *out_count);

/* Builders ---------------------------------------------------------------- */

/* layout: "nonlocal", "1d" or "2d". */
REVFT_API revft_status revft_build_recovery(const char *layout, revft_circuit **out);
REVFT_API revft_status revft_build_interleave_1d(revft_circuit **out);
REVFT_API revft_status revft_build_interleave_2d(int perpendicular, revft_circuit **out);

/* gate: a 3-bit kind name ("MAJ", ...); layout: "nonlocal", "2d", "1d" or
 * "mixed:K"; physical_init selects physical INIT3 lowering. */
REVFT_API revft_status revft_compile_cycle(const char *gate, int level, const char *layout, int physical_init,
                                           revft_cycle **out);
REVFT_API void revft_cycle_free(revft_cycle *cycle);
/* Circuit JSON plus a "metadata" object (level, layout, census, positions). */
REVFT_API revft_status revft_cycle_to_json(const revft_cycle *cycle, char **out_json);
REVFT_API revft_status revft_cycle_circuit(const revft_cycle *cycle, revft_circuit **out);
REVFT_API revft_status revft_cycle_locality_violations(const revft_cycle *cycle, size_t *out_count);

/* Verification ------------------------------------------------------------ */

REVFT_API revft_status revft_verify(const char *layout, char **report_json, int *passed);

/* Simulation -------------------------------------------------------------- */

typedef struct revft_sim_options {
    const char *layout;   /* as for revft_compile_cycle */
    int level;            /* >= 1 */
    double g_init;        /* negative: same as the gate rate */
    uint64_t trials;
    uint64_t seed;
    unsigned threads;     /* 0: REVFT_THREADS or hardware concurrency */
    const char *gate;     /* NULL: MAJ */
    int physical_init;
} revft_sim_options;

REVFT_API void revft_sim_options_init(revft_sim_options *opts);

/* One row; the report is a JSON object. */
REVFT_API revft_status revft_simulate(const revft_sim_options *opts, double g, char **report_json);

/* One row per g (ascending). as_json = 0 gives CSV with columns
 * g,level,layout,trials,failures,p_hat,ci95,seed. */
REVFT_API revft_status revft_sweep(const revft_sim_options *opts, const double *g_values, size_t count, int as_json,
                                   char **out);

/* Analysis ---------------------------------------------------------------- */

/* request: {"calc": "threshold" | "bound" | "level" | "blowup" | "mixed" |
 * "table2" | "entropy" | "landauer", ...parameters}. */
REVFT_API revft_status revft_analyze(const char *request_json, char **response_json);

#ifdef __cplusplus
}
#endif

#endif /* REVFT_REVFT_H */
