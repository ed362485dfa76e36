// Copyright 2026 The FCLA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the flexible cylindrical array library. All objects are
 * opaque handles owned by the caller and released with the matching
 * *_destroy function. Every call that can fail returns an fcla_status; the
 * message for the most recent failure on the calling thread is available
 * from fcla_last_error(). */

#ifndef FCLA_FCLA_H_
#define FCLA_FCLA_H_

#include <stddef.h>

#if defined(_WIN32)
#define FCLA_API __declspec(dllexport)
#else
#define FCLA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fcla_status {
  FCLA_OK = 0,
  FCLA_ERR_INVALID_ARGUMENT = 1,
  FCLA_ERR_INFEASIBLE_GRID = 2,
  FCLA_ERR_SINGULAR = 3,
  FCLA_ERR_CAP_EXCEEDED = 4,
  FCLA_ERR_IO = 5,
  FCLA_ERR_INTERNAL = 6,
  FCLA_ERR_VALIDATION_FAILED = 7
} fcla_status;

typedef struct fcla_experiment fcla_experiment;
typedef struct fcla_results fcla_results;

typedef struct fcla_result_row {
  const char* method;    /* "ucla", "fcla-j" or "fcla-a" */
  const char* sweep_var; /* "snr_db", "grid" or "iterations" */
  double sweep_value;
  double mean_sum_rate; /* bits per channel use */
  double std_error;
  int trials;
} fcla_result_row;

typedef struct fcla_solve_summary {
  double sum_rate;
  int iterations; /* greedy selections; 0 for ucla */
  int antennas;
} fcla_solve_summary;

typedef void (*fcla_suite_callback)(const char* name, int passed,
                                    const char* detail, void* user_data);

FCLA_API const char* fcla_version(void);
FCLA_API const char* fcla_last_error(void);
FCLA_API const char* fcla_status_string(fcla_status status);
FCLA_API void fcla_string_free(char* text);

/* Experiment description. A new experiment holds the defaults: 3 GHz,
 * M = N = 4, K = 16, L = 4, sigma^2 = 1, kappa = 1, G = 12, I = 5,
 * SNR 0 dB, all three methods. */
FCLA_API fcla_status fcla_experiment_create(fcla_experiment** out);
FCLA_API void fcla_experiment_destroy(fcla_experiment* experiment);
/* Overlays the keys of a JSON object (or of a run manifest's "experiment"
 * member). Unknown keys are rejected. */
FCLA_API fcla_status fcla_experiment_merge_json(fcla_experiment* experiment,
                                                const char* json);
FCLA_API fcla_status fcla_experiment_load_file(fcla_experiment* experiment,
                                               const char* path);
FCLA_API fcla_status fcla_experiment_to_json(const fcla_experiment* experiment,
                                             char** out_json);
FCLA_API fcla_status fcla_experiment_validate(
    const fcla_experiment* experiment);
FCLA_API fcla_status fcla_experiment_write_manifest(
    const fcla_experiment* experiment, const char* path);

/* Monte Carlo sweep. Per-trial failures are recorded, not fatal. */
FCLA_API fcla_status fcla_run_sweep(const fcla_experiment* experiment,
                                    fcla_results** out);
FCLA_API void fcla_results_destroy(fcla_results* results);
FCLA_API size_t fcla_results_row_count(const fcla_results* results);
FCLA_API fcla_status fcla_results_row(const fcla_results* results,
                                      size_t index, fcla_result_row* out);
FCLA_API size_t fcla_results_failure_count(const fcla_results* results);
FCLA_API const char* fcla_results_failure_message(const fcla_results* results,
                                                  size_t index);
FCLA_API fcla_status fcla_results_write_csv(const fcla_results* results,
                                            const char* path);

/* Runs trial 0 of the first sweep point with one method and writes
 * paths.json, placement_<method>.csv and, for the greedy solvers,
 * trace_<method>.csv into out_dir (which must exist). fcla-a also writes
 * convergence_fcla-a.csv with one sum rate per outer iteration. */
FCLA_API fcla_status fcla_solve_once(const fcla_experiment* experiment,
                                     const char* method, const char* out_dir,
                                     fcla_solve_summary* out);

/* Runs the built-in numerical self-checks, reporting each through
 * `callback` (may be NULL). Returns FCLA_ERR_VALIDATION_FAILED if any
 * suite fails. */
FCLA_API fcla_status fcla_validate(fcla_suite_callback callback,
                                   void* user_data);

#ifdef __cplusplus
}
#endif

#endif /* FCLA_FCLA_H_ */
