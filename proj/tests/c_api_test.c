/*
 * Copyright 2026 The FCLA Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Exercises the C interface from a C translation unit. Usage:
 * fcla_c_api_test <scratch-dir> */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "fcla/fcla.h"

static int failures = 0;

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: check failed: %s (%s)\n", __FILE__, \
              __LINE__, #cond, fcla_last_error());               \
      ++failures;                                                \
    }                                                            \
  } while (0)

static int suites_seen = 0;

static void on_suite(const char* name, int passed, const char* detail,
                     void* user_data) {
  (void)detail;
  (void)user_data;
  printf("suite %s %s\n", name, passed ? "ok" : "failed");
  ++suites_seen;
}

static int file_exists(const char* dir, const char* name) {
  char path[1024];
  snprintf(path, sizeof path, "%s/%s", dir, name);
  FILE* f = fopen(path, "r");
  if (f == NULL) return 0;
  fclose(f);
  return 1;
}

int main(int argc, char** argv) {
  if (argc < 2) {
    fprintf(stderr, "usage: %s <scratch-dir>\n", argv[0]);
    return 2;
  }
  const char* dir = argv[1];
  char path[1024];

  CHECK(strlen(fcla_version()) > 0);
  CHECK(strcmp(fcla_status_string(FCLA_OK), "ok") == 0);
  CHECK(fcla_experiment_create(NULL) == FCLA_ERR_INVALID_ARGUMENT);

  fcla_experiment* exp = NULL;
  CHECK(fcla_experiment_create(&exp) == FCLA_OK);
  CHECK(fcla_experiment_merge_json(
            exp,
            "{\"rings\": 2, \"per_ring\": 2, \"users\": 3, \"paths\": 2,"
            " \"grid\": 4, \"iterations\": 2, \"trials\": 4,"
            " \"sweep_values\": [0, 6], \"seed\": 5}") == FCLA_OK);
  CHECK(fcla_experiment_validate(exp) == FCLA_OK);

  /* Errors keep the handle usable and set a message. */
  CHECK(fcla_experiment_merge_json(exp, "{\"bogus\": 1}") ==
        FCLA_ERR_INVALID_ARGUMENT);
  CHECK(strstr(fcla_last_error(), "bogus") != NULL);
  CHECK(fcla_experiment_merge_json(exp, "{\"rings\": 5}") == FCLA_OK);
  CHECK(fcla_experiment_validate(exp) == FCLA_ERR_INFEASIBLE_GRID);
  CHECK(fcla_experiment_merge_json(exp, "{\"rings\": 2}") == FCLA_OK);

  char* json = NULL;
  CHECK(fcla_experiment_to_json(exp, &json) == FCLA_OK);
  CHECK(json != NULL && strstr(json, "\"users\": 3") != NULL);
  fcla_string_free(json);

  snprintf(path, sizeof path, "%s/manifest.json", dir);
  CHECK(fcla_experiment_write_manifest(exp, path) == FCLA_OK);
  fcla_experiment* again = NULL;
  CHECK(fcla_experiment_create(&again) == FCLA_OK);
  CHECK(fcla_experiment_load_file(again, path) == FCLA_OK);

  fcla_results* results = NULL;
  CHECK(fcla_run_sweep(exp, &results) == FCLA_OK);
  CHECK(fcla_results_row_count(results) == 6);
  CHECK(fcla_results_failure_count(results) == 0);
  fcla_result_row row;
  CHECK(fcla_results_row(results, 5, &row) == FCLA_OK);
  CHECK(strcmp(row.method, "fcla-a") == 0);
  CHECK(strcmp(row.sweep_var, "snr_db") == 0);
  CHECK(row.sweep_value == 6.0 && row.trials == 4 && row.mean_sum_rate > 0);
  CHECK(fcla_results_row(results, 6, &row) == FCLA_ERR_INVALID_ARGUMENT);

  /* The reloaded manifest reproduces the sweep exactly. */
  fcla_results* replay = NULL;
  CHECK(fcla_run_sweep(again, &replay) == FCLA_OK);
  for (size_t i = 0; i < fcla_results_row_count(results); ++i) {
    fcla_result_row a, b;
    fcla_results_row(results, i, &a);
    fcla_results_row(replay, i, &b);
    CHECK(a.mean_sum_rate == b.mean_sum_rate && a.std_error == b.std_error);
  }
  snprintf(path, sizeof path, "%s/results.csv", dir);
  CHECK(fcla_results_write_csv(results, path) == FCLA_OK);
  CHECK(fcla_results_write_csv(results, "/nonexistent-dir/x.csv") ==
        FCLA_ERR_IO);
  fcla_results_destroy(replay);
  fcla_results_destroy(results);

  fcla_solve_summary summary;
  CHECK(fcla_solve_once(exp, "fcla-j", dir, &summary) == FCLA_OK);
  CHECK(summary.antennas == 4 && summary.iterations >= 4);
  CHECK(fcla_solve_once(exp, "fcla-a", dir, &summary) == FCLA_OK);
  CHECK(summary.sum_rate > 0);
  CHECK(file_exists(dir, "paths.json"));
  CHECK(file_exists(dir, "trace_fcla-j.csv"));
  CHECK(file_exists(dir, "trace_fcla-a.csv"));
  CHECK(file_exists(dir, "convergence_fcla-a.csv"));
  CHECK(file_exists(dir, "placement_fcla-a.csv"));
  CHECK(fcla_solve_once(exp, "nope", dir, &summary) ==
        FCLA_ERR_INVALID_ARGUMENT);

  CHECK(fcla_validate(on_suite, NULL) == FCLA_OK);
  CHECK(suites_seen == 3);

  fcla_experiment_destroy(again);
  fcla_experiment_destroy(exp);
  fcla_experiment_destroy(NULL);
  fcla_results_destroy(NULL);

  if (failures != 0) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
