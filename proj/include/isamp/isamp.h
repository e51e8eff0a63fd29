/* Copyright 2026 The isamp Authors.
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

/* C interface to the isamp solvers. Every call returns an isamp_status; on
 * failure isamp_last_error() describes the problem for the calling thread.
 * Handles are opaque and owned by the caller until passed to *_free. */

#ifndef ISAMP_ISAMP_H_
#define ISAMP_ISAMP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ISAMP_BUILDING_LIBRARY)
#    define ISAMP_API __declspec(dllexport)
#  else
#    define ISAMP_API __declspec(dllimport)
#  endif
#else
#  define ISAMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isamp_status {
  ISAMP_OK = 0,
  ISAMP_ERR_INVALID_ARGUMENT = 1,
  ISAMP_ERR_DIMENSION = 2,
  ISAMP_ERR_PARSE = 3,
  ISAMP_ERR_IO = 4,
  ISAMP_ERR_INFEASIBLE = 5,
  ISAMP_ERR_CONFIG = 6,
  ISAMP_ERR_NOT_CONVERGED = 7,
  ISAMP_ERR_INTERNAL = 99
} isamp_status;

typedef struct isamp_dataset isamp_dataset;
typedef struct isamp_config isamp_config;
typedef struct isamp_report isamp_report;
typedef struct isamp_trace isamp_trace;

typedef struct isamp_synthetic_spec {
  size_t n;
  size_t d;
  size_t nnz;     /* nonzeros per example, at most d */
  double sigma;   /* log-normal spread of example norms */
  double noise;   /* label flip rate in [0,1) */
  uint64_t seed;
} isamp_synthetic_spec;

typedef struct isamp_trace_record {
  double epoch;
  double primal;
  double dual;        /* valid when has_dual */
  double gap;         /* valid when has_dual */
  double variance;
  double test_error;  /* valid when has_test_error */
  double wall_time;   /* valid when has_wall_time */
  int has_dual;
  int has_test_error;
  int has_wall_time;
} isamp_trace_record;

ISAMP_API const char* isamp_version(void);
/* Message for the last failed call on this thread; never NULL. */
ISAMP_API const char* isamp_last_error(void);

/* Datasets. dim = 0 means the largest index seen. */
ISAMP_API isamp_status isamp_dataset_load(const char* path, size_t dim, isamp_dataset** out);
ISAMP_API isamp_status isamp_dataset_parse(const char* text, size_t length, size_t dim,
                                           isamp_dataset** out);
ISAMP_API isamp_status isamp_dataset_generate(const isamp_synthetic_spec* spec,
                                              isamp_dataset** out);
/* Training data described by a configuration (file or synthetic). */
ISAMP_API isamp_status isamp_dataset_from_config(const isamp_config* config, isamp_dataset** out);
ISAMP_API isamp_status isamp_dataset_save(const isamp_dataset* data, const char* path);
ISAMP_API size_t isamp_dataset_size(const isamp_dataset* data);
ISAMP_API size_t isamp_dataset_dim(const isamp_dataset* data);
ISAMP_API void isamp_dataset_free(isamp_dataset* data);

/* Experiment configuration as key=value settings. */
ISAMP_API isamp_status isamp_config_create(isamp_config** out);
ISAMP_API isamp_status isamp_config_set(isamp_config* config, const char* key, const char* value);
ISAMP_API isamp_status isamp_config_load_file(isamp_config* config, const char* path);
ISAMP_API isamp_status isamp_config_validate(const isamp_config* config);
ISAMP_API void isamp_config_free(isamp_config* config);

/* Runs every (algorithm, seed) pair and writes CSV traces, summary.csv and
 * ratios.csv. The report lists each written file (name) with its
 * algorithm (detail). */
ISAMP_API isamp_status isamp_run_experiment(const isamp_config* config, isamp_report** out);

/* Constant ratios of the configured problem on `data`. */
ISAMP_API isamp_status isamp_compute_ratios(const isamp_dataset* data, const isamp_config* config,
                                            double* sgd_ratio, double* sdca_ratio);

/* Invariant suite on `data`; one report entry per check. */
ISAMP_API isamp_status isamp_run_checks(const isamp_dataset* data, const isamp_config* config,
                                        isamp_report** out);

ISAMP_API size_t isamp_report_size(const isamp_report* report);
ISAMP_API isamp_status isamp_report_entry(const isamp_report* report, size_t k, const char** name,
                                          int* passed, const char** detail);
ISAMP_API void isamp_report_free(isamp_report* report);

/* One solver run of `algorithm` (e.g. "sdca:smooth:optionI") on `data`. */
ISAMP_API isamp_status isamp_solve(const isamp_dataset* data, const isamp_config* config,
                                   const char* algorithm, uint64_t seed, isamp_trace** out);
ISAMP_API size_t isamp_trace_length(const isamp_trace* trace);
ISAMP_API isamp_status isamp_trace_record_at(const isamp_trace* trace, size_t k,
                                             isamp_trace_record* out);
/* Final primal iterate; valid while the trace lives. */
ISAMP_API isamp_status isamp_trace_weights(const isamp_trace* trace, const double** w,
                                           size_t* dim);
/* The trace as CSV text; valid while the trace lives. */
ISAMP_API const char* isamp_trace_csv(const isamp_trace* trace);
ISAMP_API void isamp_trace_free(isamp_trace* trace);

#ifdef __cplusplus
}
#endif

#endif /* ISAMP_ISAMP_H_ */
