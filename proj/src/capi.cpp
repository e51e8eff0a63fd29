// Copyright 2026 The isamp Authors.
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

#include "isamp/isamp.h"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isamp/data_io.hpp"
#include "isamp/error.hpp"
#include "isamp/experiment.hpp"
#include "isamp/invariants.hpp"

struct isamp_dataset {
  isamp::LabeledDataset data;
};

struct isamp_config {
  isamp::ConfigMap map;
};

struct isamp_report {
  std::vector<isamp::CheckResult> entries;
};

struct isamp_trace {
  std::vector<isamp::TraceRecord> records;
  isamp::DenseVector w;
  std::string csv;
};

namespace {

thread_local std::string g_last_error;

isamp_status to_status(isamp::ErrorCode code) {
  switch (code) {
    case isamp::ErrorCode::invalid_argument: return ISAMP_ERR_INVALID_ARGUMENT;
    case isamp::ErrorCode::dimension_mismatch: return ISAMP_ERR_DIMENSION;
    case isamp::ErrorCode::parse: return ISAMP_ERR_PARSE;
    case isamp::ErrorCode::io: return ISAMP_ERR_IO;
    case isamp::ErrorCode::infeasible: return ISAMP_ERR_INFEASIBLE;
    case isamp::ErrorCode::config: return ISAMP_ERR_CONFIG;
    case isamp::ErrorCode::not_converged: return ISAMP_ERR_NOT_CONVERGED;
  }
  return ISAMP_ERR_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
isamp_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ISAMP_OK;
  } catch (const isamp::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ISAMP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ISAMP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ISAMP_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) isamp::fail(isamp::ErrorCode::invalid_argument, what);
}

std::optional<std::size_t> dim_arg(size_t dim) {
  return dim == 0 ? std::nullopt : std::optional<std::size_t>(dim);
}

}  // namespace

extern "C" {

const char* isamp_version(void) { return "0.1.0"; }

const char* isamp_last_error(void) { return g_last_error.c_str(); }

isamp_status isamp_dataset_load(const char* path, size_t dim, isamp_dataset** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new isamp_dataset{isamp::load_libsvm(path, dim_arg(dim))};
  });
}

isamp_status isamp_dataset_parse(const char* text, size_t length, size_t dim, isamp_dataset** out) {
  return guarded([&] {
    require((text || length == 0) && out, "null argument");
    *out = new isamp_dataset{isamp::parse_libsvm(std::string_view(text ? text : "", length), dim_arg(dim))};
  });
}

isamp_status isamp_dataset_generate(const isamp_synthetic_spec* spec, isamp_dataset** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    isamp::SyntheticSpec s;
    s.n = spec->n;
    s.d = spec->d;
    s.nnz = spec->nnz;
    s.sigma = spec->sigma;
    s.noise = spec->noise;
    s.seed = spec->seed;
    *out = new isamp_dataset{isamp::generate_synthetic(s)};
  });
}

isamp_status isamp_dataset_from_config(const isamp_config* config, isamp_dataset** out) {
  return guarded([&] {
    require(config && out, "null argument");
    *out = new isamp_dataset{isamp::load_experiment_data(config->map.build()).train};
  });
}

isamp_status isamp_dataset_save(const isamp_dataset* data, const char* path) {
  return guarded([&] {
    require(data && path, "null argument");
    isamp::save_libsvm(path, data->data);
  });
}

size_t isamp_dataset_size(const isamp_dataset* data) { return data ? data->data.size() : 0; }

size_t isamp_dataset_dim(const isamp_dataset* data) { return data ? data->data.dim() : 0; }

void isamp_dataset_free(isamp_dataset* data) { delete data; }

isamp_status isamp_config_create(isamp_config** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new isamp_config{};
  });
}

isamp_status isamp_config_set(isamp_config* config, const char* key, const char* value) {
  return guarded([&] {
    require(config && key && value, "null argument");
    config->map.set(key, value);
  });
}

isamp_status isamp_config_load_file(isamp_config* config, const char* path) {
  return guarded([&] {
    require(config && path, "null argument");
    config->map.load_file(path);
  });
}

isamp_status isamp_config_validate(const isamp_config* config) {
  return guarded([&] {
    require(config, "null argument");
    config->map.build().validate();
  });
}

void isamp_config_free(isamp_config* config) { delete config; }

isamp_status isamp_run_experiment(const isamp_config* config, isamp_report** out) {
  return guarded([&] {
    require(config && out, "null argument");
    const auto result = isamp::run_experiment(config->map.build());
    auto report = std::make_unique<isamp_report>();
    for (const auto& run : result.runs) {
      report->entries.push_back({run.path, true, run.algorithm + " seed " + std::to_string(run.seed)});
    }
    report->entries.push_back({result.summary_path, true, "summary"});
    report->entries.push_back({result.ratios_path, true, "ratios"});
    *out = report.release();
  });
}

isamp_status isamp_compute_ratios(const isamp_dataset* data, const isamp_config* config,
                                  double* sgd_ratio, double* sdca_ratio) {
  return guarded([&] {
    require(data && config && sgd_ratio && sdca_ratio, "null argument");
    const auto cfg = config->map.build();
    const auto r = isamp::compute_ratios(data->data, cfg);
    *sgd_ratio = r.sgd;
    *sdca_ratio = r.sdca;
  });
}

isamp_status isamp_run_checks(const isamp_dataset* data, const isamp_config* config,
                              isamp_report** out) {
  return guarded([&] {
    require(data && config && out, "null argument");
    auto report = std::make_unique<isamp_report>();
    report->entries = isamp::run_invariant_checks(data->data, config->map.build());
    *out = report.release();
  });
}

size_t isamp_report_size(const isamp_report* report) { return report ? report->entries.size() : 0; }

isamp_status isamp_report_entry(const isamp_report* report, size_t k, const char** name,
                                int* passed, const char** detail) {
  return guarded([&] {
    require(report && k < report->entries.size(), "report index out of range");
    const auto& e = report->entries[k];
    if (name) *name = e.name.c_str();
    if (passed) *passed = e.passed ? 1 : 0;
    if (detail) *detail = e.detail.c_str();
  });
}

void isamp_report_free(isamp_report* report) { delete report; }

isamp_status isamp_solve(const isamp_dataset* data, const isamp_config* config,
                         const char* algorithm, uint64_t seed, isamp_trace** out) {
  return guarded([&] {
    require(data && config && algorithm && out, "null argument");
    auto cfg = config->map.build();
    const auto algo = isamp::parse_algorithm(algorithm);
    cfg.algorithms = {algo};
    cfg.validate();
    auto trace = std::make_unique<isamp_trace>();
    if (algo.solver == isamp::AlgorithmSpec::Solver::sgd) {
      isamp::SgdConfig sc;
      sc.schedule = cfg.schedule();
      sc.epochs = cfg.epochs;
      sc.sampling = algo.sgd_sampling;
      sc.uniform_first_epoch = cfg.uniform_first_epoch;
      sc.seed = seed;
      sc.averaging = cfg.averaging;
      sc.timing = cfg.timing;
      auto result = isamp::run_sgd(data->data, cfg.sgd_problem(), sc);
      trace->records = std::move(result.trace);
      trace->w = std::move(result.state.w);
    } else {
      isamp::SdcaConfig sc;
      sc.option = algo.option;
      sc.sampling = algo.sdca_sampling;
      sc.epochs = cfg.epochs;
      sc.seed = seed;
      sc.uniform_first_epoch = cfg.uniform_first_epoch;
      sc.average_start = cfg.sdca_average_start;
      sc.norm_ratio = cfg.norm_ratio;
      sc.timing = cfg.timing;
      auto result = isamp::run_sdca(data->data, cfg.sdca_problem(), sc);
      trace->records = std::move(result.trace);
      trace->w = std::move(result.state.w);
    }
    trace->csv = isamp::trace_csv(trace->records);
    *out = trace.release();
  });
}

size_t isamp_trace_length(const isamp_trace* trace) { return trace ? trace->records.size() : 0; }

isamp_status isamp_trace_record_at(const isamp_trace* trace, size_t k, isamp_trace_record* out) {
  return guarded([&] {
    require(trace && out && k < trace->records.size(), "trace index out of range");
    const auto& r = trace->records[k];
    *out = isamp_trace_record{};
    out->epoch = r.epoch;
    out->primal = r.primal;
    out->variance = r.variance;
    out->has_dual = r.dual ? 1 : 0;
    out->dual = r.dual.value_or(0.0);
    out->gap = r.gap.value_or(0.0);
    out->has_test_error = r.test_error ? 1 : 0;
    out->test_error = r.test_error.value_or(0.0);
    out->has_wall_time = r.wall_time ? 1 : 0;
    out->wall_time = r.wall_time.value_or(0.0);
  });
}

isamp_status isamp_trace_weights(const isamp_trace* trace, const double** w, size_t* dim) {
  return guarded([&] {
    require(trace && w && dim, "null argument");
    *w = trace->w.data();
    *dim = trace->w.size();
  });
}

const char* isamp_trace_csv(const isamp_trace* trace) { return trace ? trace->csv.c_str() : ""; }

void isamp_trace_free(isamp_trace* trace) { delete trace; }

}  // extern "C"
