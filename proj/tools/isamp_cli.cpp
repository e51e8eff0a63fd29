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

// Command-line front end. Talks to the solvers only through the C API.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isamp/isamp.h"

namespace {

// Prints the library's message and returns a process exit code.
int report_failure(isamp_status code) {
  std::fprintf(stderr, "isamp: error: %s\n", isamp_last_error());
  return code == ISAMP_ERR_CONFIG || code == ISAMP_ERR_INVALID_ARGUMENT ? 2 : 1;
}

struct ConfigDeleter {
  void operator()(isamp_config* c) const { isamp_config_free(c); }
};
struct DatasetDeleter {
  void operator()(isamp_dataset* d) const { isamp_dataset_free(d); }
};
struct ReportDeleter {
  void operator()(isamp_report* r) const { isamp_report_free(r); }
};
using ConfigPtr = std::unique_ptr<isamp_config, ConfigDeleter>;
using DatasetPtr = std::unique_ptr<isamp_dataset, DatasetDeleter>;
using ReportPtr = std::unique_ptr<isamp_report, ReportDeleter>;

struct CommonOptions {
  std::string config_file;
  std::vector<std::string> sets;
  std::string data;
  std::string loss;
  std::string reg;
  std::string lambda;
  std::string epochs;
  std::string seeds;
  std::vector<std::string> algos;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config_file, "key=value configuration file");
  cmd->add_option("--set", o.sets, "override a setting, key=value (repeatable)");
  cmd->add_option("--data", o.data, "LIBSVM training file (.gz allowed); synthetic data if omitted");
  cmd->add_option("--loss", o.loss, "hinge | sqhinge");
  cmd->add_option("--reg", o.reg, "l2 | l1-smoothed");
  cmd->add_option("--lambda", o.lambda, "regularization strength");
  cmd->add_option("--epochs", o.epochs, "passes over the data");
  cmd->add_option("--seeds", o.seeds, "comma list or range a..b");
  cmd->add_option("--algo", o.algos,
                  "solver entry, e.g. sgd:uniform, sgd:lipschitz, sdca:smooth:optionI (repeatable)");
  cmd->add_option("--out", o.out, "output directory");
}

// Config file first, then the named flags, then --set overrides.
isamp_status build_config(const CommonOptions& o, ConfigPtr& out) {
  isamp_config* raw = nullptr;
  if (auto s = isamp_config_create(&raw); s != ISAMP_OK) return s;
  out.reset(raw);
  if (!o.config_file.empty()) {
    if (auto s = isamp_config_load_file(raw, o.config_file.c_str()); s != ISAMP_OK) return s;
  }
  const std::pair<const char*, const std::string*> named[] = {
      {"data", &o.data},     {"loss", &o.loss},     {"reg", &o.reg}, {"lambda", &o.lambda},
      {"epochs", &o.epochs}, {"seeds", &o.seeds}, {"out", &o.out}};
  for (const auto& [key, value] : named) {
    if (value->empty()) continue;
    if (auto s = isamp_config_set(raw, key, value->c_str()); s != ISAMP_OK) return s;
  }
  for (const auto& a : o.algos) {
    if (auto s = isamp_config_set(raw, "algo", a.c_str()); s != ISAMP_OK) return s;
  }
  for (const auto& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "isamp: error: --set expects key=value, got '%s'\n", kv.c_str());
      return ISAMP_ERR_CONFIG;
    }
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (auto s = isamp_config_set(raw, key.c_str(), value.c_str()); s != ISAMP_OK) return s;
  }
  return ISAMP_OK;
}

int cmd_run(const CommonOptions& o) {
  ConfigPtr config;
  if (auto s = build_config(o, config); s != ISAMP_OK) return report_failure(s);
  if (auto s = isamp_config_validate(config.get()); s != ISAMP_OK) return report_failure(s);
  isamp_report* raw = nullptr;
  if (auto s = isamp_run_experiment(config.get(), &raw); s != ISAMP_OK) return report_failure(s);
  ReportPtr report(raw);
  for (size_t k = 0; k < isamp_report_size(raw); ++k) {
    const char* name = nullptr;
    const char* detail = nullptr;
    isamp_report_entry(raw, k, &name, nullptr, &detail);
    std::printf("%s\t%s\n", detail, name);
  }
  return 0;
}

int load_data(const ConfigPtr& config, DatasetPtr& out) {
  isamp_dataset* raw = nullptr;
  if (auto s = isamp_dataset_from_config(config.get(), &raw); s != ISAMP_OK) return report_failure(s);
  out.reset(raw);
  return 0;
}

int cmd_ratios(const CommonOptions& o) {
  ConfigPtr config;
  if (auto s = build_config(o, config); s != ISAMP_OK) return report_failure(s);
  DatasetPtr data;
  if (int rc = load_data(config, data); rc != 0) return rc;
  double sgd = 0.0;
  double sdca = 0.0;
  if (auto s = isamp_compute_ratios(data.get(), config.get(), &sgd, &sdca); s != ISAMP_OK) {
    return report_failure(s);
  }
  std::printf("n=%zu d=%zu\n", isamp_dataset_size(data.get()), isamp_dataset_dim(data.get()));
  std::printf("constant_ratio_sgd  %.4f\n", sgd);
  std::printf("constant_ratio_sdca %.4f\n", sdca);
  return 0;
}

int cmd_check(const CommonOptions& o) {
  ConfigPtr config;
  if (auto s = build_config(o, config); s != ISAMP_OK) return report_failure(s);
  DatasetPtr data;
  if (int rc = load_data(config, data); rc != 0) return rc;
  isamp_report* raw = nullptr;
  if (auto s = isamp_run_checks(data.get(), config.get(), &raw); s != ISAMP_OK) {
    return report_failure(s);
  }
  ReportPtr report(raw);
  int failed = 0;
  for (size_t k = 0; k < isamp_report_size(raw); ++k) {
    const char* name = nullptr;
    const char* detail = nullptr;
    int passed = 0;
    isamp_report_entry(raw, k, &name, &passed, &detail);
    std::printf("%s %s (%s)\n", passed ? "PASS" : "FAIL", name, detail);
    failed += passed ? 0 : 1;
  }
  std::printf("%d check(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}

struct GenOptions {
  isamp_synthetic_spec spec{1000, 20, 20, 0.0, 0.0, 1};
  std::string out;
};

int cmd_gen(GenOptions& g) {
  if (g.spec.nnz > g.spec.d) g.spec.nnz = g.spec.d;
  isamp_dataset* raw = nullptr;
  if (auto s = isamp_dataset_generate(&g.spec, &raw); s != ISAMP_OK) return report_failure(s);
  DatasetPtr data(raw);
  if (auto s = isamp_dataset_save(raw, g.out.c_str()); s != ISAMP_OK) return report_failure(s);
  std::printf("wrote %zu examples (d=%zu) to %s\n", isamp_dataset_size(raw), isamp_dataset_dim(raw),
              g.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Importance-sampled proximal SGD and SDCA for regularized linear models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(isamp_version()));

  CommonOptions run_opts;
  CommonOptions ratio_opts;
  CommonOptions check_opts;
  GenOptions gen_opts;

  auto* run = app.add_subcommand("run", "run solver head-to-heads and write CSV traces");
  add_common(run, run_opts);
  auto* ratios = app.add_subcommand("ratios", "print the theoretical constant ratios");
  add_common(ratios, ratio_opts);
  auto* check = app.add_subcommand("check", "run the invariant suite on a dataset");
  add_common(check, check_opts);
  auto* gen = app.add_subcommand("gen", "write a synthetic LIBSVM dataset");
  gen->add_option("--n", gen_opts.spec.n, "examples");
  gen->add_option("--d", gen_opts.spec.d, "features");
  gen->add_option("--nnz", gen_opts.spec.nnz, "nonzeros per example");
  gen->add_option("--sigma", gen_opts.spec.sigma, "log-normal norm spread");
  gen->add_option("--noise", gen_opts.spec.noise, "label flip rate");
  gen->add_option("--seed", gen_opts.spec.seed, "random seed");
  gen->add_option("--out", gen_opts.out, "output path (.gz compresses)")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(run_opts);
  if (ratios->parsed()) return cmd_ratios(ratio_opts);
  if (check->parsed()) return cmd_check(check_opts);
  if (gen->parsed()) return cmd_gen(gen_opts);
  return 0;
}
