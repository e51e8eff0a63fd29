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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isamp/data_io.hpp"
#include "isamp/dataset.hpp"
#include "isamp/diagnostics.hpp"
#include "isamp/problem.hpp"
#include "isamp/sdca.hpp"
#include "isamp/sgd.hpp"

namespace isamp {

/// One solver entry such as "sgd:lipschitz" or "sdca:smooth:optionV".
struct AlgorithmSpec {
  enum class Solver { sgd, sdca };

  Solver solver = Solver::sgd;
  SgdSampling sgd_sampling = SgdSampling::uniform;
  SdcaSampling sdca_sampling = SdcaSampling::uniform;
  SdcaOption option = SdcaOption::exact;

  /// Canonical text form, e.g. "sdca:smooth:optionI".
  std::string name() const;
};

AlgorithmSpec parse_algorithm(std::string_view text);

enum class RegChoice { l2, l1_smoothed };

struct ExperimentConfig {
  std::optional<std::string> data;       // LIBSVM path; synthetic data otherwise
  std::optional<std::string> test_data;
  double test_fraction = 0.0;            // held-out share of `data` when no test file
  std::uint64_t split_seed = 1;
  std::optional<std::size_t> dim;
  SyntheticSpec synthetic;

  LossKind loss = LossKind::squared_hinge;
  RegChoice reg = RegChoice::l2;
  double lambda = 1e-4;
  double epsilon = 1e-3;                 // smoothing accuracy for l1

  std::uint64_t epochs = 10;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<AlgorithmSpec> algorithms;

  StepSchedule::Kind sgd_schedule = StepSchedule::Kind::inverse_lambda_t;
  double sgd_eta = 0.0;
  double sgd_alpha = 0.0;
  double sgd_mu = 0.0;
  std::optional<double> sgd_gamma;
  bool projection = true;
  bool averaging = true;

  bool uniform_first_epoch = true;
  bool timing = false;
  std::optional<std::uint64_t> sdca_average_start;
  double norm_ratio = 1.0;

  std::string out = "isamp_out";

  /// Checks every algorithm against the problem. Throws `config`.
  void validate() const;

  /// Problem solved by the stochastic gradient runs: the l2 term folded into
  /// the loss (radius 1/sqrt(lambda)), or l1 split off (radius 1/lambda).
  ProblemSpec sgd_problem() const;
  /// Problem solved by the dual runs: l2, or the smoothed l1 surrogate.
  ProblemSpec sdca_problem() const;
  StepSchedule schedule() const;
};

/// Flat key=value settings. Later assignments win except for `algo`, which
/// accumulates. Unknown keys are rejected.
class ConfigMap {
 public:
  void set(std::string_view key, std::string_view value);
  /// Reads "key = value" lines; '#' starts a comment.
  void load(std::istream& in);
  void load_file(const std::string& path);

  const std::map<std::string, std::string>& values() const noexcept { return values_; }
  const std::vector<std::string>& algorithms() const noexcept { return algorithms_; }

  ExperimentConfig build() const;

  static const std::vector<std::string_view>& known_keys();

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::string> algorithms_;
};

struct RunOutput {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::vector<TraceRecord> trace;
  std::string path;
};

struct ExperimentResult {
  std::vector<RunOutput> runs;
  std::string summary_path;
  std::string ratios_path;
};

struct LoadedData {
  LabeledDataset train;
  std::optional<LabeledDataset> test;
};

LoadedData load_experiment_data(const ExperimentConfig& config);

/// Writes one CSV per (algorithm, seed), summary.csv and ratios.csv into
/// `config.out`.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// CSV with the columns epoch,primal,dual,gap,variance,test_error,wall_time.
std::string trace_csv(const std::vector<TraceRecord>& trace);

struct ConstantRatios {
  double sgd = 1.0;
  double sdca = 1.0;
};

/// SGD: n sum G^2/(sum G)^2 with the problem's gradient bounds. Dual: the
/// smooth-loss ratio for squared hinge, the Lipschitz ratio for hinge.
ConstantRatios compute_ratios(const LabeledDataset& data, const ExperimentConfig& config);

/// Two lines, "sgd <ratio>" and "sdca <ratio>", with 4 decimals.
std::string format_ratios(const ConstantRatios& ratios);

/// Shortest text that parses back to the same double.
std::string format_double(double v);

}  // namespace isamp
