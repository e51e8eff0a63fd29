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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "isamp/dataset.hpp"
#include "isamp/diagnostics.hpp"
#include "isamp/problem.hpp"
#include "isamp/sampling.hpp"

namespace isamp {

/// Step-size schedules for the proximal stochastic gradient method.
struct StepSchedule {
  enum class Kind { inverse_strong, inverse_lambda_t, constant };

  Kind kind = Kind::inverse_lambda_t;
  double alpha = 0.0;              // inverse_strong: eta_t = 1/(alpha + mu t)
  double mu = 0.0;
  std::optional<double> gamma;     // inverse_strong: enforce alpha >= 1/gamma - mu
  double lambda = 0.0;             // inverse_lambda_t: eta_t = 1/(lambda t)
  double eta = 0.0;                // constant

  static StepSchedule inverse_strong(double alpha, double mu,
                                     std::optional<double> gamma = std::nullopt);
  static StepSchedule inverse_lambda_t(double lambda);
  static StepSchedule constant(double eta);

  /// Throws `config` when a precondition fails.
  void validate() const;
};

std::string_view to_string(StepSchedule::Kind kind) noexcept;

/// eta_t for t >= 1.
double step_size(const StepSchedule& schedule, std::uint64_t t);

/// sqrt(sigma * B) / (sqrt(T) * mean(G)): the constant step that balances the
/// bound over a horizon of T steps, with B an upper bound on B_psi(w*, w^1).
double balanced_constant_step(std::span<const double> bounds, double sigma, double bregman_bound,
                              std::uint64_t horizon);

enum class SgdSampling { uniform, lipschitz, smoothness, oracle };

std::string_view to_string(SgdSampling kind) noexcept;
SgdSampling parse_sgd_sampling(std::string_view text);

struct SgdConfig {
  StepSchedule schedule = StepSchedule::inverse_lambda_t(1e-4);
  std::uint64_t epochs = 10;
  SgdSampling sampling = SgdSampling::uniform;
  bool uniform_first_epoch = true;
  std::uint64_t seed = 1;
  bool averaging = true;
  bool timing = false;

  void validate() const;
};

struct PrimalState {
  DenseVector w;
  std::uint64_t t = 0;  // steps taken
};

/// prox_{eta lambda r}(z - eta g).
DenseVector prox_gradient_update(std::span<const double> z, std::span<const double> g,
                                 double eta, double lambda, const Regularizer& reg);

/// One importance-weighted step on example i drawn with probability p_i:
/// w <- prox_{eta lambda r}(w - eta (n p_i)^{-1} grad phi_i(w)), then the
/// projection onto the problem's ball if any. Throws when p_i <= 0.
void sgd_step(PrimalState& state, const LabeledDataset& data, const ProblemSpec& problem,
              std::size_t i, double p_i, double eta);

/// Per-example gradient-norm bounds G_i over the problem's feasible ball.
std::vector<double> sgd_gradient_bounds(const LabeledDataset& data, const ProblemSpec& problem);

/// Static sampling distribution for a non-oracle mode.
SamplingDistribution sgd_distribution(SgdSampling kind, const LabeledDataset& data,
                                      const ProblemSpec& problem);

struct SgdResult {
  PrimalState state;
  std::vector<TraceRecord> trace;
  DenseVector average;  // running average of w^1..w^T (empty if disabled)
};

/// Runs epochs * n steps from w = 0, with a checkpoint at t = 0 and after
/// every epoch. Deterministic given the seed.
SgdResult run_sgd(const LabeledDataset& data, const ProblemSpec& problem,
                  const SgdConfig& config, const LabeledDataset* test = nullptr);

}  // namespace isamp
