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
#include <string_view>
#include <vector>

#include "isamp/dataset.hpp"
#include "isamp/diagnostics.hpp"
#include "isamp/problem.hpp"
#include "isamp/sampling.hpp"

namespace isamp {

// Dual coordinates are stored as scalars: theta_i = alpha_i * y_i * x_i, so
// v = (1/(lambda n)) sum_i alpha_i y_i x_i and w = grad r*(v).

enum class SdcaOption {
  exact,         // I: exact coordinate maximization
  line_search,   // II: best step toward the subgradient dual point
  smooth_bound,  // III: step from the smooth-loss lower bound
  lipschitz,     // IV: step from the Lipschitz lower bound
  fixed,         // V: fixed fraction s/(n p_i)
};

enum class SdcaSampling { uniform, smooth, lipschitz };

std::string_view to_string(SdcaOption option) noexcept;
std::string_view to_string(SdcaSampling sampling) noexcept;
/// Accepts "optionI".."optionV" and "I".."V".
SdcaOption parse_sdca_option(std::string_view text);
SdcaSampling parse_sdca_sampling(std::string_view text);

struct SdcaConfig {
  SdcaOption option = SdcaOption::exact;
  SdcaSampling sampling = SdcaSampling::uniform;
  std::uint64_t epochs = 10;
  /// Total coordinate steps; overrides epochs * n when set. A checkpoint is
  /// also written at the final step.
  std::optional<std::uint64_t> iterations;
  std::uint64_t seed = 1;
  bool uniform_first_epoch = true;
  /// Start of the averaging window in Lipschitz mode; defaults to T/2.
  std::optional<std::uint64_t> average_start;
  double norm_ratio = 1.0;  // R = sup ||u||_{D'} / ||u||_D
  bool timing = false;

  /// Throws `config` for combinations the loss cannot support.
  void validate(const ProblemSpec& problem) const;
};

struct SdcaStepContext {
  double norm_ratio = 1.0;
  double step = 0.0;  // option V: s with s/(n p_i) <= 1
  double rho = 1.0;   // Lipschitz mode: n L_min / sum L
};

struct DualState {
  std::vector<double> alpha;
  DenseVector v;
  DenseVector w;
  std::uint64_t t = 0;

  static DualState zero(const LabeledDataset& data);
};

/// Increment of alpha_i the chosen option would apply at `state`. `p_i` is
/// only used by option V.
double sdca_increment(SdcaOption option, const SdcaStepContext& ctx, const ProblemSpec& problem,
                      const LabeledDataset& data, const DualState& state, std::size_t i,
                      double p_i);

/// Adds `delta` to alpha_i (clamped to the feasible interval) and refreshes
/// v and the touched coordinates of w. Returns the increment applied.
double apply_dual_increment(DualState& state, const ProblemSpec& problem,
                            const LabeledDataset& data, std::size_t i, double delta);

/// sdca_increment followed by apply_dual_increment.
double sdca_step(DualState& state, SdcaOption option, const SdcaStepContext& ctx,
                 const ProblemSpec& problem, const LabeledDataset& data, std::size_t i,
                 double p_i);

/// D = (1/n) sum_i -phi*_i(-theta_i) - lambda r*(v). Throws `infeasible` for
/// an alpha outside the conjugate's domain.
double dual_objective(const DualState& state, const LabeledDataset& data,
                      const ProblemSpec& problem);
double dual_objective(std::span<const double> alpha, std::span<const double> v,
                      const LabeledDataset& data, const ProblemSpec& problem);

/// v recomputed from alpha.
DenseVector recompute_v(std::span<const double> alpha, const LabeledDataset& data,
                        const ProblemSpec& problem);

/// Sampling distribution for the configured mode.
SamplingDistribution sdca_distribution(SdcaSampling sampling, const LabeledDataset& data,
                                       const ProblemSpec& problem, double norm_ratio);

struct SdcaResult {
  DualState state;
  std::vector<TraceRecord> trace;
  /// Tail averages over iterates T0..T-1 (Lipschitz sampling only).
  DenseVector average_w;
  std::vector<double> average_alpha;
  std::uint64_t average_start = 0;
  /// Lipschitz mode: rho and the smallest admissible averaging start from the
  /// convergence analysis, reported for reference.
  double rho = 1.0;
  std::optional<std::uint64_t> t0_reference;
  /// Examples with x_i = 0; their alpha jumps to the conjugate minimizer.
  std::size_t degenerate = 0;
};

SdcaResult run_sdca(const LabeledDataset& data, const ProblemSpec& problem,
                    const SdcaConfig& config, const LabeledDataset* test = nullptr);

}  // namespace isamp
