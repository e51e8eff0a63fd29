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

#include <optional>
#include <span>
#include <vector>

#include "isamp/dataset.hpp"
#include "isamp/problem.hpp"
#include "isamp/sampling.hpp"

namespace isamp {

/// One checkpoint of a solver run.
struct TraceRecord {
  double epoch = 0.0;  // iterations / n
  double primal = 0.0;
  std::optional<double> dual;
  std::optional<double> gap;
  double variance = 0.0;
  std::optional<double> test_error;
  std::optional<double> wall_time;
  // Averaged iterate: running average for SGD, the tail-averaged pair for
  // Lipschitz-mode dual coordinate ascent.
  std::optional<double> avg_primal;
  std::optional<double> avg_dual;
};

/// P(w) = (1/n) sum_i phi_i(w) + lambda r(w).
double primal_objective(std::span<const double> w, const LabeledDataset& data,
                        const ProblemSpec& problem);

/// V = sum_i p_i ||(n p_i)^{-1} grad phi_i(w) - grad f(w)||^2, summed term by
/// term over all n outcomes.
double gradient_variance(std::span<const double> w, const LabeledDataset& data,
                         const ProblemSpec& problem, const SamplingDistribution& dist);

/// Same quantity via (1/n^2) sum_i ||grad phi_i||^2 / p_i - ||grad f||^2.
double gradient_variance_moment_form(std::span<const double> w, const LabeledDataset& data,
                                     const ProblemSpec& problem,
                                     const SamplingDistribution& dist);

/// grad f(w) = (1/n) sum_i grad phi_i(w).
DenseVector mean_gradient(std::span<const double> w, const LabeledDataset& data,
                          const ProblemSpec& problem);

/// ||grad phi_i(w)||_2 for every i.
std::vector<double> gradient_norms(std::span<const double> w, const LabeledDataset& data,
                                   const ProblemSpec& problem);

/// n * sum G_i^2 / (sum G_i)^2. At least 1 by Cauchy-Schwarz.
double constant_ratio_sgd(std::span<const double> bounds);

/// (n lambda gamma_min + R^2) / (n lambda gamma_min + (R^2/n) sum_i gamma_min/gamma_i).
double constant_ratio_sdca(std::span<const double> gamma, double lambda, std::size_t n,
                           double norm_ratio);

/// L_max^2 / (sum L_i / n)^2, the uniform-vs-importance ratio of the leading
/// term for Lipschitz losses.
double constant_ratio_sdca_lipschitz(std::span<const double> lipschitz);

/// Gradient-norm bounds G_i for the composite l2 SVM over ||w|| <= 1/sqrt(lambda):
/// squared hinge 2(1 + ||x_i||/sqrt(lambda))||x_i|| + sqrt(lambda); hinge
/// ||x_i|| + sqrt(lambda).
std::vector<double> composite_gradient_bounds(const LabeledDataset& data, LossKind loss,
                                              double lambda);

/// Fraction of examples with sign(w^T x) != y; a zero score counts as an error.
double test_error(std::span<const double> w, const LabeledDataset& data);

}  // namespace isamp
