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

#include "isamp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isamp/error.hpp"
#include "isamp/loss.hpp"
#include "isamp/regularizer.hpp"

namespace isamp {

namespace {

void check_inputs(std::span<const double> w, const LabeledDataset& data) {
  if (data.empty()) fail(ErrorCode::invalid_argument, "dataset is empty");
  if (w.size() != data.dim()) fail(ErrorCode::dimension_mismatch, "iterate dimension mismatch");
}

void check_distribution(const LabeledDataset& data, const SamplingDistribution& dist) {
  if (dist.size() != data.size()) {
    fail(ErrorCode::dimension_mismatch, "distribution size differs from dataset size");
  }
}

}  // namespace

double primal_objective(std::span<const double> w, const LabeledDataset& data,
                        const ProblemSpec& problem) {
  check_inputs(w, data);
  double loss = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    loss += loss_value(problem.loss, data.label(i) * dot(data.features(i), w));
  }
  loss /= static_cast<double>(data.size());
  // The folded l2 term is identical for every i, so add it once.
  if (problem.l2_in_loss) loss += 0.5 * problem.lambda * squared_norm(w);
  return loss + problem.lambda * regularizer_value(problem.reg, w);
}

DenseVector mean_gradient(std::span<const double> w, const LabeledDataset& data,
                          const ProblemSpec& problem) {
  check_inputs(w, data);
  const double n = static_cast<double>(data.size());
  DenseVector g(data.dim(), 0.0);
  double w_scale = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto eg = example_gradient(problem, data, i, w);
    axpy_sparse(eg.coef / n, data.features(i), g);
    w_scale = eg.w_scale;
  }
  if (w_scale != 0.0) {
    for (std::size_t j = 0; j < g.size(); ++j) g[j] += w_scale * w[j];
  }
  return g;
}

std::vector<double> gradient_norms(std::span<const double> w, const LabeledDataset& data,
                                   const ProblemSpec& problem) {
  check_inputs(w, data);
  const double wsq = squared_norm(w);
  std::vector<double> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto eg = example_gradient(problem, data, i, w);
    // ||c x + s w||^2 = c^2||x||^2 + 2cs x^T w + s^2||w||^2, with y x^T w = margin.
    const double xw = eg.margin * data.label(i);
    const double sq = eg.coef * eg.coef * data.squared_norm(i) +
                      2.0 * eg.coef * eg.w_scale * xw + eg.w_scale * eg.w_scale * wsq;
    out[i] = std::sqrt(std::max(0.0, sq));
  }
  return out;
}

double gradient_variance(std::span<const double> w, const LabeledDataset& data,
                         const ProblemSpec& problem, const SamplingDistribution& dist) {
  check_distribution(data, dist);
  const DenseVector gbar = mean_gradient(w, data, problem);
  const double n = static_cast<double>(data.size());
  DenseVector diff(data.dim());
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double p = dist.probability(i);
    const double a = 1.0 / (n * p);
    const auto eg = example_gradient(problem, data, i, w);
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = a * eg.w_scale * w[j] - gbar[j];
    axpy_sparse(a * eg.coef, data.features(i), diff);
    total += p * squared_norm(diff);
  }
  return total;
}

double gradient_variance_moment_form(std::span<const double> w, const LabeledDataset& data,
                                     const ProblemSpec& problem,
                                     const SamplingDistribution& dist) {
  check_distribution(data, dist);
  const auto norms = gradient_norms(w, data, problem);
  const double n = static_cast<double>(data.size());
  double second = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    second += norms[i] * norms[i] / dist.probability(i);
  }
  second /= n * n;
  return std::max(0.0, second - squared_norm(mean_gradient(w, data, problem)));
}

namespace {

bool all_equal(std::span<const double> xs) {
  return std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs.front(); });
}

}  // namespace

double constant_ratio_sgd(std::span<const double> bounds) {
  if (bounds.empty()) fail(ErrorCode::invalid_argument, "constant_ratio_sgd: no bounds");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double g : bounds) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
      fail(ErrorCode::invalid_argument, "constant_ratio_sgd: bounds must be finite and nonnegative");
    }
    sum += g;
    sum_sq += g * g;
  }
  if (sum <= 0.0) fail(ErrorCode::invalid_argument, "constant_ratio_sgd: all bounds are zero");
  if (all_equal(bounds)) return 1.0;
  // Cauchy-Schwarz gives >= 1; only rounding can push the quotient below.
  return std::max(1.0, static_cast<double>(bounds.size()) * sum_sq / (sum * sum));
}

double constant_ratio_sdca(std::span<const double> gamma, double lambda, std::size_t n,
                           double norm_ratio) {
  if (gamma.empty() || gamma.size() != n) {
    fail(ErrorCode::invalid_argument, "constant_ratio_sdca: gamma must have length n >= 1");
  }
  if (!(lambda > 0.0) || !(norm_ratio > 0.0)) {
    fail(ErrorCode::invalid_argument, "constant_ratio_sdca: lambda and R must be positive");
  }
  double gmin = std::numeric_limits<double>::infinity();
  for (double g : gamma) {
    if (!(g > 0.0)) fail(ErrorCode::invalid_argument, "constant_ratio_sdca: gamma_i must be positive");
    gmin = std::min(gmin, g);
  }
  if (std::isinf(gmin) || all_equal(gamma)) return 1.0;
  const double nd = static_cast<double>(n);
  const double r2 = norm_ratio * norm_ratio;
  double ratio_sum = 0.0;
  for (double g : gamma) ratio_sum += gmin / g;
  const double base = nd * lambda * gmin;
  return std::max(1.0, (base + r2) / (base + r2 * (ratio_sum / nd)));
}

double constant_ratio_sdca_lipschitz(std::span<const double> lipschitz) {
  if (lipschitz.empty()) fail(ErrorCode::invalid_argument, "no Lipschitz constants");
  double sum = 0.0;
  double lmax = 0.0;
  for (double l : lipschitz) {
    if (!(l >= 0.0)) fail(ErrorCode::invalid_argument, "Lipschitz constants must be nonnegative");
    sum += l;
    lmax = std::max(lmax, l);
  }
  if (sum <= 0.0) fail(ErrorCode::invalid_argument, "all Lipschitz constants are zero");
  if (all_equal(lipschitz)) return 1.0;
  const double mean = sum / static_cast<double>(lipschitz.size());
  return std::max(1.0, (lmax * lmax) / (mean * mean));
}

std::vector<double> composite_gradient_bounds(const LabeledDataset& data, LossKind loss,
                                              double lambda) {
  if (!(lambda > 0.0)) fail(ErrorCode::invalid_argument, "lambda must be positive");
  const double sl = std::sqrt(lambda);
  std::vector<double> g(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double nx = data.norm(i);
    g[i] = loss == LossKind::squared_hinge ? 2.0 * (1.0 + nx / sl) * nx + sl : nx + sl;
  }
  return g;
}

double test_error(std::span<const double> w, const LabeledDataset& data) {
  if (data.empty()) fail(ErrorCode::invalid_argument, "test set is empty");
  if (w.size() != data.dim()) fail(ErrorCode::dimension_mismatch, "iterate dimension mismatch");
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double score = dot(data.features(i), w);
    const double y = data.label(i);
    if (!(score * y > 0.0)) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

}  // namespace isamp
