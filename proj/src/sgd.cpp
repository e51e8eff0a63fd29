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

#include "isamp/sgd.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "isamp/error.hpp"
#include "isamp/loss.hpp"
#include "isamp/regularizer.hpp"

namespace isamp {

StepSchedule StepSchedule::inverse_strong(double alpha, double mu, std::optional<double> gamma) {
  StepSchedule s;
  s.kind = Kind::inverse_strong;
  s.alpha = alpha;
  s.mu = mu;
  s.gamma = gamma;
  return s;
}

StepSchedule StepSchedule::inverse_lambda_t(double lambda) {
  StepSchedule s;
  s.kind = Kind::inverse_lambda_t;
  s.lambda = lambda;
  return s;
}

StepSchedule StepSchedule::constant(double eta) {
  StepSchedule s;
  s.kind = Kind::constant;
  s.eta = eta;
  return s;
}

void StepSchedule::validate() const {
  switch (kind) {
    case Kind::inverse_strong:
      if (!(mu >= 0.0) || !std::isfinite(mu)) fail(ErrorCode::config, "schedule mu must be >= 0");
      if (!(alpha + mu > 0.0) || !std::isfinite(alpha)) {
        fail(ErrorCode::config, "schedule needs alpha + mu > 0");
      }
      if (gamma) {
        if (!(*gamma > 0.0)) fail(ErrorCode::config, "schedule gamma must be positive");
        // eta_t is decreasing, so eta_1 <= gamma covers every t.
        if (alpha < 1.0 / *gamma - mu) {
          fail(ErrorCode::config, "schedule needs alpha >= 1/gamma - mu (got alpha=" +
                                      std::to_string(alpha) + ")");
        }
      }
      return;
    case Kind::inverse_lambda_t:
      if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        fail(ErrorCode::config, "schedule lambda must be positive");
      }
      return;
    case Kind::constant:
      if (!(eta > 0.0) || !std::isfinite(eta)) fail(ErrorCode::config, "constant step must be positive");
      return;
  }
}

std::string_view to_string(StepSchedule::Kind kind) noexcept {
  switch (kind) {
    case StepSchedule::Kind::inverse_strong: return "inverse_strong";
    case StepSchedule::Kind::inverse_lambda_t: return "inverse_lambda_t";
    case StepSchedule::Kind::constant: return "constant";
  }
  return "?";
}

double step_size(const StepSchedule& schedule, std::uint64_t t) {
  if (t == 0) fail(ErrorCode::invalid_argument, "step_size: t starts at 1");
  const double td = static_cast<double>(t);
  switch (schedule.kind) {
    case StepSchedule::Kind::inverse_strong: return 1.0 / (schedule.alpha + schedule.mu * td);
    case StepSchedule::Kind::inverse_lambda_t: return 1.0 / (schedule.lambda * td);
    case StepSchedule::Kind::constant: return schedule.eta;
  }
  return 0.0;
}

double balanced_constant_step(std::span<const double> bounds, double sigma, double bregman_bound,
                              std::uint64_t horizon) {
  if (bounds.empty() || horizon == 0 || !(sigma > 0.0) || !(bregman_bound > 0.0)) {
    fail(ErrorCode::invalid_argument, "balanced_constant_step: invalid inputs");
  }
  double sum = 0.0;
  for (double g : bounds) sum += g;
  if (!(sum > 0.0)) fail(ErrorCode::invalid_argument, "balanced_constant_step: zero bounds");
  const double mean = sum / static_cast<double>(bounds.size());
  return std::sqrt(sigma * bregman_bound) / (std::sqrt(static_cast<double>(horizon)) * mean);
}

std::string_view to_string(SgdSampling kind) noexcept {
  switch (kind) {
    case SgdSampling::uniform: return "uniform";
    case SgdSampling::lipschitz: return "lipschitz";
    case SgdSampling::smoothness: return "smoothness";
    case SgdSampling::oracle: return "oracle";
  }
  return "?";
}

SgdSampling parse_sgd_sampling(std::string_view text) {
  if (text == "uniform") return SgdSampling::uniform;
  if (text == "lipschitz") return SgdSampling::lipschitz;
  if (text == "smoothness" || text == "smooth") return SgdSampling::smoothness;
  if (text == "oracle") return SgdSampling::oracle;
  fail(ErrorCode::config, "unknown SGD sampling '" + std::string(text) + "'");
}

void SgdConfig::validate() const { schedule.validate(); }

DenseVector prox_gradient_update(std::span<const double> z, std::span<const double> g,
                                 double eta, double lambda, const Regularizer& reg) {
  if (z.size() != g.size()) fail(ErrorCode::dimension_mismatch, "prox_gradient_update: size mismatch");
  if (!(eta > 0.0)) fail(ErrorCode::invalid_argument, "step size must be positive");
  DenseVector out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) out[j] = z[j] - eta * g[j];
  prox_inplace(reg, eta * lambda, out);
  return out;
}

void sgd_step(PrimalState& state, const LabeledDataset& data, const ProblemSpec& problem,
              std::size_t i, double p_i, double eta) {
  if (!(p_i > 0.0)) fail(ErrorCode::invalid_argument, "sgd_step: sampling probability must be positive");
  if (!(eta > 0.0)) fail(ErrorCode::invalid_argument, "sgd_step: step size must be positive");
  if (i >= data.size()) fail(ErrorCode::invalid_argument, "sgd_step: example index out of range");
  if (state.w.size() != data.dim()) fail(ErrorCode::dimension_mismatch, "sgd_step: iterate dimension");
  const auto eg = example_gradient(problem, data, i, state.w);
  const double scale = eta / (static_cast<double>(data.size()) * p_i);
  if (eg.w_scale != 0.0) {
    const double shrink = 1.0 - scale * eg.w_scale;
    for (double& v : state.w) v *= shrink;
  }
  if (eg.coef != 0.0) axpy_sparse(-scale * eg.coef, data.features(i), state.w);
  prox_inplace(problem.reg, eta * problem.lambda, state.w);
  if (problem.radius) project_l2_ball_inplace(state.w, *problem.radius);
  ++state.t;
}

std::vector<double> sgd_gradient_bounds(const LabeledDataset& data, const ProblemSpec& problem) {
  std::optional<double> radius = problem.radius;
  if (!radius && problem.l2_in_loss) radius = 1.0 / std::sqrt(problem.lambda);
  if (problem.loss == LossKind::squared_hinge && !radius) {
    fail(ErrorCode::config, "squared hinge gradient bounds need a projection radius");
  }
  auto bounds = per_example_constants(problem.loss, data, radius).lipschitz;
  if (problem.l2_in_loss) {
    for (double& g : bounds) g += problem.lambda * *radius;
  }
  return bounds;
}

SamplingDistribution sgd_distribution(SgdSampling kind, const LabeledDataset& data,
                                      const ProblemSpec& problem) {
  switch (kind) {
    case SgdSampling::uniform:
      return build_uniform(data.size());
    case SgdSampling::lipschitz:
      return build_lipschitz(sgd_gradient_bounds(data, problem));
    case SgdSampling::smoothness: {
      if (problem.loss != LossKind::squared_hinge) {
        fail(ErrorCode::config, "smoothness sampling needs the squared hinge loss");
      }
      // phi_i is (2||x_i||^2 + lambda)-smooth when the l2 term is folded in.
      std::vector<double> gamma(data.size());
      const double extra = problem.l2_in_loss ? problem.lambda : 0.0;
      for (std::size_t i = 0; i < data.size(); ++i) {
        const double inv = 2.0 * data.squared_norm(i) + extra;
        gamma[i] = inv > 0.0 ? 1.0 / inv : std::numeric_limits<double>::infinity();
      }
      return build_smoothness(gamma);
    }
    case SgdSampling::oracle:
      fail(ErrorCode::invalid_argument, "oracle sampling depends on the iterate");
  }
  fail(ErrorCode::invalid_argument, "unknown sampling kind");
}

namespace {

using Clock = std::chrono::steady_clock;

SamplingDistribution oracle_distribution(const LabeledDataset& data, const ProblemSpec& problem,
                                         std::span<const double> w) {
  const auto norms = gradient_norms(w, data, problem);
  double total = 0.0;
  for (double g : norms) total += g;
  // Every gradient vanishes at an exact optimum; any distribution is then optimal.
  if (total <= 0.0) return build_uniform(data.size());
  return build_gradient_norm(norms);
}

}  // namespace

SgdResult run_sgd(const LabeledDataset& data, const ProblemSpec& problem,
                  const SgdConfig& config, const LabeledDataset* test) {
  problem.validate();
  config.validate();
  if (data.empty()) fail(ErrorCode::invalid_argument, "run_sgd: empty dataset");
  if (test && test->dim() != data.dim()) {
    fail(ErrorCode::dimension_mismatch, "test set dimension differs from training set");
  }
  const std::size_t n = data.size();
  const bool oracle = config.sampling == SgdSampling::oracle;
  const SamplingDistribution uniform = build_uniform(n);
  SamplingDistribution fixed =
      oracle ? uniform : sgd_distribution(config.sampling, data, problem);

  SgdResult result;
  result.state.w.assign(data.dim(), 0.0);
  if (config.averaging) result.average.assign(data.dim(), 0.0);
  Rng rng(config.seed);
  const auto start = Clock::now();
  const std::uint64_t total = config.epochs * n;

  auto active = [&](std::uint64_t t) -> const SamplingDistribution& {
    return config.uniform_first_epoch && t < n ? uniform : fixed;
  };

  auto checkpoint = [&](std::uint64_t t) {
    TraceRecord rec;
    rec.epoch = static_cast<double>(t) / static_cast<double>(n);
    rec.primal = primal_objective(result.state.w, data, problem);
    const bool use_uniform = config.uniform_first_epoch && t < n;
    if (oracle && !use_uniform) {
      rec.variance = gradient_variance(result.state.w, data, problem,
                                       oracle_distribution(data, problem, result.state.w));
    } else {
      rec.variance = gradient_variance(result.state.w, data, problem, active(t));
    }
    if (test) rec.test_error = test_error(result.state.w, *test);
    if (config.averaging && t > 0) rec.avg_primal = primal_objective(result.average, data, problem);
    if (config.timing) rec.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    result.trace.push_back(std::move(rec));
  };

  checkpoint(0);
  for (std::uint64_t t = 0; t < total; ++t) {
    const bool use_uniform = config.uniform_first_epoch && t < n;
    if (oracle && !use_uniform) fixed = oracle_distribution(data, problem, result.state.w);
    const SamplingDistribution& dist = active(t);
    const std::size_t i = dist.draw(rng);
    sgd_step(result.state, data, problem, i, dist.probability(i),
             step_size(config.schedule, t + 1));
    if (config.averaging) {
      const double inv = 1.0 / static_cast<double>(t + 1);
      for (std::size_t j = 0; j < result.average.size(); ++j) {
        result.average[j] += (result.state.w[j] - result.average[j]) * inv;
      }
    }
    if ((t + 1) % n == 0) checkpoint(t + 1);
  }
  return result;
}

}  // namespace isamp
