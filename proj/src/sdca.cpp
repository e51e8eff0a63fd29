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

#include "isamp/sdca.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "isamp/error.hpp"
#include "isamp/loss.hpp"
#include "isamp/regularizer.hpp"

namespace isamp {

std::string_view to_string(SdcaOption option) noexcept {
  switch (option) {
    case SdcaOption::exact: return "optionI";
    case SdcaOption::line_search: return "optionII";
    case SdcaOption::smooth_bound: return "optionIII";
    case SdcaOption::lipschitz: return "optionIV";
    case SdcaOption::fixed: return "optionV";
  }
  return "?";
}

std::string_view to_string(SdcaSampling sampling) noexcept {
  switch (sampling) {
    case SdcaSampling::uniform: return "uniform";
    case SdcaSampling::smooth: return "smooth";
    case SdcaSampling::lipschitz: return "lipschitz";
  }
  return "?";
}

SdcaOption parse_sdca_option(std::string_view text) {
  if (text.starts_with("option")) text.remove_prefix(6);
  if (text == "I" || text == "1") return SdcaOption::exact;
  if (text == "II" || text == "2") return SdcaOption::line_search;
  if (text == "III" || text == "3") return SdcaOption::smooth_bound;
  if (text == "IV" || text == "4") return SdcaOption::lipschitz;
  if (text == "V" || text == "5") return SdcaOption::fixed;
  fail(ErrorCode::config, "unknown dual option '" + std::string(text) + "'");
}

SdcaSampling parse_sdca_sampling(std::string_view text) {
  if (text == "uniform") return SdcaSampling::uniform;
  if (text == "smooth") return SdcaSampling::smooth;
  if (text == "lipschitz") return SdcaSampling::lipschitz;
  fail(ErrorCode::config, "unknown dual sampling '" + std::string(text) + "'");
}

void SdcaConfig::validate(const ProblemSpec& problem) const {
  problem.validate();
  if (problem.l2_in_loss || !problem.reg.strongly_convex()) {
    fail(ErrorCode::config, "dual coordinate ascent needs a strongly convex regularizer (l2 or smoothed l1)");
  }
  if (!(norm_ratio > 0.0) || !std::isfinite(norm_ratio)) {
    fail(ErrorCode::config, "norm ratio R must be positive");
  }
  const bool smooth = problem.loss == LossKind::squared_hinge;
  if (option == SdcaOption::fixed && !smooth) {
    fail(ErrorCode::config, "option V needs a smooth loss (squared hinge)");
  }
  if (option == SdcaOption::lipschitz && smooth) {
    fail(ErrorCode::config, "option IV needs a Lipschitz loss (hinge)");
  }
  if (sampling == SdcaSampling::smooth && !smooth) {
    fail(ErrorCode::config, "smooth sampling needs a smooth loss (squared hinge)");
  }
  if (sampling == SdcaSampling::lipschitz && smooth) {
    fail(ErrorCode::config, "Lipschitz sampling needs a Lipschitz loss (hinge)");
  }
  if (iterations && *iterations == 0 && epochs != 0) {
    fail(ErrorCode::config, "iteration count must be positive");
  }
}

DualState DualState::zero(const LabeledDataset& data) {
  DualState s;
  s.alpha.assign(data.size(), 0.0);
  s.v.assign(data.dim(), 0.0);
  s.w.assign(data.dim(), 0.0);
  return s;
}

namespace {

void check_state(const DualState& state, const LabeledDataset& data, std::size_t i) {
  if (i >= data.size()) fail(ErrorCode::invalid_argument, "example index out of range");
  if (state.alpha.size() != data.size() || state.v.size() != data.dim() ||
      state.w.size() != data.dim()) {
    fail(ErrorCode::dimension_mismatch, "dual state does not match the dataset");
  }
}

double clip01(double s) { return std::clamp(s, 0.0, 1.0); }

}  // namespace

double sdca_increment(SdcaOption option, const SdcaStepContext& ctx, const ProblemSpec& problem,
                      const LabeledDataset& data, const DualState& state, std::size_t i,
                      double p_i) {
  check_state(state, data, i);
  const LossKind loss = problem.loss;
  const bool hinge = loss == LossKind::hinge;
  const double a = state.alpha[i];
  const double q = data.squared_norm(i);
  // With x_i = 0 the subproblem is max -phi*(alpha); jump to its maximizer.
  if (q == 0.0) return conjugate_minimizer(loss) - a;

  const double big_lambda = problem.lambda * static_cast<double>(data.size());
  const double m = data.label(i) * dot(data.features(i), state.w);
  const double r2 = ctx.norm_ratio * ctx.norm_ratio;

  if (option == SdcaOption::exact) {
    if (hinge) return std::clamp((1.0 - m) / (q / big_lambda), -a, 1.0 - a);
    return std::max((1.0 - m - 0.5 * a) / (0.5 + q / big_lambda), -a);
  }

  const double c = subgradient_dual_coordinate(loss, m) - a;
  if (c == 0.0) return 0.0;
  double s = 0.0;
  switch (option) {
    case SdcaOption::line_search:
      s = hinge ? (1.0 - m) / (c * q / big_lambda)
                : (1.0 - m - 0.5 * a) / (c * (0.5 + q / big_lambda));
      break;
    case SdcaOption::smooth_bound: {
      const double gamma = hinge ? 0.0 : 1.0 / (2.0 * q);
      const double gap_term = loss_value(loss, m) + conjugate_value(loss, a) + a * m;
      const double zz = c * c * q;
      s = (gap_term + 0.5 * gamma * zz) / (zz * (gamma + r2 / big_lambda));
      break;
    }
    case SdcaOption::lipschitz: {
      const double gap_term = loss_value(loss, m) + conjugate_value(loss, a) + a * m;
      s = gap_term / (4.0 * q * r2 / big_lambda);
      break;
    }
    case SdcaOption::fixed:
      if (!(p_i > 0.0)) fail(ErrorCode::invalid_argument, "sampling probability must be positive");
      s = ctx.step / (static_cast<double>(data.size()) * p_i);
      break;
    case SdcaOption::exact:
      break;
  }
  return clip01(s) * c;
}

double apply_dual_increment(DualState& state, const ProblemSpec& problem,
                            const LabeledDataset& data, std::size_t i, double delta) {
  check_state(state, data, i);
  const double old = state.alpha[i];
  const double updated = std::clamp(old + delta, 0.0, dual_upper_bound(problem.loss));
  const double applied = updated - old;
  state.alpha[i] = updated;
  ++state.t;
  if (applied == 0.0) return 0.0;
  const double coef =
      applied * data.label(i) / (problem.lambda * static_cast<double>(data.size()));
  const SparseVector& x = data.features(i);
  const auto idx = x.indices();
  const auto val = x.values();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const Index j = idx[k];
    state.v[j] += coef * val[k];
    state.w[j] = conjugate_gradient_coord(problem.reg, state.v[j]);
  }
  return applied;
}

double sdca_step(DualState& state, SdcaOption option, const SdcaStepContext& ctx,
                 const ProblemSpec& problem, const LabeledDataset& data, std::size_t i,
                 double p_i) {
  const double delta = sdca_increment(option, ctx, problem, data, state, i, p_i);
  return apply_dual_increment(state, problem, data, i, delta);
}

double dual_objective(std::span<const double> alpha, std::span<const double> v,
                      const LabeledDataset& data, const ProblemSpec& problem) {
  if (alpha.size() != data.size() || v.size() != data.dim()) {
    fail(ErrorCode::dimension_mismatch, "dual_objective: size mismatch");
  }
  double sum = 0.0;
  for (double a : alpha) sum -= conjugate_value(problem.loss, a);
  return sum / static_cast<double>(data.size()) - problem.lambda * conjugate_value(problem.reg, v);
}

double dual_objective(const DualState& state, const LabeledDataset& data,
                      const ProblemSpec& problem) {
  return dual_objective(state.alpha, state.v, data, problem);
}

DenseVector recompute_v(std::span<const double> alpha, const LabeledDataset& data,
                        const ProblemSpec& problem) {
  if (alpha.size() != data.size()) fail(ErrorCode::dimension_mismatch, "recompute_v: size mismatch");
  DenseVector v(data.dim(), 0.0);
  const double scale = 1.0 / (problem.lambda * static_cast<double>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (alpha[i] != 0.0) axpy_sparse(alpha[i] * data.label(i) * scale, data.features(i), v);
  }
  return v;
}

SamplingDistribution sdca_distribution(SdcaSampling sampling, const LabeledDataset& data,
                                       const ProblemSpec& problem, double norm_ratio) {
  switch (sampling) {
    case SdcaSampling::uniform:
      return build_uniform(data.size());
    case SdcaSampling::smooth: {
      const auto gamma = per_example_constants(LossKind::squared_hinge, data).gamma;
      return build_sdca_smooth(gamma, problem.lambda, data.size(), norm_ratio).distribution;
    }
    case SdcaSampling::lipschitz:
      return build_lipschitz(per_example_constants(LossKind::hinge, data).lipschitz);
  }
  fail(ErrorCode::invalid_argument, "unknown sampling");
}

namespace {

using Clock = std::chrono::steady_clock;

// Average of a vector over iterates [start, K) when only a few coordinates
// change per step: each coordinate remembers when it last changed.
class TailAverage {
 public:
  TailAverage(std::size_t size, std::uint64_t start)
      : acc_(size, 0.0), last_(size, 0), start_(start) {}

  // Coordinate j held `old` until iterate t replaced it.
  void record(std::size_t j, double old, std::uint64_t t) {
    const std::uint64_t from = std::max(last_[j], start_);
    if (t > from) acc_[j] += old * static_cast<double>(t - from);
    last_[j] = t;
  }

  DenseVector value(std::span<const double> current, std::uint64_t k) const {
    DenseVector out(acc_.size(), 0.0);
    if (k <= start_) return out;
    const double len = static_cast<double>(k - start_);
    for (std::size_t j = 0; j < acc_.size(); ++j) {
      const std::uint64_t from = std::max(last_[j], start_);
      const double tail = k > from ? current[j] * static_cast<double>(k - from) : 0.0;
      out[j] = (acc_[j] + tail) / len;
    }
    return out;
  }

 private:
  std::vector<double> acc_;
  std::vector<std::uint64_t> last_;
  std::uint64_t start_;
};

}  // namespace

SdcaResult run_sdca(const LabeledDataset& data, const ProblemSpec& problem,
                    const SdcaConfig& config, const LabeledDataset* test) {
  config.validate(problem);
  if (data.empty()) fail(ErrorCode::invalid_argument, "run_sdca: empty dataset");
  if (test && test->dim() != data.dim()) {
    fail(ErrorCode::dimension_mismatch, "test set dimension differs from training set");
  }
  const std::size_t n = data.size();
  const double nd = static_cast<double>(n);
  const std::uint64_t total = config.iterations.value_or(config.epochs * n);

  const SamplingDistribution uniform = build_uniform(n);
  const SamplingDistribution main = sdca_distribution(config.sampling, data, problem, config.norm_ratio);

  SdcaResult result;
  result.state = DualState::zero(data);
  for (double q : data.squared_norms()) result.degenerate += q == 0.0 ? 1 : 0;

  // Option V step for each phase: the largest s keeping every s/(n p_i) <= 1
  // and the ascent bound valid.
  SdcaStepContext uniform_ctx{config.norm_ratio, 0.0, 1.0};
  SdcaStepContext main_ctx{config.norm_ratio, 0.0, 1.0};
  if (problem.loss == LossKind::squared_hinge) {
    const auto gamma = per_example_constants(problem.loss, data).gamma;
    uniform_ctx.step = max_feasible_dual_step(uniform.probabilities(), gamma, problem.lambda,
                                              config.norm_ratio);
    main_ctx.step = max_feasible_dual_step(main.probabilities(), gamma, problem.lambda,
                                           config.norm_ratio);
  }

  const bool lipschitz_mode = config.sampling == SdcaSampling::lipschitz;
  if (lipschitz_mode) {
    const auto& lip = data.norms();
    double sum = 0.0;
    double lmin = std::numeric_limits<double>::infinity();
    for (double l : lip) {
      sum += l;
      lmin = std::min(lmin, l);
    }
    result.rho = nd * lmin / sum;
    main_ctx.rho = result.rho;
    if (result.rho > 0.0) {
      const double r2 = config.norm_ratio * config.norm_ratio;
      const double g = 4.0 * r2 * sum * sum / (nd * nd);
      const double t0 =
          std::ceil(nd / result.rho * std::log(2.0 * problem.lambda * nd / (result.rho * g)));
      result.t0_reference = t0 > 0.0 ? static_cast<std::uint64_t>(t0) : 0;
    }
  }
  result.average_start = config.average_start.value_or(total / 2);
  if (lipschitz_mode && result.average_start >= total && total > 0) {
    fail(ErrorCode::config, "averaging start must be below the iteration count");
  }
  TailAverage avg_alpha(lipschitz_mode ? n : 0, result.average_start);
  TailAverage avg_v(lipschitz_mode ? data.dim() : 0, result.average_start);
  TailAverage avg_w(lipschitz_mode ? data.dim() : 0, result.average_start);

  Rng rng(config.seed);
  const auto start = Clock::now();
  DualState& state = result.state;

  auto in_uniform_phase = [&](std::uint64_t t) { return config.uniform_first_epoch && t < n; };

  auto checkpoint = [&](std::uint64_t t) {
    TraceRecord rec;
    rec.epoch = static_cast<double>(t) / nd;
    rec.primal = primal_objective(state.w, data, problem);
    rec.dual = dual_objective(state, data, problem);
    rec.gap = rec.primal - *rec.dual;
    rec.variance = gradient_variance(state.w, data, problem, in_uniform_phase(t) ? uniform : main);
    if (test) rec.test_error = test_error(state.w, *test);
    if (lipschitz_mode && t > result.average_start) {
      const auto w_bar = avg_w.value(state.w, t);
      rec.avg_primal = primal_objective(w_bar, data, problem);
      rec.avg_dual = dual_objective(avg_alpha.value(state.alpha, t), avg_v.value(state.v, t),
                                    data, problem);
    }
    if (config.timing) rec.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    result.trace.push_back(std::move(rec));
  };

  checkpoint(0);
  for (std::uint64_t t = 0; t < total; ++t) {
    const bool uniform_phase = in_uniform_phase(t);
    const SamplingDistribution& dist = uniform_phase ? uniform : main;
    const SdcaStepContext& ctx = uniform_phase ? uniform_ctx : main_ctx;
    const std::size_t i = dist.draw(rng);
    const double delta = sdca_increment(config.option, ctx, problem, data, state, i,
                                        dist.probability(i));
    if (lipschitz_mode) {
      avg_alpha.record(i, state.alpha[i], t + 1);
      for (Index j : data.features(i).indices()) {
        avg_v.record(j, state.v[j], t + 1);
        avg_w.record(j, state.w[j], t + 1);
      }
    }
    apply_dual_increment(state, problem, data, i, delta);
    if ((t + 1) % n == 0 || t + 1 == total) checkpoint(t + 1);
  }

  if (lipschitz_mode && total > result.average_start) {
    result.average_w = avg_w.value(state.w, total);
    result.average_alpha = avg_alpha.value(state.alpha, total);
  }
  return result;
}

}  // namespace isamp
