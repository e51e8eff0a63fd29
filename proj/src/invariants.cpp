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

#include "isamp/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "isamp/diagnostics.hpp"
#include "isamp/error.hpp"
#include "isamp/loss.hpp"
#include "isamp/regularizer.hpp"
#include "isamp/sampling.hpp"
#include "isamp/sdca.hpp"
#include "isamp/sgd.hpp"

namespace isamp {

namespace {

double coord_conjugate(const Regularizer& reg, double v) {
  if (reg.kind == RegKind::l2) return 0.5 * v * v;
  const double t = std::abs(v) - reg.l1_ratio;
  return t > 0.0 ? 0.5 * t * t : 0.0;
}

CheckResult check_distribution(const std::string& name, const SamplingDistribution& dist) {
  double sum = 0.0;
  double min_p = 1.0;
  for (double p : dist.probabilities()) {
    sum += p;
    min_p = std::min(min_p, p);
  }
  const auto mass = dist.implied_mass();
  double worst = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    worst = std::max(worst, std::abs(mass[i] - dist.probability(i)));
  }
  const bool ok = std::abs(sum - 1.0) <= 1e-12 && min_p > 0.0 && worst <= 1e-12;
  return {name, ok,
          "sum-1=" + format_double(sum - 1.0) + " min_p=" + format_double(min_p) +
              " table_err=" + format_double(worst)};
}

DenseVector random_iterate(std::size_t d, double radius, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseVector w(d);
  for (double& v : w) v = gauss(rng);
  const double nw = norm(w);
  if (nw > 0.0) {
    for (double& v : w) v *= 0.5 * radius / nw;
  }
  return w;
}

}  // namespace

std::vector<CheckResult> run_invariant_checks(const LabeledDataset& data,
                                              const ExperimentConfig& config,
                                              std::uint64_t max_epochs) {
  std::vector<CheckResult> out;
  const std::size_t n = data.size();
  const ProblemSpec sgd_problem = config.sgd_problem();
  const ProblemSpec sdca_problem = config.sdca_problem();
  const std::uint64_t epochs = std::min(config.epochs, max_epochs);
  const std::uint64_t seed = config.seeds.empty() ? 1 : config.seeds.front();
  Rng rng(seed);

  // Sampling tables.
  std::vector<std::pair<std::string, SamplingDistribution>> dists;
  dists.emplace_back("sampling.uniform", build_uniform(n));
  dists.emplace_back("sampling.sgd_lipschitz",
                     sgd_distribution(SgdSampling::lipschitz, data, sgd_problem));
  const SdcaSampling importance = config.loss == LossKind::squared_hinge ? SdcaSampling::smooth
                                                                         : SdcaSampling::lipschitz;
  dists.emplace_back("sampling.sdca_" + std::string(to_string(importance)),
                     sdca_distribution(importance, data, sdca_problem, config.norm_ratio));
  for (const auto& [name, dist] : dists) out.push_back(check_distribution(name, dist));

  // Unbiasedness of the weighted gradient and the two variance forms.
  const double radius = sgd_problem.radius.value_or(1.0);
  const DenseVector w = random_iterate(data.dim(), radius, rng);
  const DenseVector gbar = mean_gradient(w, data, sgd_problem);
  for (const auto& [name, dist] : dists) {
    DenseVector acc(data.dim(), 0.0);
    double w_scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto eg = example_gradient(sgd_problem, data, i, w);
      const double p = dist.probability(i);
      const double weight = p / (static_cast<double>(n) * p);
      axpy_sparse(weight * eg.coef, data.features(i), acc);
      w_scale += weight * eg.w_scale;
    }
    double err = 0.0;
    for (std::size_t j = 0; j < acc.size(); ++j) {
      err = std::max(err, std::abs(acc[j] + w_scale * w[j] - gbar[j]));
    }
    const double scale = std::max(1.0, norm(gbar));
    out.push_back({"unbiased." + name, err <= 1e-10 * scale, "max_err=" + format_double(err)});

    const double v1 = gradient_variance(w, data, sgd_problem, dist);
    const double v2 = gradient_variance_moment_form(w, data, sgd_problem, dist);
    const double diff = std::abs(v1 - v2);
    out.push_back({"variance_forms." + name, v1 >= 0.0 && diff <= 1e-10 * std::max(1.0, v1),
                   "enumerated=" + format_double(v1) + " moment=" + format_double(v2)});
  }

  // Projection bound along an importance-sampled SGD run.
  if (sgd_problem.radius) {
    const SamplingDistribution& dist = dists[1].second;
    PrimalState state{DenseVector(data.dim(), 0.0), 0};
    const StepSchedule schedule = config.schedule();
    double worst = 0.0;
    for (std::uint64_t t = 0; t < epochs * n; ++t) {
      const std::size_t i = dist.draw(rng);
      sgd_step(state, data, sgd_problem, i, dist.probability(i), step_size(schedule, t + 1));
      worst = std::max(worst, norm(state.w) - *sgd_problem.radius);
    }
    out.push_back({"sgd.projection", worst <= 1e-10,
                   "max ||w|| - R = " + format_double(worst)});
  }

  // Dual runs: per-step monotonicity and feasibility, per-epoch gap and v.
  for (const SdcaSampling sampling : {SdcaSampling::uniform, importance}) {
    const std::string tag = "sdca." + std::string(to_string(sampling));
    const SamplingDistribution dist = sdca_distribution(sampling, data, sdca_problem, config.norm_ratio);
    SdcaStepContext ctx{config.norm_ratio, 0.0, 1.0};
    DualState state = DualState::zero(data);
    double worst_drop = 0.0;
    double worst_gap = 0.0;
    double worst_v = 0.0;
    bool feasible = true;
    const double upper = dual_upper_bound(sdca_problem.loss);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::uint64_t t = 0; t < epochs * n; ++t) {
      const std::size_t i = dist.draw(rng);
      const double a_old = state.alpha[i];
      double before = -inv_n * conjugate_value(sdca_problem.loss, a_old);
      const auto idx = data.features(i).indices();
      for (Index j : idx) before -= sdca_problem.lambda * coord_conjugate(sdca_problem.reg, state.v[j]);
      sdca_step(state, SdcaOption::exact, ctx, sdca_problem, data, i, dist.probability(i));
      const double a_new = state.alpha[i];
      if (!(a_new >= 0.0 && a_new <= upper)) {
        feasible = false;
        break;
      }
      double after = -inv_n * conjugate_value(sdca_problem.loss, a_new);
      for (Index j : idx) after -= sdca_problem.lambda * coord_conjugate(sdca_problem.reg, state.v[j]);
      worst_drop = std::max(worst_drop, before - after);
      if ((t + 1) % n == 0) {
        const double gap = primal_objective(state.w, data, sdca_problem) -
                           dual_objective(state, data, sdca_problem);
        worst_gap = std::min(worst_gap, gap);
        const DenseVector v = recompute_v(state.alpha, data, sdca_problem);
        double diff = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) diff += (v[j] - state.v[j]) * (v[j] - state.v[j]);
        worst_v = std::max(worst_v, std::sqrt(diff) / std::max(1.0, norm(v)));
      }
    }
    out.push_back({tag + ".feasible", feasible, feasible ? "all alpha in domain" : "alpha left domain"});
    out.push_back({tag + ".monotone", worst_drop <= 1e-12, "max drop=" + format_double(worst_drop)});
    out.push_back({tag + ".weak_duality", worst_gap >= -1e-10, "min gap=" + format_double(worst_gap)});
    out.push_back({tag + ".v_consistent", worst_v <= 1e-9, "max rel err=" + format_double(worst_v)});
  }

  // Constant ratios are at least 1 by Cauchy-Schwarz.
  const ConstantRatios ratios = compute_ratios(data, config);
  out.push_back({"ratios.at_least_one", ratios.sgd >= 1.0 - 1e-12 && ratios.sdca >= 1.0 - 1e-12,
                 "sgd=" + format_double(ratios.sgd) + " sdca=" + format_double(ratios.sdca)});
  return out;
}

}  // namespace isamp
