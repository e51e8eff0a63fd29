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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "isamp/diagnostics.hpp"
#include "isamp/error.hpp"
#include "isamp/experiment.hpp"
#include "isamp/loss.hpp"
#include "isamp/sdca.hpp"
#include "oracle.hpp"

using namespace isamp;

namespace {

const SdcaStepContext kDefaultCtx{1.0, 0.0, 1.0};

// Random feasible dual state with a consistent v and w.
DualState random_state(const LabeledDataset& data, const ProblemSpec& problem, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DualState s = DualState::zero(data);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double a = problem.loss == LossKind::hinge ? unit(rng) : 3.0 * unit(rng);
    apply_dual_increment(s, problem, data, i, unit(rng) < 0.2 ? 0.0 : a);
  }
  s.t = 0;
  return s;
}

double dual_after(const DualState& state, const ProblemSpec& problem, const LabeledDataset& data,
                  std::size_t i, double delta) {
  DualState copy = state;
  apply_dual_increment(copy, problem, data, i, delta);
  return dual_objective(copy, data, problem);
}

}  // namespace

TEST_SUITE("solver_sdca") {
  TEST_CASE("hinge one-step example closes the gap") {
    const auto data = test::one_example(1, {{0, 1}}, 1.0);
    const auto problem = dual_svm_problem(LossKind::hinge, 1.0);
    DualState state = DualState::zero(data);
    const double delta = sdca_increment(SdcaOption::exact, kDefaultCtx, problem, data, state, 0, 1.0);
    CHECK(delta == 1.0);
    apply_dual_increment(state, problem, data, 0, delta);
    CHECK(state.alpha[0] == 1.0);
    CHECK(state.w[0] == 1.0);
    CHECK(primal_objective(state.w, data, problem) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(dual_objective(state, data, problem) == doctest::Approx(0.5).epsilon(1e-15));
    const auto ref = oracle::maximize_1d_dual(problem, data, std::vector<double>{0.0},
                                              std::vector<double>{0.0}, 0);
    CHECK(std::abs(ref.arg - 1.0) <= 1e-9);
  }

  TEST_CASE("squared hinge one-step example") {
    const auto data = test::one_example(1, {{0, 1}}, 1.0);
    const auto problem = dual_svm_problem(LossKind::squared_hinge, 1.0);
    DualState state = DualState::zero(data);
    const double delta = sdca_increment(SdcaOption::exact, kDefaultCtx, problem, data, state, 0, 1.0);
    CHECK(delta == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    const auto ref = oracle::maximize_1d_dual(problem, data, std::vector<double>{0.0},
                                              std::vector<double>{0.0}, 0);
    CHECK(std::abs(ref.arg - delta) <= 1e-9);
  }

  TEST_CASE("exact step is a fixed point at the optimum and clips deep margins") {
    const auto data = test::one_example(1, {{0, 1}}, 1.0);
    for (LossKind loss : {LossKind::hinge, LossKind::squared_hinge}) {
      const auto problem = dual_svm_problem(loss, 1.0);
      DualState state = DualState::zero(data);
      sdca_step(state, SdcaOption::exact, kDefaultCtx, problem, data, 0, 1.0);
      CHECK(std::abs(sdca_increment(SdcaOption::exact, kDefaultCtx, problem, data, state, 0, 1.0)) <= 1e-15);
    }
    // Deep margin with alpha = 0: no update.
    const auto deep = test::one_example(1, {{0, 1}}, 1.0);
    const auto problem = dual_svm_problem(LossKind::hinge, 1.0);
    DualState state = DualState::zero(deep);
    state.v[0] = state.w[0] = 5.0;
    CHECK(sdca_increment(SdcaOption::exact, kDefaultCtx, problem, deep, state, 0, 1.0) == 0.0);
    const auto sq = dual_svm_problem(LossKind::squared_hinge, 1.0);
    CHECK(sdca_increment(SdcaOption::exact, kDefaultCtx, sq, deep, state, 0, 1.0) == 0.0);
  }

  TEST_CASE("exact step matches the numeric maximizer") {
    const auto data = test::random_dataset(40, 6, 51, 1.2);
    Rng rng(8);
    for (LossKind loss : {LossKind::hinge, LossKind::squared_hinge}) {
      for (double lambda : {1e-3, 0.1, 2.0}) {
        const auto problem = dual_svm_problem(loss, lambda);
        for (int trial = 0; trial < 30; ++trial) {
          const auto state = random_state(data, problem, rng);
          const std::size_t i = trial % data.size();
          const double delta =
              sdca_increment(SdcaOption::exact, kDefaultCtx, problem, data, state, i, 1.0);
          const auto ref = oracle::maximize_1d_dual(problem, data, state.alpha, state.v, i);
          CHECK(std::abs(delta - ref.arg) <= 1e-8 * std::max(1.0, std::abs(ref.arg)));
        }
      }
    }
  }

  TEST_CASE("every option ascends and none beats the exact step") {
    const auto data = test::random_dataset(30, 5, 52, 1.0);
    Rng rng(9);
    for (LossKind loss : {LossKind::hinge, LossKind::squared_hinge}) {
      for (const auto& problem : {dual_svm_problem(loss, 0.05),
                                  smoothed_l1_svm_problem(loss, 0.3, 1.0)}) {
        const auto dist = sdca_distribution(
            loss == LossKind::hinge ? SdcaSampling::lipschitz : SdcaSampling::smooth, data, problem, 1.0);
        SdcaStepContext ctx = kDefaultCtx;
        if (loss == LossKind::squared_hinge) {
          ctx.step = max_feasible_dual_step(
              dist.probabilities(), per_example_constants(loss, data).gamma, problem.lambda, 1.0);
        }
        std::vector<SdcaOption> options{SdcaOption::exact, SdcaOption::line_search,
                                        SdcaOption::smooth_bound};
        options.push_back(loss == LossKind::hinge ? SdcaOption::lipschitz : SdcaOption::fixed);
        for (int trial = 0; trial < 40; ++trial) {
          const auto state = random_state(data, problem, rng);
          const std::size_t i = trial % data.size();
          const double d0 = dual_objective(state, data, problem);
          const auto best = oracle::maximize_1d_dual(problem, data, state.alpha, state.v, i);
          const double n = static_cast<double>(data.size());
          for (SdcaOption option : options) {
            const double delta =
                sdca_increment(option, ctx, problem, data, state, i, dist.probability(i));
            const double d1 = dual_after(state, problem, data, i, delta);
            CHECK_MESSAGE(d1 >= d0 - 1e-12, to_string(option));
            CHECK_MESSAGE(d1 - d0 <= best.value / n + 1e-12, to_string(option));
          }
        }
      }
    }
  }

  TEST_CASE("option V expected ascent bound") {
    const auto data = test::random_dataset(25, 5, 53, 1.5);
    Rng rng(10);
    for (double lambda : {1e-2, 0.3}) {
      const auto problem = dual_svm_problem(LossKind::squared_hinge, lambda);
      const auto gamma = per_example_constants(LossKind::squared_hinge, data).gamma;
      const auto smooth = build_sdca_smooth(gamma, lambda, data.size(), 1.0);
      const SdcaStepContext ctx{1.0, smooth.step, 1.0};
      const double n = static_cast<double>(data.size());
      for (int trial = 0; trial < 50; ++trial) {
        const auto state = random_state(data, problem, rng);
        const double d0 = dual_objective(state, data, problem);
        const double p0 = primal_objective(state.w, data, problem);
        double expected = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
          const double pi = smooth.distribution.probability(i);
          const double delta = sdca_increment(SdcaOption::fixed, ctx, problem, data, state, i, pi);
          expected += pi * (dual_after(state, problem, data, i, delta) - d0);
        }
        CHECK(expected >= smooth.step / n * (p0 - d0) - 1e-12);
      }
    }
  }

  TEST_CASE("option V with equal constants is plain fixed-step ascent") {
    SyntheticSpec spec;
    spec.n = 40;
    spec.d = 8;
    spec.nnz = 8;
    spec.sigma = 0.0;
    const auto data = generate_synthetic(spec);
    const auto problem = dual_svm_problem(LossKind::squared_hinge, 0.1);
    const auto dist = sdca_distribution(SdcaSampling::smooth, data, problem, 1.0);
    for (double p : dist.probabilities()) CHECK(p == doctest::Approx(1.0 / 40).epsilon(1e-12));
    const auto gamma = per_example_constants(LossKind::squared_hinge, data).gamma;
    const double s = build_sdca_smooth(gamma, 0.1, 40, 1.0).step;
    const SdcaStepContext ctx{1.0, s, 1.0};
    DualState a = DualState::zero(data);
    DualState b = DualState::zero(data);
    Rng rng(3);
    for (int t = 0; t < 400; ++t) {
      const auto i = dist.draw(rng);
      sdca_step(a, SdcaOption::fixed, ctx, problem, data, i, dist.probability(i));
      const double m = data.label(i) * dot(data.features(i), b.w);
      const double beta = 2.0 * std::max(0.0, 1.0 - m);
      apply_dual_increment(b, problem, data, i, s * (beta - b.alpha[i]));
    }
    CHECK(test::max_abs_diff(a.alpha, b.alpha) <= 1e-12);
  }

  TEST_CASE("zero-norm examples jump to the conjugate minimizer") {
    const LabeledDataset data({{SparseVector(2), 1.0}, {test::sparse(2, {{0, 1}}), -1.0}}, 2);
    for (LossKind loss : {LossKind::hinge, LossKind::squared_hinge}) {
      const auto problem = dual_svm_problem(loss, 0.5);
      DualState state = DualState::zero(data);
      sdca_step(state, SdcaOption::exact, kDefaultCtx, problem, data, 0, 0.5);
      CHECK(state.alpha[0] == conjugate_minimizer(loss));
      CHECK(state.v == std::vector<double>{0.0, 0.0});
    }
  }

  TEST_CASE("dual objective examples") {
    const auto data = test::random_dataset(20, 4, 54);
    const auto sq = dual_svm_problem(LossKind::squared_hinge, 0.1);
    CHECK(dual_objective(DualState::zero(data), data, sq) == 0.0);
    const auto hinge = dual_svm_problem(LossKind::hinge, 0.1);
    CHECK(dual_objective(DualState::zero(data), data, hinge) >= 0.0);
    DualState bad = DualState::zero(data);
    bad.alpha[0] = 1.5;
    CHECK_THROWS_AS(dual_objective(bad, data, hinge), Error);
  }

  TEST_CASE("dual objective matches the oracle") {
    const auto data = test::random_dataset(20, 4, 55, 1.0);
    Rng rng(11);
    for (LossKind loss : {LossKind::hinge, LossKind::squared_hinge}) {
      for (const auto& problem : {dual_svm_problem(loss, 0.2), smoothed_l1_svm_problem(loss, 0.5, 0.4)}) {
        const auto state = random_state(data, problem, rng);
        CHECK(dual_objective(state, data, problem) ==
              doctest::Approx(oracle::dual(problem, data, state.alpha)).epsilon(1e-12));
        CHECK(primal_objective(state.w, data, problem) ==
              doctest::Approx(oracle::primal(problem, data, state.w)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("config validation") {
    SdcaConfig c;
    c.option = SdcaOption::fixed;
    CHECK_THROWS_AS(c.validate(dual_svm_problem(LossKind::hinge, 0.1)), Error);
    CHECK_NOTHROW(c.validate(dual_svm_problem(LossKind::squared_hinge, 0.1)));
    c.option = SdcaOption::lipschitz;
    CHECK_THROWS_AS(c.validate(dual_svm_problem(LossKind::squared_hinge, 0.1)), Error);
    c.option = SdcaOption::exact;
    c.sampling = SdcaSampling::smooth;
    CHECK_THROWS_AS(c.validate(dual_svm_problem(LossKind::hinge, 0.1)), Error);
    c.sampling = SdcaSampling::lipschitz;
    CHECK_THROWS_AS(c.validate(dual_svm_problem(LossKind::squared_hinge, 0.1)), Error);
    c.sampling = SdcaSampling::uniform;
    ProblemSpec l1 = dual_svm_problem(LossKind::hinge, 0.1);
    l1.reg = Regularizer::l1();
    CHECK_THROWS_AS(c.validate(l1), Error);
    CHECK(parse_sdca_option("optionIII") == SdcaOption::smooth_bound);
    CHECK(to_string(SdcaOption::fixed) == "optionV");
  }

  TEST_CASE("zero epochs gives the initial record") {
    const auto data = test::random_dataset(20, 4, 56);
    SdcaConfig config;
    config.epochs = 0;
    const auto r = run_sdca(data, dual_svm_problem(LossKind::squared_hinge, 0.1), config);
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].primal == doctest::Approx(1.0));
    CHECK(*r.trace[0].dual == 0.0);
    CHECK(*r.trace[0].gap == doctest::Approx(1.0));
  }

  TEST_CASE("runs are deterministic and respect weak duality") {
    const auto data = test::random_dataset(60, 6, 57, 1.2);
    for (LossKind loss : {LossKind::hinge, LossKind::squared_hinge}) {
      for (SdcaSampling sampling : {SdcaSampling::uniform, loss == LossKind::hinge
                                                               ? SdcaSampling::lipschitz
                                                               : SdcaSampling::smooth}) {
        SdcaConfig config;
        config.sampling = sampling;
        config.epochs = 6;
        config.seed = 21;
        const auto problem = dual_svm_problem(loss, 0.02);
        const auto a = run_sdca(data, problem, config);
        const auto b = run_sdca(data, problem, config);
        CHECK(trace_csv(a.trace) == trace_csv(b.trace));
        CHECK(a.state.alpha == b.state.alpha);
        REQUIRE(a.trace.size() == 7);
        for (const auto& rec : a.trace) {
          CHECK(*rec.gap >= -1e-10);
          CHECK(*rec.gap == doctest::Approx(rec.primal - *rec.dual).epsilon(1e-12));
        }
        for (double x : a.state.alpha) {
          CHECK(x >= 0.0);
          CHECK(x <= dual_upper_bound(loss));
        }
        if (sampling == SdcaSampling::lipschitz) {
          CHECK(a.rho <= 1.0);
          CHECK(a.rho > 0.0);
          CHECK(a.average_start == 3 * data.size());
          REQUIRE(a.average_w.size() == data.dim());
          REQUIRE(a.trace.back().avg_dual.has_value());
          CHECK(a.trace.back().avg_primal.value() >= a.trace.back().avg_dual.value() - 1e-10);
          CHECK(a.t0_reference.has_value());
        }
      }
    }
  }

  TEST_CASE("converges to the reference optimum") {
    const auto data = test::random_dataset(30, 5, 58, 1.0);
    for (const auto& problem : {dual_svm_problem(LossKind::squared_hinge, 0.05),
                                smoothed_l1_svm_problem(LossKind::squared_hinge, 0.2, 0.5)}) {
      const auto ref = oracle::solve_exact_tiny(data, problem);
      for (SdcaOption option : {SdcaOption::exact, SdcaOption::fixed}) {
        SdcaConfig config;
        config.option = option;
        config.sampling = SdcaSampling::smooth;
        config.epochs = option == SdcaOption::exact ? 400 : 4000;
        const auto r = run_sdca(data, problem, config);
        INFO(to_string(option));
        CHECK(*r.trace.back().gap <= 1e-9);
        CHECK(r.trace.back().primal == doctest::Approx(ref.primal).epsilon(1e-8));
        CHECK(test::max_abs_diff(r.state.w, ref.w) <= 1e-4);
      }
    }
  }

  TEST_CASE("hinge optimum matches the reference") {
    const auto data = test::random_dataset(20, 4, 59, 0.5);
    const auto problem = dual_svm_problem(LossKind::hinge, 0.1);
    const auto ref = oracle::solve_exact_tiny(data, problem, 1e-10);
    SdcaConfig config;
    config.epochs = 500;
    const auto r = run_sdca(data, problem, config);
    CHECK(*r.trace.back().gap <= 1e-8);
    CHECK(r.trace.back().primal == doctest::Approx(ref.primal).epsilon(1e-7));
  }
}
