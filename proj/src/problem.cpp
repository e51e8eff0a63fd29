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

#include "isamp/problem.hpp"

#include <cmath>
#include <string>

#include "isamp/error.hpp"
#include "isamp/loss.hpp"

namespace isamp {

void ProblemSpec::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    fail(ErrorCode::config, "lambda must be a positive finite number");
  }
  if (l2_in_loss && reg.kind != RegKind::none) {
    fail(ErrorCode::config, "composite mode folds the l2 term into the loss; regularizer must be none");
  }
  if (reg.kind == RegKind::l2_plus_scaled_l1 && !(reg.l1_ratio >= 0.0)) {
    fail(ErrorCode::config, "l1 ratio must be nonnegative");
  }
  if (radius && !(*radius > 0.0)) fail(ErrorCode::config, "projection radius must be positive");
}

ProblemSpec dual_svm_problem(LossKind loss, double lambda) {
  ProblemSpec p;
  p.loss = loss;
  p.reg = Regularizer::l2();
  p.lambda = lambda;
  p.validate();
  return p;
}

ProblemSpec composite_svm_problem(LossKind loss, double lambda, bool project) {
  ProblemSpec p;
  p.loss = loss;
  p.reg = Regularizer::none();
  p.lambda = lambda;
  p.l2_in_loss = true;
  if (project) p.radius = 1.0 / std::sqrt(lambda);
  p.validate();
  return p;
}

ProblemSpec l1_svm_problem(LossKind loss, double lambda, bool project) {
  ProblemSpec p;
  p.loss = loss;
  p.reg = Regularizer::l1();
  p.lambda = lambda;
  if (project) p.radius = 1.0 / lambda;
  p.validate();
  return p;
}

ProblemSpec smoothed_l1_svm_problem(LossKind loss, double lambda, double epsilon) {
  if (!(epsilon > 0.0)) fail(ErrorCode::config, "smoothing accuracy epsilon must be positive");
  if (!(lambda > 0.0)) fail(ErrorCode::config, "lambda must be positive");
  const double delta = lambda * lambda * epsilon;
  ProblemSpec p;
  p.loss = loss;
  p.reg = Regularizer::l2_plus_scaled_l1(lambda / delta);
  p.lambda = delta;
  p.validate();
  return p;
}

std::string_view to_string(LossKind kind) noexcept {
  return kind == LossKind::hinge ? "hinge" : "sqhinge";
}

std::string_view to_string(RegKind kind) noexcept {
  switch (kind) {
    case RegKind::none: return "none";
    case RegKind::l2: return "l2";
    case RegKind::l1: return "l1";
    case RegKind::l2_plus_scaled_l1: return "l2+l1";
  }
  return "?";
}

LossKind parse_loss_kind(std::string_view text) {
  if (text == "hinge") return LossKind::hinge;
  if (text == "sqhinge" || text == "squared_hinge" || text == "squared-hinge") {
    return LossKind::squared_hinge;
  }
  fail(ErrorCode::config, "unknown loss '" + std::string(text) + "' (expected hinge|sqhinge)");
}

ExampleGradient example_gradient(const ProblemSpec& problem, const LabeledDataset& data,
                                 std::size_t i, std::span<const double> w) {
  ExampleGradient g;
  const double y = data.label(i);
  g.margin = y * dot(data.features(i), w);
  g.coef = loss_derivative(problem.loss, g.margin) * y;
  g.w_scale = problem.l2_in_loss ? problem.lambda : 0.0;
  return g;
}

double example_loss(const ProblemSpec& problem, const LabeledDataset& data, std::size_t i,
                    std::span<const double> w) {
  const double m = data.label(i) * dot(data.features(i), w);
  double v = loss_value(problem.loss, m);
  if (problem.l2_in_loss) v += 0.5 * problem.lambda * squared_norm(w);
  return v;
}

}  // namespace isamp
