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
#include <string_view>

#include "isamp/dataset.hpp"

namespace isamp {

enum class LossKind { hinge, squared_hinge };

enum class RegKind {
  none,               // r = 0
  l2,                 // r = 1/2 ||w||^2
  l1,                 // r = ||w||_1
  l2_plus_scaled_l1,  // r = 1/2 ||w||^2 + k ||w||_1
};

struct Regularizer {
  RegKind kind = RegKind::l2;
  double l1_ratio = 0.0;  // k, only used by l2_plus_scaled_l1

  static Regularizer none() { return {RegKind::none, 0.0}; }
  static Regularizer l2() { return {RegKind::l2, 0.0}; }
  static Regularizer l1() { return {RegKind::l1, 0.0}; }
  static Regularizer l2_plus_scaled_l1(double k) { return {RegKind::l2_plus_scaled_l1, k}; }

  bool strongly_convex() const noexcept {
    return kind == RegKind::l2 || kind == RegKind::l2_plus_scaled_l1;
  }
};

/// P(w) = (1/n) sum_i phi_i(w) + lambda * r(w).
///
/// With `l2_in_loss` set, each phi_i carries an extra (lambda/2)||w||^2 and r
/// must be `none`; this is the composite decomposition the SGD solver uses
/// for l2-regularized SVMs. The objective value is the same either way.
struct ProblemSpec {
  LossKind loss = LossKind::squared_hinge;
  Regularizer reg = Regularizer::l2();
  double lambda = 1e-4;
  bool l2_in_loss = false;
  std::optional<double> radius;  // iterates are projected onto ||w|| <= radius

  void validate() const;
};

/// Loss-only SVM problem with r = 1/2||w||^2, as solved by dual coordinate ascent.
ProblemSpec dual_svm_problem(LossKind loss, double lambda);

/// Composite SGD form: l2 term folded into phi_i, r = 0, projection radius 1/sqrt(lambda).
ProblemSpec composite_svm_problem(LossKind loss, double lambda, bool project = true);

/// l1-regularized SVM for proximal SGD, projection radius 1/lambda.
ProblemSpec l1_svm_problem(LossKind loss, double lambda, bool project = true);

/// Smoothed l1 problem for dual coordinate ascent: objective
/// (1/n) sum phi_i + delta * (1/2||w||^2 + (lambda/delta)||w||_1) with
/// delta = lambda^2 * epsilon.
ProblemSpec smoothed_l1_svm_problem(LossKind loss, double lambda, double epsilon);

std::string_view to_string(LossKind kind) noexcept;
std::string_view to_string(RegKind kind) noexcept;
LossKind parse_loss_kind(std::string_view text);

/// grad phi_i(w) = coef * x_i + w_scale * w. `margin` is y_i w^T x_i.
struct ExampleGradient {
  double coef = 0.0;
  double w_scale = 0.0;
  double margin = 0.0;
};

ExampleGradient example_gradient(const ProblemSpec& problem, const LabeledDataset& data,
                                 std::size_t i, std::span<const double> w);

/// phi_i(w), including the folded l2 term in composite mode.
double example_loss(const ProblemSpec& problem, const LabeledDataset& data, std::size_t i,
                    std::span<const double> w);

}  // namespace isamp
