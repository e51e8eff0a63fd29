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

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "isamp/dataset.hpp"
#include "isamp/problem.hpp"

namespace isamp {

// Margin-based SVM losses. Everything is written in terms of the margin
// m = y * w^T x and, on the dual side, the scalar alpha with theta = alpha*y*x.

/// hinge: max(0, 1-m); squared hinge: max(0, 1-m)^2.
double loss_value(LossKind kind, double margin) noexcept;

/// d loss / d margin. The hinge kink m = 1 returns 0.
double loss_derivative(LossKind kind, double margin) noexcept;

/// Pure-loss subgradient with respect to w: loss'(m) * y * x.
SparseVector loss_subgradient(LossKind kind, const LabeledExample& example,
                              std::span<const double> w);

/// phi*(-theta) at theta = alpha*y*x. Hinge: -alpha on [0,1]; squared hinge:
/// -alpha + alpha^2/4 on [0, inf). Throws `infeasible` outside the domain.
double conjugate_value(LossKind kind, double alpha);

/// Largest feasible alpha (1 for hinge, +inf for squared hinge).
double dual_upper_bound(LossKind kind) noexcept;

/// alpha minimizing the scalar conjugate: 1 for hinge, 2 for squared hinge.
double conjugate_minimizer(LossKind kind) noexcept;

/// The alpha for which -theta is the chosen subgradient at margin m
/// (u = beta*y*x with -u in d phi(w)).
double subgradient_dual_coordinate(LossKind kind, double margin) noexcept;

struct LossConstants {
  /// L_i; empty when the loss is not globally Lipschitz and no radius was given.
  std::vector<double> lipschitz;
  /// gamma_i with phi_i (1/gamma_i)-smooth; empty for hinge. Zero-norm
  /// examples get +inf.
  std::vector<double> gamma;
  /// Examples with ||x_i|| = 0; their sampling weight is floored.
  std::vector<std::size_t> degenerate;
};

/// Per-example regularity constants. For squared hinge the Lipschitz constant
/// is only defined over ||w|| <= radius: L_i = 2(1 + radius*||x_i||)*||x_i||.
LossConstants per_example_constants(LossKind kind, const LabeledDataset& data,
                                     std::optional<double> radius = std::nullopt);

}  // namespace isamp
