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

#include "isamp/loss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isamp/error.hpp"

namespace isamp {

double loss_value(LossKind kind, double margin) noexcept {
  const double slack = std::max(0.0, 1.0 - margin);
  return kind == LossKind::hinge ? slack : slack * slack;
}

double loss_derivative(LossKind kind, double margin) noexcept {
  if (kind == LossKind::hinge) return margin < 1.0 ? -1.0 : 0.0;
  return -2.0 * std::max(0.0, 1.0 - margin);
}

SparseVector loss_subgradient(LossKind kind, const LabeledExample& example,
                              std::span<const double> w) {
  const double m = example.label * dot(example.features, w);
  return example.features.scaled(loss_derivative(kind, m) * example.label);
}

double conjugate_value(LossKind kind, double alpha) {
  if (kind == LossKind::hinge) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      fail(ErrorCode::infeasible, "hinge dual coordinate outside [0,1]: " + std::to_string(alpha));
    }
    return -alpha;
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    fail(ErrorCode::infeasible, "squared hinge dual coordinate negative: " + std::to_string(alpha));
  }
  return -alpha + 0.25 * alpha * alpha;
}

double dual_upper_bound(LossKind kind) noexcept {
  return kind == LossKind::hinge ? 1.0 : std::numeric_limits<double>::infinity();
}

double conjugate_minimizer(LossKind kind) noexcept {
  return kind == LossKind::hinge ? 1.0 : 2.0;
}

double subgradient_dual_coordinate(LossKind kind, double margin) noexcept {
  return -loss_derivative(kind, margin);
}

LossConstants per_example_constants(LossKind kind, const LabeledDataset& data,
                                    std::optional<double> radius) {
  if (data.empty()) fail(ErrorCode::invalid_argument, "per_example_constants: empty dataset");
  LossConstants out;
  const std::size_t n = data.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (data.norm(i) == 0.0) out.degenerate.push_back(i);
  }
  if (kind == LossKind::hinge) {
    out.lipschitz.assign(data.norms().begin(), data.norms().end());
    return out;
  }
  out.gamma.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sq = data.squared_norm(i);
    out.gamma[i] = sq > 0.0 ? 1.0 / (2.0 * sq) : std::numeric_limits<double>::infinity();
  }
  if (radius) {
    if (!(*radius > 0.0)) fail(ErrorCode::invalid_argument, "radius must be positive");
    out.lipschitz.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double nx = data.norm(i);
      out.lipschitz[i] = 2.0 * (1.0 + *radius * nx) * nx;
    }
  }
  return out;
}

}  // namespace isamp
