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

#include <span>

#include "isamp/problem.hpp"
#include "isamp/sparse.hpp"

namespace isamp {

/// r(w). Satisfies r(0) = 0 and r >= 0 for every kind.
double regularizer_value(const Regularizer& reg, std::span<const double> w) noexcept;

/// prox_{c r}(x) = argmin_w c*r(w) + 1/2||w - x||^2.
DenseVector prox(const Regularizer& reg, double c, std::span<const double> x);
void prox_inplace(const Regularizer& reg, double c, std::span<double> x);

/// sign(x) * max(|x| - threshold, 0).
inline double soft_threshold(double x, double threshold) noexcept {
  if (x > threshold) return x - threshold;
  if (x < -threshold) return x + threshold;
  return 0.0;
}

/// grad r*(v), the primal point associated with the dual accumulator v.
/// Requires a 1-strongly convex regularizer (l2 or l2_plus_scaled_l1).
DenseVector conjugate_gradient(const Regularizer& reg, std::span<const double> v);
void conjugate_gradient_into(const Regularizer& reg, std::span<const double> v,
                             std::span<double> w);

/// Single coordinate of grad r*(v); both supported kinds are separable.
inline double conjugate_gradient_coord(const Regularizer& reg, double v) noexcept {
  return reg.kind == RegKind::l2_plus_scaled_l1 ? soft_threshold(v, reg.l1_ratio) : v;
}

/// r*(v). l2: 1/2||v||^2; l2_plus_scaled_l1: sum_j 1/2 (|v_j| - k)_+^2.
double conjugate_value(const Regularizer& reg, std::span<const double> v);

}  // namespace isamp
