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

#include "isamp/regularizer.hpp"

#include <cmath>
#include <string>

#include "isamp/error.hpp"

namespace isamp {

namespace {

double l1_norm(std::span<const double> w) noexcept {
  double s = 0.0;
  for (double x : w) s += std::abs(x);
  return s;
}

void require_strongly_convex(const Regularizer& reg) {
  if (!reg.strongly_convex()) {
    fail(ErrorCode::invalid_argument,
         "conjugate gradient needs a 1-strongly convex regularizer (l2 or smoothed l1), got " +
             std::string(to_string(reg.kind)));
  }
}

}  // namespace

double regularizer_value(const Regularizer& reg, std::span<const double> w) noexcept {
  switch (reg.kind) {
    case RegKind::none: return 0.0;
    case RegKind::l2: return 0.5 * squared_norm(w);
    case RegKind::l1: return l1_norm(w);
    case RegKind::l2_plus_scaled_l1: return 0.5 * squared_norm(w) + reg.l1_ratio * l1_norm(w);
  }
  return 0.0;
}

void prox_inplace(const Regularizer& reg, double c, std::span<double> x) {
  if (!(c >= 0.0)) fail(ErrorCode::invalid_argument, "prox scale must be nonnegative");
  if (c == 0.0) return;
  switch (reg.kind) {
    case RegKind::none:
      return;
    case RegKind::l2: {
      const double shrink = 1.0 / (1.0 + c);
      for (double& v : x) v *= shrink;
      return;
    }
    case RegKind::l1:
      for (double& v : x) v = soft_threshold(v, c);
      return;
    case RegKind::l2_plus_scaled_l1: {
      // Soft-threshold by c*k, then shrink by 1/(1+c).
      const double shrink = 1.0 / (1.0 + c);
      const double thr = c * reg.l1_ratio;
      for (double& v : x) v = soft_threshold(v, thr) * shrink;
      return;
    }
  }
}

DenseVector prox(const Regularizer& reg, double c, std::span<const double> x) {
  DenseVector out(x.begin(), x.end());
  prox_inplace(reg, c, out);
  return out;
}

void conjugate_gradient_into(const Regularizer& reg, std::span<const double> v,
                             std::span<double> w) {
  require_strongly_convex(reg);
  if (v.size() != w.size()) fail(ErrorCode::dimension_mismatch, "conjugate_gradient: size mismatch");
  for (std::size_t j = 0; j < v.size(); ++j) w[j] = conjugate_gradient_coord(reg, v[j]);
}

DenseVector conjugate_gradient(const Regularizer& reg, std::span<const double> v) {
  DenseVector w(v.size());
  conjugate_gradient_into(reg, v, w);
  return w;
}

double conjugate_value(const Regularizer& reg, std::span<const double> v) {
  require_strongly_convex(reg);
  if (reg.kind == RegKind::l2) return 0.5 * squared_norm(v);
  double s = 0.0;
  for (double x : v) {
    const double t = std::abs(x) - reg.l1_ratio;
    if (t > 0.0) s += 0.5 * t * t;
  }
  return s;
}

}  // namespace isamp
