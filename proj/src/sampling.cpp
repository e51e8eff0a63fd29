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

#include "isamp/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isamp/error.hpp"

namespace isamp {

std::string_view to_string(SamplingKind kind) noexcept {
  switch (kind) {
    case SamplingKind::uniform: return "uniform";
    case SamplingKind::lipschitz: return "lipschitz";
    case SamplingKind::smoothness: return "smoothness";
    case SamplingKind::sdca_smooth: return "sdca_smooth";
    case SamplingKind::gradient_norm: return "gradient_norm";
  }
  return "?";
}

SamplingDistribution::SamplingDistribution(std::vector<double> p, SamplingKind kind)
    : p_(std::move(p)), kind_(kind) {
  if (p_.empty()) fail(ErrorCode::invalid_argument, "sampling distribution needs n >= 1");
  if (p_.size() > std::numeric_limits<std::uint32_t>::max()) {
    fail(ErrorCode::invalid_argument, "sampling distribution too large");
  }
  double total = 0.0;
  for (double v : p_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      fail(ErrorCode::invalid_argument, "sampling probabilities must be positive and finite");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    fail(ErrorCode::invalid_argument, "sampling probabilities sum to " + std::to_string(total));
  }
  for (double& v : p_) v /= total;
  build_alias_table();
}

void SamplingDistribution::build_alias_table() {
  // Vose's alias method.
  const std::size_t n = p_.size();
  const double nd = static_cast<double>(n);
  accept_.assign(n, 1.0);
  alias_.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small;
  std::vector<std::uint32_t> large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    alias_[i] = static_cast<std::uint32_t>(i);
    scaled[i] = p_[i] * nd;
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    large.pop_back();
    accept_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  // Leftovers are 1 up to rounding.
  for (std::uint32_t i : small) accept_[i] = 1.0;
  for (std::uint32_t i : large) accept_[i] = 1.0;
}

std::size_t SamplingDistribution::draw(Rng& rng) const {
  const std::size_t n = p_.size();
  if (n == 1) return 0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng) * static_cast<double>(n);
  const std::size_t k = std::min(static_cast<std::size_t>(u), n - 1);
  const double frac = u - static_cast<double>(k);
  return frac < accept_[k] ? k : alias_[k];
}

std::vector<double> SamplingDistribution::implied_mass() const {
  const std::size_t n = p_.size();
  const double nd = static_cast<double>(n);
  std::vector<double> mass(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    mass[k] += accept_[k] / nd;
    mass[alias_[k]] += (1.0 - accept_[k]) / nd;
  }
  return mass;
}

SamplingDistribution build_uniform(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "uniform distribution needs n >= 1");
  return SamplingDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)),
                              SamplingKind::uniform);
}

SamplingDistribution build_proportional(std::span<const double> weights, SamplingKind kind,
                                        double floor) {
  if (weights.empty()) fail(ErrorCode::invalid_argument, "no sampling weights");
  if (!(floor > 0.0 && floor < 1.0)) fail(ErrorCode::invalid_argument, "floor must lie in (0,1)");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      fail(ErrorCode::invalid_argument, "sampling weights must be finite and nonnegative");
    }
    total += w;
  }
  if (total <= 0.0) fail(ErrorCode::invalid_argument, "all sampling weights are zero");
  std::vector<double> p(weights.size());
  double renorm = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    p[i] = weights[i] > 0.0 ? weights[i] / total : floor;
    renorm += p[i];
  }
  for (double& v : p) v /= renorm;
  return SamplingDistribution(std::move(p), kind);
}

SamplingDistribution build_lipschitz(std::span<const double> lipschitz, double floor) {
  return build_proportional(lipschitz, SamplingKind::lipschitz, floor);
}

SamplingDistribution build_smoothness(std::span<const double> gamma, double floor) {
  std::vector<double> inv(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (!(gamma[i] > 0.0)) fail(ErrorCode::invalid_argument, "smoothness gamma_i must be positive");
    inv[i] = 1.0 / gamma[i];
  }
  return build_proportional(inv, SamplingKind::smoothness, floor);
}

SamplingDistribution build_gradient_norm(std::span<const double> norms, double floor) {
  return build_proportional(norms, SamplingKind::gradient_norm, floor);
}

SdcaSmoothSampling build_sdca_smooth(std::span<const double> gamma, double lambda,
                                     std::size_t n, double norm_ratio) {
  if (n == 0 || gamma.size() != n) {
    fail(ErrorCode::invalid_argument, "build_sdca_smooth: gamma must have length n >= 1");
  }
  if (!(lambda > 0.0) || !(norm_ratio > 0.0)) {
    fail(ErrorCode::invalid_argument, "build_sdca_smooth: lambda and R must be positive");
  }
  const double nd = static_cast<double>(n);
  const double r2 = norm_ratio * norm_ratio;
  std::vector<double> terms(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(gamma[i] > 0.0)) fail(ErrorCode::invalid_argument, "build_sdca_smooth: gamma_i must be positive");
    terms[i] = r2 / (lambda * nd * gamma[i]);
    sum += terms[i];
  }
  const double denom = nd + sum;
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (1.0 + terms[i]) / denom;
  return {SamplingDistribution(std::move(p), SamplingKind::sdca_smooth), nd / denom};
}

double max_feasible_dual_step(std::span<const double> p, std::span<const double> gamma,
                              double lambda, double norm_ratio) {
  if (p.size() != gamma.size() || p.empty()) {
    fail(ErrorCode::dimension_mismatch, "max_feasible_dual_step: size mismatch");
  }
  const double nd = static_cast<double>(p.size());
  const double r2 = norm_ratio * norm_ratio;
  double s = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double lng = lambda * nd * gamma[i];
    const double bound = std::isinf(lng) ? 1.0 : lng / (r2 + lng);
    s = std::min(s, nd * p[i] * bound);
  }
  return std::min(s, 1.0);
}

}  // namespace isamp
