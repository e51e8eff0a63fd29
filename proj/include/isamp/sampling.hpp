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

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace isamp {

using Rng = std::mt19937_64;

enum class SamplingKind { uniform, lipschitz, smoothness, sdca_smooth, gradient_norm };

std::string_view to_string(SamplingKind kind) noexcept;

/// Probability assigned to zero-weight entries before renormalization. Keeps
/// the importance weight 1/(n p_i) finite.
inline constexpr double kProbabilityFloor = 1e-9;

/// Discrete distribution over {0, ..., n-1} with an alias table for O(1)
/// draws. Immutable once built; draws take the caller's random stream.
class SamplingDistribution {
 public:
  SamplingDistribution() = default;
  /// `p` must be positive and sum to 1 within 1e-9; it is renormalized.
  SamplingDistribution(std::vector<double> p, SamplingKind kind);

  std::size_t size() const noexcept { return p_.size(); }
  double probability(std::size_t i) const { return p_[i]; }
  std::span<const double> probabilities() const noexcept { return p_; }
  SamplingKind kind() const noexcept { return kind_; }

  std::size_t draw(Rng& rng) const;

  /// Mass each index receives from the alias table. Matches `probabilities()`
  /// up to rounding.
  std::vector<double> implied_mass() const;

 private:
  void build_alias_table();

  std::vector<double> p_;
  std::vector<double> accept_;
  std::vector<std::uint32_t> alias_;
  SamplingKind kind_ = SamplingKind::uniform;
};

SamplingDistribution build_uniform(std::size_t n);

/// p_i = w_i / sum_j w_j with zero weights floored at `floor` and the result
/// renormalized. Throws when all weights are zero or any is negative.
SamplingDistribution build_proportional(std::span<const double> weights, SamplingKind kind,
                                        double floor = kProbabilityFloor);

/// p_i = L_i / sum_j L_j.
SamplingDistribution build_lipschitz(std::span<const double> lipschitz,
                                     double floor = kProbabilityFloor);

/// p_i proportional to 1/gamma_i. Requires every gamma_i > 0 (+inf allowed:
/// such an example gets the floor).
SamplingDistribution build_smoothness(std::span<const double> gamma,
                                      double floor = kProbabilityFloor);

/// p_i proportional to ||grad phi_i(w^t)||_*, the variance-minimizing choice at
/// the current iterate.
SamplingDistribution build_gradient_norm(std::span<const double> norms,
                                         double floor = kProbabilityFloor);

struct SdcaSmoothSampling {
  SamplingDistribution distribution;
  double step = 0.0;  // s = n / (n + sum_i R^2/(lambda n gamma_i))
};

/// Dual coordinate ascent distribution for (1/gamma_i)-smooth losses:
/// p_i = (1 + R^2/(lambda n gamma_i)) / (n + sum_j R^2/(lambda n gamma_j)).
SdcaSmoothSampling build_sdca_smooth(std::span<const double> gamma, double lambda,
                                     std::size_t n, double norm_ratio);

/// Largest s with s/(n p_i) <= lambda n gamma_i / (R^2 + lambda n gamma_i) for
/// every i. Equals `build_sdca_smooth(...).step` for that distribution and
/// lambda n gamma_min / (R^2 + lambda n gamma_min) for uniform sampling.
double max_feasible_dual_step(std::span<const double> p, std::span<const double> gamma,
                              double lambda, double norm_ratio);

}  // namespace isamp
