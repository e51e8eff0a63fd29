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
#include <span>
#include <vector>

#include "isamp/sparse.hpp"

namespace isamp {

struct LabeledExample {
  SparseVector features;
  double label = 0.0;

  friend bool operator==(const LabeledExample&, const LabeledExample&) = default;
};

/// Immutable training or test set. Per-example Euclidean norms are cached at
/// construction since every sampling distribution is built from them.
class LabeledDataset {
 public:
  LabeledDataset() = default;
  /// Every example's feature dimension is widened to `dim`; examples with a
  /// larger dimension are rejected.
  LabeledDataset(std::vector<LabeledExample> examples, std::size_t dim);

  std::size_t size() const noexcept { return examples_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return examples_.empty(); }

  const LabeledExample& example(std::size_t i) const { return examples_[i]; }
  const SparseVector& features(std::size_t i) const { return examples_[i].features; }
  double label(std::size_t i) const { return examples_[i].label; }
  double norm(std::size_t i) const { return norms_[i]; }
  double squared_norm(std::size_t i) const { return squared_norms_[i]; }

  std::span<const LabeledExample> examples() const noexcept { return examples_; }
  std::span<const double> norms() const noexcept { return norms_; }
  std::span<const double> squared_norms() const noexcept { return squared_norms_; }

  /// True when every label is exactly -1 or +1.
  bool has_binary_labels() const noexcept;

  /// New dataset holding the examples at `rows`, in that order.
  LabeledDataset subset(std::span<const std::size_t> rows) const;

  friend bool operator==(const LabeledDataset& a, const LabeledDataset& b) {
    return a.dim_ == b.dim_ && a.examples_ == b.examples_;
  }

 private:
  std::vector<LabeledExample> examples_;
  std::size_t dim_ = 0;
  std::vector<double> norms_;
  std::vector<double> squared_norms_;
};

}  // namespace isamp
