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

#include "isamp/dataset.hpp"

#include <cmath>
#include <string>

#include "isamp/error.hpp"

namespace isamp {

LabeledDataset::LabeledDataset(std::vector<LabeledExample> examples, std::size_t dim)
    : examples_(std::move(examples)), dim_(dim) {
  if (dim_ == 0) fail(ErrorCode::invalid_argument, "dataset dimension must be positive");
  norms_.reserve(examples_.size());
  squared_norms_.reserve(examples_.size());
  for (std::size_t i = 0; i < examples_.size(); ++i) {
    auto& ex = examples_[i];
    if (ex.features.dim() > dim_) {
      fail(ErrorCode::dimension_mismatch,
           "example " + std::to_string(i) + " has dimension " +
               std::to_string(ex.features.dim()) + " > dataset dimension " +
               std::to_string(dim_));
    }
    ex.features.widen(dim_);
    if (!std::isfinite(ex.label)) {
      fail(ErrorCode::invalid_argument, "example " + std::to_string(i) + " has a non-finite label");
    }
    const double sq = ex.features.squared_norm();
    squared_norms_.push_back(sq);
    norms_.push_back(std::sqrt(sq));
  }
}

bool LabeledDataset::has_binary_labels() const noexcept {
  for (const auto& ex : examples_) {
    if (ex.label != 1.0 && ex.label != -1.0) return false;
  }
  return true;
}

LabeledDataset LabeledDataset::subset(std::span<const std::size_t> rows) const {
  std::vector<LabeledExample> picked;
  picked.reserve(rows.size());
  for (std::size_t r : rows) {
    if (r >= examples_.size()) fail(ErrorCode::invalid_argument, "subset row out of range");
    picked.push_back(examples_[r]);
  }
  return LabeledDataset(std::move(picked), dim_);
}

}  // namespace isamp
