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

#include "isamp/sparse.hpp"

#include <cmath>
#include <string>

#include "isamp/error.hpp"

namespace isamp {

SparseVector::SparseVector(std::size_t dim,
                           std::span<const std::pair<Index, double>> entries)
    : dim_(dim) {
  indices_.reserve(entries.size());
  values_.reserve(entries.size());
  for (const auto& [idx, val] : entries) {
    if (!indices_.empty() && idx <= indices_.back()) {
      fail(ErrorCode::invalid_argument, "sparse indices must be strictly increasing");
    }
    if (val == 0.0) continue;
    indices_.push_back(idx);
    values_.push_back(val);
  }
  validate();
}

SparseVector::SparseVector(std::size_t dim, std::vector<Index> indices,
                           std::vector<double> values)
    : dim_(dim) {
  if (indices.size() != values.size()) {
    fail(ErrorCode::dimension_mismatch, "sparse index/value arrays differ in length");
  }
  indices_.reserve(indices.size());
  values_.reserve(values.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (!indices_.empty() && indices[k] <= indices_.back()) {
      fail(ErrorCode::invalid_argument, "sparse indices must be strictly increasing");
    }
    if (values[k] == 0.0) continue;
    indices_.push_back(indices[k]);
    values_.push_back(values[k]);
  }
  validate();
}

void SparseVector::validate() const {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] >= dim_) {
      fail(ErrorCode::dimension_mismatch,
           "sparse index " + std::to_string(indices_[k]) + " out of range for dim " +
               std::to_string(dim_));
    }
    if (k > 0 && indices_[k] <= indices_[k - 1]) {
      fail(ErrorCode::invalid_argument, "sparse indices must be strictly increasing");
    }
    if (!std::isfinite(values_[k])) {
      fail(ErrorCode::invalid_argument, "sparse value is not finite");
    }
  }
}

double SparseVector::squared_norm() const noexcept {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return s;
}

double SparseVector::norm() const noexcept { return std::sqrt(squared_norm()); }

SparseVector SparseVector::scaled(double factor) const {
  SparseVector out(dim_);
  if (factor == 0.0) return out;
  out.indices_ = indices_;
  out.values_.reserve(values_.size());
  for (double v : values_) out.values_.push_back(v * factor);
  return out;
}

DenseVector SparseVector::to_dense() const {
  DenseVector out(dim_, 0.0);
  for (std::size_t k = 0; k < indices_.size(); ++k) out[indices_[k]] = values_[k];
  return out;
}

void SparseVector::widen(std::size_t dim) {
  if (dim < dim_) fail(ErrorCode::dimension_mismatch, "cannot shrink sparse vector dimension");
  dim_ = dim;
}

double dot(const SparseVector& a, std::span<const double> b) {
  if (a.dim() != b.size()) {
    fail(ErrorCode::dimension_mismatch, "dot: dimension mismatch (" + std::to_string(a.dim()) +
                                            " vs " + std::to_string(b.size()) + ")");
  }
  const auto idx = a.indices();
  const auto val = a.values();
  double s = 0.0;
  for (std::size_t k = 0; k < idx.size(); ++k) s += val[k] * b[idx[k]];
  return s;
}

void axpy_sparse(double scale, const SparseVector& a, std::span<double> b) {
  if (a.dim() != b.size()) {
    fail(ErrorCode::dimension_mismatch, "axpy_sparse: dimension mismatch");
  }
  if (scale == 0.0) return;
  const auto idx = a.indices();
  const auto val = a.values();
  for (std::size_t k = 0; k < idx.size(); ++k) b[idx[k]] += scale * val[k];
}

double squared_norm(std::span<const double> v) noexcept {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

double norm(std::span<const double> v) noexcept { return std::sqrt(squared_norm(v)); }

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) fail(ErrorCode::dimension_mismatch, "dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

bool project_l2_ball_inplace(std::span<double> w, double radius) {
  if (!(radius > 0.0)) fail(ErrorCode::invalid_argument, "projection radius must be positive");
  const double nrm = norm(w);
  if (nrm <= radius) return false;
  const double factor = radius / nrm;
  for (double& x : w) x *= factor;
  return true;
}

DenseVector project_l2_ball(std::span<const double> w, double radius) {
  DenseVector out(w.begin(), w.end());
  project_l2_ball_inplace(out, radius);
  return out;
}

}  // namespace isamp
