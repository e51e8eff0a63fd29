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
#include <span>
#include <utility>
#include <vector>

namespace isamp {

using Index = std::uint32_t;
using DenseVector = std::vector<double>;

/// Sparse vector with strictly increasing indices and no stored zeros.
/// Examples x_i live in this form; iterates are always dense.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}

  /// Builds from (index, value) pairs. Zero values are dropped; indices must
  /// be strictly increasing and below `dim`.
  SparseVector(std::size_t dim, std::span<const std::pair<Index, double>> entries);
  SparseVector(std::size_t dim, std::vector<Index> indices, std::vector<double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  std::span<const Index> indices() const noexcept { return indices_; }
  std::span<const double> values() const noexcept { return values_; }

  double squared_norm() const noexcept;
  double norm() const noexcept;

  /// Returns a copy scaled by `factor` (a zero factor yields an empty vector).
  SparseVector scaled(double factor) const;

  DenseVector to_dense() const;

  /// Re-targets the vector to a larger ambient dimension.
  void widen(std::size_t dim);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  void validate() const;

  std::size_t dim_ = 0;
  std::vector<Index> indices_;
  std::vector<double> values_;
};

/// Sum_j a_j * b_j. Throws on dimension mismatch.
double dot(const SparseVector& a, std::span<const double> b);

/// b += scale * a on the stored coordinates of `a`.
void axpy_sparse(double scale, const SparseVector& a, std::span<double> b);

double squared_norm(std::span<const double> v) noexcept;
double norm(std::span<const double> v) noexcept;
double dot(std::span<const double> a, std::span<const double> b);

/// Euclidean projection onto {w : ||w||_2 <= radius}.
DenseVector project_l2_ball(std::span<const double> w, double radius);
/// In-place form; returns true if the vector was rescaled.
bool project_l2_ball_inplace(std::span<double> w, double radius);

}  // namespace isamp
