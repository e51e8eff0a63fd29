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

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "isamp/dataset.hpp"
#include "isamp/sampling.hpp"
#include "isamp/sparse.hpp"

namespace isamp::test {

inline SparseVector sparse(std::size_t dim, std::initializer_list<std::pair<Index, double>> entries) {
  std::vector<std::pair<Index, double>> e(entries);
  return SparseVector(dim, e);
}

inline LabeledDataset one_example(std::size_t dim,
                                  std::initializer_list<std::pair<Index, double>> entries,
                                  double label) {
  return LabeledDataset({{sparse(dim, entries), label}}, dim);
}

// Random dataset with per-example norm spread exp(spread * N(0,1)).
inline LabeledDataset random_dataset(std::size_t n, std::size_t d, std::uint64_t seed,
                                     double spread = 0.5, double density = 0.6) {
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::bernoulli_distribution keep(density);
  std::vector<LabeledExample> examples;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Index> idx;
    std::vector<double> val;
    for (std::size_t j = 0; j < d; ++j) {
      if (keep(rng)) {
        idx.push_back(static_cast<Index>(j));
        val.push_back(gauss(rng));
      }
    }
    if (idx.empty()) {
      idx.push_back(static_cast<Index>(i % d));
      val.push_back(1.0);
    }
    double sq = 0.0;
    for (double v : val) sq += v * v;
    const double scale = std::exp(spread * gauss(rng)) / std::sqrt(sq);
    for (double& v : val) v *= scale;
    const double label = gauss(rng) + val[0] > 0.0 ? 1.0 : -1.0;
    examples.push_back({SparseVector(d, std::move(idx), std::move(val)), label});
  }
  return LabeledDataset(std::move(examples), d);
}

inline std::vector<double> random_vector(std::size_t d, Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  std::vector<double> v(d);
  for (double& x : v) x = gauss(rng);
  return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace isamp::test
