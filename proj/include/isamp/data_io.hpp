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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "isamp/dataset.hpp"

namespace isamp {

/// Parses LIBSVM text: "label idx:val idx:val ..." with 1-based ascending
/// indices. '#' starts a comment, blank lines are skipped, and {0,1} labels
/// are mapped to {-1,+1}. The dimension is the largest index seen unless
/// `dim` is given. Errors carry the line number.
LabeledDataset parse_libsvm(std::istream& in, std::optional<std::size_t> dim = std::nullopt);
LabeledDataset parse_libsvm(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

/// Reads a LIBSVM file; a ".gz" suffix is decompressed transparently.
LabeledDataset load_libsvm(const std::string& path, std::optional<std::size_t> dim = std::nullopt);

/// Writes LIBSVM text with shortest round-trip number formatting.
void write_libsvm(std::ostream& out, const LabeledDataset& data);
std::string to_libsvm(const LabeledDataset& data);

/// Writes a LIBSVM file, gzip-compressed when the path ends in ".gz".
void save_libsvm(const std::string& path, const LabeledDataset& data);

struct SyntheticSpec {
  std::size_t n = 1000;
  std::size_t d = 20;
  /// Log-normal spread of the example norms; 0 gives equal norms.
  double sigma = 0.0;
  std::size_t nnz = 20;      // nonzeros per example, at most d
  double noise = 0.0;        // label flip rate in [0,1)
  std::uint64_t seed = 1;

  void validate() const;
};

/// Examples are random sparse unit directions scaled by exp(sigma * N(0,1));
/// labels are the sign of a Gaussian teacher's score, flipped at the noise
/// rate. Deterministic given the seed.
LabeledDataset generate_synthetic(const SyntheticSpec& spec);

/// Shuffled split into (train, test) with round(fraction * n) test examples.
std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& data, double test_fraction,
                                                std::uint64_t seed);

}  // namespace isamp
