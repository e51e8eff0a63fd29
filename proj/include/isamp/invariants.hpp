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

#include <string>
#include <vector>

#include "isamp/dataset.hpp"
#include "isamp/experiment.hpp"

namespace isamp {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runtime invariant suite on a concrete dataset and problem: sampling tables,
/// unbiasedness and variance identities, projection bounds, weak duality,
/// dual feasibility, dual monotonicity and v consistency. Runs at most
/// `max_epochs` epochs per solver.
std::vector<CheckResult> run_invariant_checks(const LabeledDataset& data,
                                              const ExperimentConfig& config,
                                              std::uint64_t max_epochs = 3);

}  // namespace isamp
