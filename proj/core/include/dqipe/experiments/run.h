// Copyright 2026 The dqipe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "dqipe/experiments/config.h"
#include "dqipe/experiments/result.h"

namespace dqipe::experiments {

struct UnknownExperiment : ConfigError {
    using ConfigError::ConfigError;
};

/// The requested sizes exceed what a dense check can afford; the message
/// states the rule.
struct InfeasibleExperiment : ConfigError {
    using ConfigError::ConfigError;
};

/// Names accepted by run_experiment, in a fixed order.
const std::vector<std::string> &experiment_names();

/// k for the DIPE experiments: config.k, or ceil(c * ceil(sqrt d)) with
/// c = params["dipe_c"] when config.k is 0.
std::size_t dipe_k(const ExperimentConfig &c);

/// Runs the named experiment. Trial i of a single-case experiment draws from
/// stream (seed, i); decision experiments use (seed, case, i). The states of
/// an instance come from child streams::kInstance of that stream, or of
/// (seed) for experiments with one fixed instance.
ExperimentResult run_experiment(const ExperimentConfig &c);

}  // namespace dqipe::experiments
