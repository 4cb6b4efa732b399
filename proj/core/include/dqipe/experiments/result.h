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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dqipe/experiments/config.h"

namespace dqipe::experiments {

/// One row of a per-trial experiment.
struct TrialRecord {
    std::size_t trial = 0;
    /// "seed/i/j/..." of the trial's stream.
    std::string seed_path;
    /// Estimator value, or the decided case for decision experiments.
    double w = 0.0;
    /// Underlying statistic: |<u|v>|^2, mean collision rate, or fraction of ones.
    double raw = 0.0;
    bool operator==(const TrialRecord &) const = default;
};

struct Summary {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0;
    double se = 0.0;
    std::optional<double> success_rate;
    std::optional<double> wilson_lo;
    std::optional<double> wilson_hi;
    /// Unset for exploratory runs that carry no acceptance rule.
    std::optional<bool> passed;
    bool operator==(const Summary &) const = default;
};

struct Metric {
    std::string name;
    double value = 0.0;
    bool operator==(const Metric &) const = default;
};

struct ExperimentResult {
    ExperimentConfig config;
    /// Per-trial rows for estimate and decision experiments; empty for checks.
    bool per_trial = false;
    std::vector<TrialRecord> trials;
    Summary summary;
    std::vector<Metric> metrics;
    /// Wall-clock seconds. Not written to result files, so that reruns
    /// produce byte-identical output.
    double wall_seconds = 0.0;

    /// Compares everything except wall_seconds.
    bool operator==(const ExperimentResult &o) const;

    /// Value of a metric; throws std::out_of_range when absent.
    double metric(const std::string &name) const;
};

std::string emit_result(const ExperimentResult &r, OutputFormat format);
/// Inverse of emit_result. Throws std::invalid_argument on malformed input.
ExperimentResult parse_result(const std::string &text, OutputFormat format);

/// Writes emit_result to `path`; "-" writes to stdout.
void write_result(const ExperimentResult &r, const std::string &path, OutputFormat format);

std::string format_double(double x);

}  // namespace dqipe::experiments
