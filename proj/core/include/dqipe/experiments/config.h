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
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "dqipe/protocol/message.h"

namespace dqipe::experiments {

enum class OutputFormat { csv, json };

const char *format_name(OutputFormat f);
OutputFormat parse_format(const std::string &s);

/// Parameters of one experiment run. Fields an experiment does not use are
/// carried along unchanged.
struct ExperimentConfig {
    std::string experiment;
    std::size_t d = 8;
    /// 0 means "derive from the calibrated DIPE constant" for the DIPE experiments.
    std::size_t k = 16;
    std::size_t m = 32;
    std::size_t n_bases = 1;
    double eps = 0.1;
    double f = 0.5;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    protocol::CommunicationSetting setting = protocol::CommunicationSetting::smp();
    std::string transport = "inproc";
    std::string out;
    OutputFormat format = OutputFormat::json;
    /// Worker threads; 0 uses the hardware concurrency. Never affects results,
    /// so it is neither serialized nor compared.
    std::size_t threads = 0;
    /// Experiment-specific extras (e.g. "window" for problem1-distinguish, "dipe_c").
    std::map<std::string, double> params;

    bool operator==(const ExperimentConfig &o) const;

    double param(const std::string &name, double fallback) const;
};

/// Thrown for configs that make no sense for the named experiment.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

nlohmann::json to_json(const ExperimentConfig &c);
/// Missing keys keep the values already in `base`, so a file can override a
/// subset of the defaults.
ExperimentConfig config_from_json(const nlohmann::json &j, ExperimentConfig base = {});

/// Contents of the versioned defaults file: per-experiment configs plus the
/// fitted DIPE constant.
struct Defaults {
    int version = 1;
    double dipe_c = 0.0;
    std::map<std::string, nlohmann::json> experiments;

    /// Config for `experiment` with its file defaults applied.
    ExperimentConfig config_for(const std::string &experiment) const;
};

Defaults load_defaults(const std::string &path);
void save_defaults(const Defaults &d, const std::string &path);
/// $DQIPE_DEFAULTS when set, otherwise the defaults file of the source tree.
std::string default_defaults_path();

}  // namespace dqipe::experiments
