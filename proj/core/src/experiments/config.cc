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

#include "dqipe/experiments/config.h"

#include <cstdlib>
#include <fstream>

namespace dqipe::experiments {

const char *format_name(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : "json";
}

OutputFormat parse_format(const std::string &s) {
    if (s == "csv") {
        return OutputFormat::csv;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    throw ConfigError("unknown output format '" + s + "' (csv or json)");
}

bool ExperimentConfig::operator==(const ExperimentConfig &o) const {
    return experiment == o.experiment && d == o.d && k == o.k && m == o.m && n_bases == o.n_bases && eps == o.eps &&
           f == o.f && trials == o.trials && seed == o.seed && setting == o.setting && transport == o.transport &&
           out == o.out && format == o.format && params == o.params;
}

double ExperimentConfig::param(const std::string &name, double fallback) const {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

nlohmann::json to_json(const ExperimentConfig &c) {
    return {{"experiment", c.experiment},
            {"d", c.d},
            {"k", c.k},
            {"m", c.m},
            {"n_bases", c.n_bases},
            {"eps", c.eps},
            {"f", c.f},
            {"trials", c.trials},
            {"seed", c.seed},
            {"setting", c.setting.token()},
            {"transport", c.transport},
            {"out", c.out},
            {"format", format_name(c.format)},
            {"params", c.params}};
}

namespace {

template <typename T>
void take(const nlohmann::json &j, const char *key, T &dst) {
    if (j.contains(key)) {
        try {
            dst = j.at(key).get<T>();
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError(std::string("config field '") + key + "': " + e.what());
        }
    }
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json &j, ExperimentConfig c) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    static const char *known[] = {"experiment", "d",         "k",   "m",      "n_bases", "eps",     "f",     "trials",
                                  "seed",       "setting",   "transport", "out", "format", "threads", "params"};
    for (const auto &[key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char *k : known) {
            ok = ok || key == k;
        }
        if (!ok) {
            throw ConfigError("unknown config field '" + key + "'");
        }
    }
    take(j, "experiment", c.experiment);
    take(j, "d", c.d);
    take(j, "k", c.k);
    take(j, "m", c.m);
    take(j, "n_bases", c.n_bases);
    take(j, "eps", c.eps);
    take(j, "f", c.f);
    take(j, "trials", c.trials);
    take(j, "seed", c.seed);
    take(j, "transport", c.transport);
    take(j, "out", c.out);
    take(j, "threads", c.threads);
    if (j.contains("setting")) {
        try {
            c.setting = protocol::CommunicationSetting::parse(j["setting"].get<std::string>());
        } catch (const std::exception &e) {
            throw ConfigError(std::string("config field 'setting': ") + e.what());
        }
    }
    if (j.contains("format")) {
        c.format = parse_format(j["format"].get<std::string>());
    }
    if (j.contains("params")) {
        for (const auto &[key, value] : j["params"].items()) {
            c.params[key] = value.get<double>();
        }
    }
    return c;
}

ExperimentConfig Defaults::config_for(const std::string &experiment) const {
    ExperimentConfig c;
    c.experiment = experiment;
    auto it = experiments.find(experiment);
    if (it != experiments.end()) {
        c = config_from_json(it->second, c);
    }
    return c;
}

Defaults load_defaults(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open defaults file " + path);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError("defaults file " + path + ": " + e.what());
    }
    Defaults d;
    d.version = j.value("version", 1);
    d.dipe_c = j.value("dipe_c", 0.0);
    if (j.contains("experiments")) {
        for (const auto &[name, cfg] : j["experiments"].items()) {
            d.experiments[name] = cfg;
        }
    }
    return d;
}

void save_defaults(const Defaults &d, const std::string &path) {
    nlohmann::json j = {{"version", d.version}, {"dipe_c", d.dipe_c}, {"experiments", d.experiments}};
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write defaults file " + path);
    }
    out << j.dump(2) << "\n";
}

std::string default_defaults_path() {
    if (const char *env = std::getenv("DQIPE_DEFAULTS")) {
        return env;
    }
#ifdef DQIPE_DEFAULTS_FILE
    return DQIPE_DEFAULTS_FILE;
#else
    return "config/defaults.json";
#endif
}

}  // namespace dqipe::experiments
