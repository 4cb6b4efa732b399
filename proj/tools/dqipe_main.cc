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

// Command-line driver for the experiments library.
//
//   dqipe <experiment> [--d N] [--k N] ... [--config file.json] [--out path]
//
// Precedence, lowest first: built-in defaults, the defaults file entry for the
// experiment, DQIPE_SEED, --config, individual flags.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dqipe/experiments/config.h"
#include "dqipe/experiments/result.h"
#include "dqipe/experiments/run.h"

namespace ex = dqipe::experiments;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::uint64_t parse_seed(const std::string &s, const char *what) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(s, &used, 0);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw ex::ConfigError(std::string(what) + " is not a 64-bit unsigned integer: '" + s + "'");
    }
}

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Distributed inner-product estimation experiments"};
    app.set_version_flag("--version", "dqipe 0.1.0");

    std::string experiment;
    std::optional<std::size_t> d, k, m, n_bases, trials, threads;
    std::optional<double> eps, f;
    std::optional<std::string> seed, setting, transport, out, format, config_path;
    std::vector<std::string> params;
    std::string defaults_path = ex::default_defaults_path();
    bool no_write = false;

    std::vector<std::string> choices = ex::experiment_names();
    choices.push_back("list");
    app.add_option("experiment", experiment, "Experiment to run, or 'list'")
        ->required()
        ->check(CLI::IsMember(choices));
    app.add_option("--d", d, "Local dimension");
    app.add_option("--k", k, "Copies per party (0 = calibrated c*ceil(sqrt d) for DIPE)");
    app.add_option("--m", m, "Samples per basis");
    app.add_option("--n-bases", n_bases, "Number of shared random bases N");
    app.add_option("--eps", eps, "Accuracy parameter in (0,1)");
    app.add_option("--f", f, "Target overlap |<phi|psi>|^2 in [0,1]");
    app.add_option("--trials", trials, "Trials (per case for decision experiments)");
    app.add_option("--seed", seed, "64-bit seed (default: $DQIPE_SEED, then the defaults file)");
    app.add_option("--setting", setting, "smp | oneway | interactive[:N]");
    app.add_option("--transport", transport, "inproc | tcp | tcp:<host>:<port>");
    app.add_option("--out", out, "Output path, '-' for stdout");
    app.add_option("--format", format, "csv | json (default from --out extension, else json)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--config", config_path, "JSON config; flags override it");
    app.add_option("--threads", threads, "Worker threads (0 = all cores); results do not depend on it");
    app.add_option("--param", params, "Experiment parameter name=value (repeatable)");
    app.add_option("--defaults", defaults_path, "Versioned defaults file")->capture_default_str();
    app.add_flag("--no-write", no_write, "dipe-calibrate: do not update the defaults file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    if (experiment == "list") {
        for (const auto &name : ex::experiment_names()) {
            std::cout << name << "\n";
        }
        return kPass;
    }

    ex::ExperimentConfig cfg;
    ex::Defaults defaults;
    try {
        std::ifstream probe(defaults_path);
        if (probe) {
            defaults = ex::load_defaults(defaults_path);
            cfg = defaults.config_for(experiment);
        } else {
            std::cerr << "dqipe: no defaults file at " << defaults_path << "; using built-in defaults\n";
            cfg.experiment = experiment;
        }
        if (defaults.dipe_c > 0 && !cfg.params.count("dipe_c")) {
            cfg.params["dipe_c"] = defaults.dipe_c;
        }
        if (const char *env = std::getenv("DQIPE_SEED")) {
            cfg.seed = parse_seed(env, "DQIPE_SEED");
        }
        if (config_path) {
            std::ifstream in(*config_path);
            if (!in) {
                throw ex::ConfigError("cannot open config file " + *config_path);
            }
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception &e) {
                throw ex::ConfigError(*config_path + ": " + e.what());
            }
            cfg = ex::config_from_json(j, cfg);
            if (cfg.experiment != experiment) {
                throw ex::ConfigError("config names experiment '" + cfg.experiment + "' but the command line asks for '" +
                                      experiment + "'");
            }
        }
        if (d) cfg.d = *d;
        if (k) cfg.k = *k;
        if (m) cfg.m = *m;
        if (n_bases) cfg.n_bases = *n_bases;
        if (eps) cfg.eps = *eps;
        if (f) cfg.f = *f;
        if (trials) cfg.trials = *trials;
        if (threads) cfg.threads = *threads;
        if (seed) cfg.seed = parse_seed(*seed, "--seed");
        if (setting) {
            try {
                cfg.setting = dqipe::protocol::CommunicationSetting::parse(*setting);
            } catch (const std::exception &e) {
                throw ex::ConfigError(e.what());
            }
        }
        if (transport) cfg.transport = *transport;
        if (out) cfg.out = *out;
        if (format) {
            cfg.format = ex::parse_format(*format);
        } else if (out && ends_with(*out, ".csv")) {
            cfg.format = ex::OutputFormat::csv;
        }
        for (const auto &p : params) {
            auto eq = p.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw ex::ConfigError("--param expects name=value, got '" + p + "'");
            }
            try {
                std::size_t used = 0;
                double v = std::stod(p.substr(eq + 1), &used);
                if (used != p.size() - eq - 1) {
                    throw std::invalid_argument(p);
                }
                cfg.params[p.substr(0, eq)] = v;
            } catch (const std::logic_error &) {
                throw ex::ConfigError("--param value is not a number: '" + p + "'");
            }
        }
    } catch (const ex::ConfigError &e) {
        std::cerr << "dqipe: " << e.what() << "\n";
        return kUsage;
    }

    ex::ExperimentResult result;
    try {
        result = ex::run_experiment(cfg);
    } catch (const ex::ConfigError &e) {
        std::cerr << "dqipe: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "dqipe: " << experiment << " failed: " << e.what() << "\n";
        return kUsage;
    }

    try {
        ex::write_result(result, cfg.out.empty() ? "-" : cfg.out, cfg.format);
    } catch (const std::exception &e) {
        std::cerr << "dqipe: " << e.what() << "\n";
        return kUsage;
    }

    if (experiment == "dipe-calibrate" && result.summary.passed.value_or(false) && !no_write) {
        defaults.dipe_c = result.metric("dipe_c");
        ex::save_defaults(defaults, defaults_path);
        std::cerr << "dqipe: wrote dipe_c = " << defaults.dipe_c << " to " << defaults_path << "\n";
    }

    const auto &s = result.summary;
    std::cerr << experiment << ": " << (s.passed ? (*s.passed ? "PASS" : "FAIL") : "done") << " ("
              << result.wall_seconds << " s)\n";
    return s.passed.value_or(true) ? kPass : kFail;
}
