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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "dqipe/experiments/config.h"
#include "dqipe/experiments/instances.h"
#include "dqipe/experiments/pool.h"
#include "dqipe/experiments/result.h"
#include "dqipe/experiments/run.h"
#include "dqipe/experiments/stats.h"
#include "dqipe/linalg/measures.h"

using namespace dqipe;
using namespace dqipe::experiments;

TEST(instances, dipe_cases) {
    RngStream rng(1);
    auto [a, b] = gen_dipe_instance(16, DipeCase::same, rng);
    EXPECT_NEAR(overlap2(a, b), 1.0, 1e-12);
    EXPECT_THROW(gen_dipe_instance(1, DipeCase::same, rng), InvalidDimension);

    const int n = 10000;
    double s = 0, s2 = 0;
    for (int i = 0; i < n; i++) {
        auto [p, q] = gen_dipe_instance(64, DipeCase::independent, rng);
        double x = overlap2(p, q);
        s += x;
        s2 += x * x;
    }
    double mean = s / n, se = std::sqrt((s2 / n - mean * mean) / n);
    EXPECT_NEAR(mean, 1.0 / 64, 3 * se);
}

TEST(instances, dipe_reproducible) {
    RngStream r1(5, {2}), r2(5, {2});
    auto x = gen_dipe_instance(8, DipeCase::independent, r1);
    auto y = gen_dipe_instance(8, DipeCase::independent, r2);
    EXPECT_EQ(x.first.amplitudes(), y.first.amplitudes());
    EXPECT_EQ(x.second.amplitudes(), y.second.amplitudes());
}

TEST(instances, problem1_case1_overlap_formula) {
    const double eps = 0.2;
    for (std::uint64_t s = 0; s < 20; s++) {
        RngStream rng(s);
        RngStream peek = rng;
        double theta = peek.phase(), theta_b = peek.phase();
        auto [a, b] = gen_problem1_instance(6, eps, DipeCase::same, rng);
        ASSERT_EQ(a.dim(), 7u);
        double want = 1 - 2 * eps + 2 * eps * eps + 2 * eps * (1 - eps) * std::cos(theta_b - theta);
        EXPECT_NEAR(overlap2(a, b), want, 1e-12);
        EXPECT_NEAR(std::norm(a.amplitudes()(0)), 1 - eps, 1e-12);
        EXPECT_NEAR(std::norm(b.amplitudes()(0)), 1 - eps, 1e-12);
    }
}

TEST(instances, problem1_case2_mean) {
    const double eps = 0.1;
    const int n = 10000;
    RngStream rng(3);
    double s = 0, s2 = 0;
    for (int i = 0; i < n; i++) {
        auto [a, b] = gen_problem1_instance(64, eps, DipeCase::independent, rng);
        double x = overlap2(a, b);
        s += x;
        s2 += x * x;
    }
    double mean = s / n, se = std::sqrt((s2 / n - mean * mean) / n);
    // E f2 = (1-eps)^2 + eps^2 / d; the cross term averages to zero.
    EXPECT_NEAR(mean, (1 - eps) * (1 - eps) + eps * eps / 64, 3 * se);
}

TEST(instances, swaplb_overlaps) {
    const double eps = 0.13;
    auto [p0, z0] = gen_swaplb_instance(eps, false);
    auto [p1, z1] = gen_swaplb_instance(eps, true);
    EXPECT_NEAR(overlap2(p0, z0), 0.5 - eps, 1e-12);
    EXPECT_NEAR(overlap2(p1, z1), 0.5 + eps, 1e-12);
    EXPECT_NEAR(overlap2(p0, p1), 1 - 4 * eps * eps, 1e-12);
    EXPECT_THROW(gen_swaplb_instance(0.5, false), std::invalid_argument);
}

TEST(instances, truncated_binomial) {
    RngStream rng(9);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(sample_truncated_binomial(50, 0.0, 0, rng).t, 0u);
    }
    const std::size_t k = 100;
    const double eps = 0.1;
    const std::size_t cap = static_cast<std::size_t>(100 * eps * 100 + 100);
    const int n = 100000;
    int over = 0;
    double s = 0, s2 = 0;
    for (int i = 0; i < n; i++) {
        auto t = sample_truncated_binomial(k, eps, cap, rng);
        over += t.overflow;
        s += double(t.t);
        s2 += double(t.t) * double(t.t);
    }
    EXPECT_LT(double(over) / n, 0.01);
    double mean = s / n, se = std::sqrt((s2 / n - mean * mean) / n);
    EXPECT_NEAR(mean, k * eps, 3 * se);
    // A tight cap does overflow.
    EXPECT_TRUE(sample_truncated_binomial(100, 0.9, 10, rng).overflow);
}

TEST(stats, wilson_known_values) {
    Interval w = wilson_interval(0, 10);
    EXPECT_EQ(w.lo, 0.0);
    EXPECT_NEAR(w.hi, 0.2775327998628892, 1e-12);
    Interval h = wilson_interval(50, 100);
    EXPECT_NEAR(h.lo, 0.4038315303659956, 1e-12);
    EXPECT_NEAR(h.hi, 0.5961684696340044, 1e-12);
    EXPECT_THROW(wilson_interval(3, 2), std::invalid_argument);
}

TEST(stats, moments_and_quantile) {
    Moments m = moments({1, 2, 3, 4});
    EXPECT_DOUBLE_EQ(m.mean, 2.5);
    EXPECT_DOUBLE_EQ(m.variance, 5.0 / 3.0);
    EXPECT_DOUBLE_EQ(m.se, std::sqrt(5.0 / 12.0));
    EXPECT_DOUBLE_EQ(quantile({4, 1, 3, 2}, 0.5), 2.5);
    EXPECT_DOUBLE_EQ(quantile({1, 2, 3, 4, 5}, 0.9), 4.6);
}

TEST(pool, every_index_once_and_lowest_error_wins) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
    for (int h : hits) {
        EXPECT_EQ(h, 1);
    }
    try {
        parallel_for(1000, 3, [](std::size_t i) {
            if (i == 700 || i == 900) {
                throw std::runtime_error(std::to_string(i));
            }
        });
        FAIL();
    } catch (const std::runtime_error &e) {
        EXPECT_EQ(std::string(e.what()), "700");
    }
}

TEST(config, json_round_trip_and_overrides) {
    ExperimentConfig c;
    c.experiment = "dipe-pi0";
    c.d = 25;
    c.k = 3;
    c.eps = 0.1 + 0.2;
    c.seed = 0xffffffffffffffffULL;
    c.setting = protocol::CommunicationSetting::interactive(7);
    c.transport = "tcp:127.0.0.1:0";
    c.format = OutputFormat::csv;
    c.params["window"] = 1.0 / 3.0;
    EXPECT_EQ(config_from_json(to_json(c)), c);

    ExperimentConfig o = config_from_json(nlohmann::json{{"d", 9}}, c);
    EXPECT_EQ(o.d, 9u);
    EXPECT_EQ(o.k, 3u);
    EXPECT_THROW(config_from_json(nlohmann::json{{"dd", 9}}), ConfigError);
    EXPECT_THROW(config_from_json(nlohmann::json{{"format", "xml"}}), ConfigError);
}

TEST(config, committed_defaults_load) {
    Defaults d = load_defaults(default_defaults_path());
    EXPECT_GT(d.dipe_c, 0.0);
    for (const auto &name : experiment_names()) {
        EXPECT_TRUE(d.experiments.count(name)) << name;
        EXPECT_EQ(d.config_for(name).experiment, name);
    }
}

namespace {

ExperimentConfig small(const std::string &name) {
    ExperimentConfig c;
    c.experiment = name;
    c.d = 4;
    c.k = 3;
    c.m = 4;
    c.n_bases = 2;
    c.f = 0.5;
    c.trials = 40;
    c.seed = 123;
    c.params["dipe_c"] = 2;
    return c;
}

}  // namespace

TEST(results, every_experiment_round_trips_both_formats) {
    for (const auto &name : experiment_names()) {
        ExperimentConfig c = small(name);
        if (name == "dipe-calibrate") {
            c.params["c_max"] = 2;
        }
        if (name == "mp-bound-check" || name == "spectrum-check" || name == "tracedist-check") {
            c.d = 3;
            c.k = 2;
            c.trials = 3;
        }
        ExperimentResult r = run_experiment(c);
        for (auto fmt : {OutputFormat::csv, OutputFormat::json}) {
            std::string text = emit_result(r, fmt);
            EXPECT_EQ(parse_result(text, fmt), r) << name << " " << format_name(fmt);
            EXPECT_EQ(emit_result(parse_result(text, fmt), fmt), text) << name;
        }
    }
}

TEST(results, rerun_is_byte_identical_and_thread_independent) {
    ExperimentConfig c = small("estimate-singlecopy");
    c.threads = 1;
    std::string one = emit_result(run_experiment(c), OutputFormat::csv);
    c.threads = 4;
    EXPECT_EQ(emit_result(run_experiment(c), OutputFormat::csv), one);
    EXPECT_EQ(emit_result(run_experiment(c), OutputFormat::csv), one);
}

TEST(results, non_finite_values_survive) {
    ExperimentResult r;
    r.config.experiment = "x";
    r.metrics = {{"inf", INFINITY}, {"neg", -INFINITY}};
    r.summary.mean = 0.1;
    for (auto fmt : {OutputFormat::csv, OutputFormat::json}) {
        EXPECT_EQ(parse_result(emit_result(r, fmt), fmt), r);
    }
    EXPECT_THROW(parse_result("garbage", OutputFormat::csv), std::invalid_argument);
    EXPECT_THROW(parse_result("{}", OutputFormat::json), std::invalid_argument);
}

TEST(run, errors) {
    ExperimentConfig c = small("no-such-thing");
    EXPECT_THROW(run_experiment(c), UnknownExperiment);
    c = small("spectrum-check");
    c.d = 10;
    c.k = 6;
    try {
        run_experiment(c);
        FAIL();
    } catch (const InfeasibleExperiment &e) {
        EXPECT_NE(std::string(e.what()).find("d^k <="), std::string::npos);
    }
    c = small("estimate-multicopy");
    c.setting = protocol::CommunicationSetting::one_way();
    EXPECT_THROW(run_experiment(c), ConfigError);
    c = small("dipe-threshold");
    c.k = 0;
    c.params.clear();
    EXPECT_THROW(run_experiment(c), ConfigError);
}

TEST(run, tcp_transport_gives_identical_results) {
    ExperimentConfig c = small("estimate-multicopy");
    c.trials = 10;
    ExperimentResult local = run_experiment(c);
    c.transport = "tcp";
    ExperimentResult remote = run_experiment(c);
    remote.config.transport = "inproc";
    EXPECT_EQ(local, remote);
}

TEST(run, interactive_multicopy_matches_smp) {
    ExperimentConfig c = small("estimate-multicopy");
    ExperimentResult smp = run_experiment(c);
    c.setting = protocol::CommunicationSetting::interactive(2);
    ExperimentResult inter = run_experiment(c);
    ASSERT_EQ(smp.trials.size(), inter.trials.size());
    for (std::size_t i = 0; i < smp.trials.size(); i++) {
        EXPECT_EQ(smp.trials[i].w, inter.trials[i].w);
    }
    EXPECT_LT(inter.metric("bytes_per_run"), smp.metric("bytes_per_run"));
}

TEST(run, multicopy_error_p90_shrinks_with_k) {
    ExperimentConfig c = small("estimate-multicopy");
    c.d = 8;
    c.trials = 2000;
    double last = INFINITY;
    for (std::size_t k : {4, 16, 64, 256}) {
        c.k = k;
        double p90 = run_experiment(c).metric("abs_err_p90");
        EXPECT_LT(p90, last) << "k=" << k;
        last = p90;
    }
}

TEST(run, small_checks_pass) {
    ExperimentConfig c = small("tracedist-check");
    c.d = 25;
    c.k = 3;
    ExperimentResult t = run_experiment(c);
    EXPECT_TRUE(*t.summary.passed);
    EXPECT_NEAR(t.metric("block_value"), 0.24849480021893816, 1e-14);

    c = small("spectrum-check");
    c.d = 3;
    c.k = 2;
    ExperimentResult s = run_experiment(c);
    EXPECT_TRUE(*s.summary.passed);
    EXPECT_EQ(s.metric("numeric_checked"), 1.0);

    c = small("variance-check-swap");
    c.k = 100;
    c.trials = 20000;
    ExperimentResult w = run_experiment(c);
    EXPECT_TRUE(*w.summary.passed) << w.metric("ratio") << " " << w.metric("generalized_var_f1_haar");
}

TEST(run, dipe_pi0_gap_matches_closed_form) {
    ExperimentConfig c = small("dipe-pi0");
    c.d = 25;
    c.k = 3;
    c.trials = 2000;
    ExperimentResult r = run_experiment(c);
    EXPECT_TRUE(*r.summary.passed) << r.metric("gap") << " vs " << r.metric("gap_exact");
    EXPECT_EQ(r.trials.size(), 4000u);
}
