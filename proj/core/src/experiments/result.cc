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

#include "dqipe/experiments/result.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace dqipe::experiments {

bool ExperimentResult::operator==(const ExperimentResult &o) const {
    return config == o.config && per_trial == o.per_trial && trials == o.trials && summary == o.summary &&
           metrics == o.metrics;
}

double ExperimentResult::metric(const std::string &name) const {
    for (const auto &m : metrics) {
        if (m.name == name) {
            return m.value;
        }
    }
    throw std::out_of_range("no metric named '" + name + "'");
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string &s) {
    double x = 0.0;
    const char *begin = s.data();
    const char *end = begin + s.size();
    if (!s.empty() && s[0] == '+') {
        begin++;
    }
    auto res = std::from_chars(begin, end, x);
    if (res.ec != std::errc() || res.ptr != end) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return x;
}

std::size_t parse_size(const std::string &s) {
    std::size_t x = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an unsigned integer: '" + s + "'");
    }
    return x;
}

// JSON has no inf/nan; those travel as strings.
nlohmann::json num(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    return format_double(x);
}

double num_from(const nlohmann::json &j) {
    if (j.is_string()) {
        return parse_double(j.get<std::string>());
    }
    return j.get<double>();
}

nlohmann::json summary_json(const Summary &s) {
    nlohmann::json j = {{"count", s.count}, {"mean", num(s.mean)}, {"variance", num(s.variance)}, {"se", num(s.se)}};
    if (s.success_rate) {
        j["success_rate"] = num(*s.success_rate);
    }
    if (s.wilson_lo) {
        j["wilson_lo"] = num(*s.wilson_lo);
    }
    if (s.wilson_hi) {
        j["wilson_hi"] = num(*s.wilson_hi);
    }
    if (s.passed) {
        j["passed"] = *s.passed;
    }
    return j;
}

Summary summary_from(const nlohmann::json &j) {
    Summary s;
    s.count = j.at("count").get<std::size_t>();
    s.mean = num_from(j.at("mean"));
    s.variance = num_from(j.at("variance"));
    s.se = num_from(j.at("se"));
    if (j.contains("success_rate")) {
        s.success_rate = num_from(j["success_rate"]);
    }
    if (j.contains("wilson_lo")) {
        s.wilson_lo = num_from(j["wilson_lo"]);
    }
    if (j.contains("wilson_hi")) {
        s.wilson_hi = num_from(j["wilson_hi"]);
    }
    if (j.contains("passed")) {
        s.passed = j["passed"].get<bool>();
    }
    return s;
}

std::string opt_cell(const std::optional<double> &x) {
    return x ? format_double(*x) : std::string();
}

std::optional<double> opt_from(const std::string &s) {
    if (s.empty()) {
        return std::nullopt;
    }
    return parse_double(s);
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

const char *kTrialHeader = "trial,seed_path,w,raw_stat";
const char *kCheckColumns[] = {"experiment", "d",  "k",        "m",         "n_bases",   "eps",
                               "f",          "trials", "seed", "count", "mean",    "variance",
                               "se",         "success_rate", "wilson_lo", "wilson_hi", "passed"};
constexpr std::size_t kConfigColumns = 9;

std::string emit_json(const ExperimentResult &r) {
    nlohmann::json metrics = nlohmann::json::array();
    for (const auto &m : r.metrics) {
        metrics.push_back({{"name", m.name}, {"value", num(m.value)}});
    }
    nlohmann::json j = {{"format", "dqipe-result"},
                        {"version", 1},
                        {"config", to_json(r.config)},
                        {"per_trial", r.per_trial},
                        {"summary", summary_json(r.summary)},
                        {"metrics", metrics}};
    if (r.per_trial) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &t : r.trials) {
            rows.push_back({{"trial", t.trial}, {"seed_path", t.seed_path}, {"w", num(t.w)}, {"raw_stat", num(t.raw)}});
        }
        j["trials"] = std::move(rows);
    }
    return j.dump(1) + "\n";
}

ExperimentResult parse_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("format", "") != "dqipe-result" || j.value("version", 0) != 1) {
        throw std::invalid_argument("not a dqipe-result v1 document");
    }
    ExperimentResult r;
    r.config = config_from_json(j.at("config"));
    r.per_trial = j.at("per_trial").get<bool>();
    r.summary = summary_from(j.at("summary"));
    for (const auto &m : j.at("metrics")) {
        r.metrics.push_back({m.at("name").get<std::string>(), num_from(m.at("value"))});
    }
    if (r.per_trial) {
        for (const auto &t : j.at("trials")) {
            r.trials.push_back({t.at("trial").get<std::size_t>(), t.at("seed_path").get<std::string>(),
                                num_from(t.at("w")), num_from(t.at("raw_stat"))});
        }
    }
    return r;
}

std::string emit_csv(const ExperimentResult &r) {
    std::ostringstream out;
    out << "# dqipe-result v1\n";
    out << "# config: " << to_json(r.config).dump() << "\n";
    if (r.per_trial) {
        out << kTrialHeader << "\n";
        for (const auto &t : r.trials) {
            out << t.trial << "," << t.seed_path << "," << format_double(t.w) << "," << format_double(t.raw) << "\n";
        }
        nlohmann::json metrics = nlohmann::json::array();
        for (const auto &m : r.metrics) {
            metrics.push_back({{"name", m.name}, {"value", num(m.value)}});
        }
        out << "# summary: " << summary_json(r.summary).dump() << "\n";
        out << "# metrics: " << metrics.dump() << "\n";
        return out.str();
    }
    bool first = true;
    for (const char *c : kCheckColumns) {
        out << (first ? "" : ",") << c;
        first = false;
    }
    for (const auto &m : r.metrics) {
        out << "," << m.name;
    }
    out << "\n";
    const auto &c = r.config;
    const auto &s = r.summary;
    out << c.experiment << "," << c.d << "," << c.k << "," << c.m << "," << c.n_bases << "," << format_double(c.eps)
        << "," << format_double(c.f) << "," << c.trials << "," << c.seed << "," << s.count << ","
        << format_double(s.mean) << "," << format_double(s.variance) << "," << format_double(s.se) << ","
        << opt_cell(s.success_rate) << "," << opt_cell(s.wilson_lo) << "," << opt_cell(s.wilson_hi) << ","
        << (s.passed ? (*s.passed ? "true" : "false") : "");
    for (const auto &m : r.metrics) {
        out << "," << format_double(m.value);
    }
    out << "\n";
    return out.str();
}

std::string after_prefix(const std::string &line, const std::string &prefix) {
    if (line.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("expected a line starting with '" + prefix + "'");
    }
    return line.substr(prefix.size());
}

ExperimentResult parse_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (line != "# dqipe-result v1") {
        throw std::invalid_argument("not a dqipe-result v1 CSV file");
    }
    ExperimentResult r;
    std::getline(in, line);
    r.config = config_from_json(nlohmann::json::parse(after_prefix(line, "# config: ")));
    std::getline(in, line);
    if (line == kTrialHeader) {
        r.per_trial = true;
        while (std::getline(in, line) && line.rfind("# ", 0) != 0) {
            auto cells = split_csv(line);
            if (cells.size() != 4) {
                throw std::invalid_argument("trial row needs 4 cells: " + line);
            }
            r.trials.push_back({parse_size(cells[0]), cells[1], parse_double(cells[2]), parse_double(cells[3])});
        }
        r.summary = summary_from(nlohmann::json::parse(after_prefix(line, "# summary: ")));
        std::getline(in, line);
        for (const auto &m : nlohmann::json::parse(after_prefix(line, "# metrics: "))) {
            r.metrics.push_back({m.at("name").get<std::string>(), num_from(m.at("value"))});
        }
        return r;
    }
    auto header = split_csv(line);
    std::string row;
    std::getline(in, row);
    auto cells = split_csv(row);
    constexpr std::size_t fixed = std::size(kCheckColumns);
    if (header.size() < fixed || cells.size() != header.size()) {
        throw std::invalid_argument("summary row does not match its header");
    }
    for (std::size_t i = 0; i < fixed; i++) {
        if (header[i] != kCheckColumns[i]) {
            throw std::invalid_argument("unexpected column '" + header[i] + "'");
        }
    }
    Summary &s = r.summary;
    std::size_t i = kConfigColumns;
    s.count = parse_size(cells[i++]);
    s.mean = parse_double(cells[i++]);
    s.variance = parse_double(cells[i++]);
    s.se = parse_double(cells[i++]);
    s.success_rate = opt_from(cells[i++]);
    s.wilson_lo = opt_from(cells[i++]);
    s.wilson_hi = opt_from(cells[i++]);
    const std::string &passed = cells[i++];
    if (!passed.empty()) {
        s.passed = passed == "true";
    }
    for (; i < header.size(); i++) {
        r.metrics.push_back({header[i], parse_double(cells[i])});
    }
    return r;
}

}  // namespace

std::string emit_result(const ExperimentResult &r, OutputFormat format) {
    return format == OutputFormat::csv ? emit_csv(r) : emit_json(r);
}

ExperimentResult parse_result(const std::string &text, OutputFormat format) {
    try {
        return format == OutputFormat::csv ? parse_csv(text) : parse_json(text);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("parse_result: ") + e.what());
    }
}

void write_result(const ExperimentResult &r, const std::string &path, OutputFormat format) {
    std::string text = emit_result(r, format);
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

}  // namespace dqipe::experiments
