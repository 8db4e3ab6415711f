// Copyright 2026 The QSP Authors
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

#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qsp::cli {

namespace {

const std::vector<std::string> kRateKeys = {"k11", "k12", "k21", "k22"};

struct ModeKeys {
    std::set<std::string> allowed;
    std::set<std::string> required;
    std::set<std::string> integral;
};

ModeKeys keys_for(Mode mode) {
    switch (mode) {
        case Mode::Csp:
            return {{"k11", "k12", "k21", "k22", "c1", "c2", "n_max"}, {"k11", "k12", "k21", "k22"}, {"n_max"}};
        case Mode::Qsp:
            return {{"k11", "k12", "k21", "k22", "alpha", "beta", "delta", "lambda", "hbar", "c1", "c2", "n_max"},
                    {},
                    {"n_max"}};
        case Mode::Schrodinger:
            return {{"alpha", "beta", "delta", "hbar", "c1", "c2", "t_max", "grid_points"}, {"beta", "delta"},
                    {"grid_points"}};
        case Mode::Oracle:
            return {{"k11", "k12", "k21", "k22", "c1", "c2", "n_max"},
                    {"k11", "k12", "k21", "k22"},
                    {"k11", "k12", "k21", "k22", "c1", "c2", "n_max"}};
        case Mode::Ensemble:
            return {{"a_plus", "a_minus"}, {"a_plus", "a_minus"}, {"a_plus", "a_minus"}};
        case Mode::Coin:
            return {{"phi", "grid_points"}, {}, {"grid_points"}};
        case Mode::Compare:
            return {{"alpha", "beta", "delta", "hbar", "lambda", "c1", "c2", "n_max"}, {"beta", "delta"}, {"n_max"}};
    }
    return {};
}

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string &key, const std::string &text) {
    const char *begin = text.c_str();
    char *end = nullptr;
    double v = std::strtod(begin, &end);
    if (text.empty() || end != begin + text.size() || !std::isfinite(v)) {
        throw ConfigError("parameter '" + key + "' is not a finite number: '" + text + "'");
    }
    return v;
}

OutputFormat parse_format(const std::string &text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw ConfigError("unknown output format '" + text + "' (expected csv or json)");
}

std::string parameter_key(const std::string &raw_key) {
    std::string key = canonical_key(raw_key);
    const auto &names = parameter_names();
    if (std::find(names.begin(), names.end(), key) == names.end()) {
        throw ConfigError("unknown key '" + raw_key + "'");
    }
    return key;
}

void set_field(ExperimentConfig &config, const std::string &raw_key, const std::string &value) {
    std::string key = canonical_key(raw_key);
    if (key == "mode") {
        config.mode = parse_mode(value);
        if (!config.mode) {
            throw ConfigError("unknown mode '" + value + "'");
        }
    } else if (key == "format") {
        config.format = parse_format(value);
    } else if (key == "out") {
        config.output_path = value;
    } else {
        config.parameters[parameter_key(raw_key)] = parse_number(key, value);
    }
}

ExperimentConfig parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(std::string("malformed JSON config: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("JSON config must be an object");
    }
    ExperimentConfig config;
    auto apply = [&](const std::string &key, const nlohmann::json &value) {
        if (value.is_string()) {
            set_field(config, key, value.get<std::string>());
        } else if (value.is_number()) {
            std::string k = canonical_key(key);
            if (k == "mode" || k == "format" || k == "out") {
                throw ConfigError("key '" + key + "' must be a string");
            }
            k = parameter_key(key);
            double v = value.get<double>();
            if (!std::isfinite(v)) {
                throw ConfigError("parameter '" + key + "' is not finite");
            }
            config.parameters[k] = v;
        } else {
            throw ConfigError("key '" + key + "' must be a number or string");
        }
    };
    for (const auto &[key, value] : doc.items()) {
        if (key == "parameters") {
            if (!value.is_object()) {
                throw ConfigError("'parameters' must be an object");
            }
            for (const auto &[pk, pv] : value.items()) {
                apply(pk, pv);
            }
        } else {
            apply(key, value);
        }
    }
    return config;
}

}  // namespace

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::Csp:
            return "csp";
        case Mode::Qsp:
            return "qsp";
        case Mode::Schrodinger:
            return "schrodinger";
        case Mode::Oracle:
            return "oracle";
        case Mode::Ensemble:
            return "ensemble";
        case Mode::Coin:
            return "coin";
        case Mode::Compare:
            return "compare";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
    for (Mode m : {Mode::Csp, Mode::Qsp, Mode::Schrodinger, Mode::Oracle, Mode::Ensemble, Mode::Coin, Mode::Compare}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

double ExperimentConfig::get(const std::string &key, double fallback) const {
    auto it = parameters.find(key);
    return it == parameters.end() ? fallback : it->second;
}

double ExperimentConfig::require(const std::string &key) const {
    auto it = parameters.find(key);
    if (it == parameters.end()) {
        throw ConfigError("missing required key '" + key + "'");
    }
    return it->second;
}

void ExperimentConfig::merge(const ExperimentConfig &other) {
    if (other.mode) {
        mode = other.mode;
    }
    for (const auto &[k, v] : other.parameters) {
        parameters[k] = v;
    }
    if (other.format) {
        format = other.format;
    }
    if (other.output_path) {
        output_path = other.output_path;
    }
}

const std::vector<std::string> &parameter_names() {
    static const std::vector<std::string> names = {
        "k11", "k12",   "k21",  "k22",   "alpha",       "beta",   "delta",   "c1",  "c2",
        "lambda", "hbar", "n_max", "t_max", "grid_points", "a_plus", "a_minus", "phi",
    };
    return names;
}

std::string canonical_key(std::string_view key) {
    std::string k(key);
    std::replace(k.begin(), k.end(), '-', '_');
    if (k == "grid") {
        return "grid_points";
    }
    return k;
}

ExperimentConfig parse_config_text(std::string_view text) {
    std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
        return parse_json(body);
    }
    ExperimentConfig config;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::string content = trim(line);
        if (content.empty()) {
            continue;
        }
        auto eq = content.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        set_field(config, trim(content.substr(0, eq)), trim(content.substr(eq + 1)));
    }
    return config;
}

ExperimentConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void validate(const ExperimentConfig &config) {
    if (!config.mode) {
        throw ConfigError("no mode selected (use --mode or --figure)");
    }
    Mode mode = *config.mode;
    ModeKeys keys = keys_for(mode);
    for (const auto &[k, v] : config.parameters) {
        if (!keys.allowed.count(k)) {
            throw ConfigError("key '" + k + "' is not used by mode " + std::string(to_string(mode)));
        }
        if (keys.integral.count(k) && v != std::floor(v)) {
            throw ConfigError("key '" + k + "' must be an integer");
        }
    }
    for (const auto &k : keys.required) {
        if (!config.has(k)) {
            throw ConfigError("mode " + std::string(to_string(mode)) + " requires key '" + k + "'");
        }
    }
    if (mode == Mode::Qsp) {
        bool any_rates = std::any_of(kRateKeys.begin(), kRateKeys.end(), [&](const auto &k) { return config.has(k); });
        bool all_rates = std::all_of(kRateKeys.begin(), kRateKeys.end(), [&](const auto &k) { return config.has(k); });
        bool hamiltonian = config.has("beta") || config.has("delta") || config.has("alpha");
        if (any_rates && hamiltonian) {
            throw ConfigError("mode qsp takes either k11..k22 or alpha/beta/delta, not both");
        }
        if (any_rates && !all_rates) {
            throw ConfigError("mode qsp requires all of k11, k12, k21, k22");
        }
        if (!any_rates && !(config.has("beta") && config.has("delta"))) {
            throw ConfigError("mode qsp requires k11..k22 or beta and delta");
        }
    }
    if (config.get("n_max", 0) < 0) {
        throw ConfigError("n_max must be nonnegative");
    }
    if (config.has("grid_points") && config.get("grid_points", 0) < 1) {
        throw ConfigError("grid_points must be at least 1");
    }
    if (config.has("hbar") && !(config.get("hbar", 1) > 0)) {
        throw ConfigError("hbar must be positive");
    }
    if (config.has("t_max") && config.get("t_max", 0) < 0) {
        throw ConfigError("t_max must be nonnegative");
    }
    if (config.has("lambda") && config.get("lambda", 1) == 0) {
        throw ConfigError("lambda must be nonzero");
    }
    if (mode == Mode::Csp) {
        for (const auto &k : {"k11", "k12", "k21", "k22", "c1", "c2"}) {
            if (config.get(k, 0) < 0) {
                throw ConfigError(std::string("mode csp requires nonnegative '") + k + "'");
            }
        }
    }
    if (mode == Mode::Oracle || mode == Mode::Ensemble) {
        for (const auto &k : {"c1", "c2", "a_plus", "a_minus"}) {
            if (config.get(k, 0) < 0) {
                throw ConfigError(std::string("key '") + k + "' must be nonnegative");
            }
        }
    }
}

const std::vector<std::string> &figure_ids() {
    static const std::vector<std::string> ids = {"fig1",  "fig3a", "fig3b", "fig3c",
                                                 "fig3d", "fig4a", "fig4b", "fig7"};
    return ids;
}

ExperimentConfig figure_preset(std::string_view figure) {
    ExperimentConfig c;
    auto classical = [&](double k11, double k12, double k21, double k22) {
        c.mode = Mode::Csp;
        c.parameters = {{"k11", k11}, {"k12", k12}, {"k21", k21}, {"k22", k22}, {"c1", 1}, {"c2", 0}, {"n_max", 12}};
    };
    const std::map<std::string, double> fig1_hamiltonian = {
        {"alpha", 0}, {"beta", 1.56}, {"delta", 1.255}, {"c1", 0.825}};
    if (figure == "fig1") {
        c.mode = Mode::Schrodinger;
        c.parameters = fig1_hamiltonian;
        c.parameters["grid_points"] = 301;
    } else if (figure == "fig3a") {
        classical(1, 1, 1, 1);
    } else if (figure == "fig3b") {
        classical(2, 1, 1, 2);
    } else if (figure == "fig3c") {
        classical(1, 2, 2, 1);
    } else if (figure == "fig3d") {
        classical(0, 1, 1, 0);
    } else if (figure == "fig4a") {
        c.mode = Mode::Qsp;
        c.parameters = fig1_hamiltonian;
        c.parameters["lambda"] = 1;
        c.parameters["n_max"] = 20;
    } else if (figure == "fig4b") {
        c.mode = Mode::Compare;
        c.parameters = fig1_hamiltonian;
        c.parameters["lambda"] = 1;
        c.parameters["n_max"] = 20;
    } else if (figure == "fig7") {
        c.mode = Mode::Coin;
        c.parameters = {{"grid_points", 721}};
    } else {
        throw ConfigError("unknown figure '" + std::string(figure) + "'");
    }
    return c;
}

}  // namespace qsp::cli
