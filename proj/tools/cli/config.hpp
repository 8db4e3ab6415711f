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

#ifndef QSP_TOOLS_CONFIG_HPP
#define QSP_TOOLS_CONFIG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsp::cli {

enum class Mode { Csp, Qsp, Schrodinger, Oracle, Ensemble, Coin, Compare };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

/// Invalid or incomplete experiment configuration (exit status 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::optional<Mode> mode;
    /// Flat numeric parameters keyed by canonical name (k11, beta, n_max, grid_points, ...).
    std::map<std::string, double> parameters;
    std::optional<OutputFormat> format;
    std::optional<std::string> output_path;

    bool has(const std::string &key) const { return parameters.count(key) != 0; }
    double get(const std::string &key, double fallback) const;
    double require(const std::string &key) const;
    OutputFormat output_format() const { return format.value_or(OutputFormat::Csv); }

    /// Copies every field set in `other` over this config.
    void merge(const ExperimentConfig &other);
};

/// Canonical parameter names; flag and file spellings with '-' map to '_' and "grid" to "grid_points".
const std::vector<std::string> &parameter_names();
std::string canonical_key(std::string_view key);

/// Parses a config file body: a JSON object or flat key=value lines ('#' starts a comment).
ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig load_config_file(const std::string &path);

/// Checks the mode is set, required keys are present, no key is foreign to the mode, and
/// integer-valued keys hold integers. Throws ConfigError.
void validate(const ExperimentConfig &config);

/// Preset configuration for a figure id (fig1, fig3a..fig3d, fig4a, fig4b, fig7).
ExperimentConfig figure_preset(std::string_view figure);
const std::vector<std::string> &figure_ids();

}  // namespace qsp::cli

#endif
