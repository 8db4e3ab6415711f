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

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "runner.hpp"

namespace {

struct FlagSpec {
    const char *flag;
    const char *key;
    const char *help;
};

constexpr FlagSpec kNumericFlags[] = {
    {"--k11", "k11", "rate 1 <- 1"},
    {"--k12", "k12", "rate 1 <- 2"},
    {"--k21", "k21", "rate 2 <- 1"},
    {"--k22", "k22", "rate 2 <- 2"},
    {"--alpha", "alpha", "Hamiltonian mean energy"},
    {"--beta", "beta", "Hamiltonian coupling"},
    {"--delta", "delta", "Hamiltonian detuning"},
    {"--c1", "c1", "initial amplitude/multiplicity of state 1"},
    {"--c2", "c2", "initial amplitude/multiplicity of state 2 (quantum modes default to sqrt(1 - c1^2))"},
    {"--lambda", "lambda", "scale of K = lambda (H - alpha I), default 1"},
    {"--hbar", "hbar", "reduced Planck constant, default 1"},
    {"--n-max", "n_max", "last step"},
    {"--t-max", "t_max", "end time of the schrodinger grid (default three periods)"},
    {"--grid", "grid_points", "number of grid points"},
    {"--a-plus", "a_plus", "positive path count"},
    {"--a-minus", "a_minus", "negative path count"},
    {"--phi", "phi", "coin impact angle (omit for a grid over [0, 4 pi])"},
};

}  // namespace

int main(int argc, char **argv) {
    using namespace qsp::cli;

    CLI::App app{"Two-state classical and quantum stochastic processes"};
    app.footer(
        "Modes: csp qsp schrodinger oracle ensemble coin compare.\n"
        "Figures: fig1 fig3a fig3b fig3c fig3d fig4a fig4b fig7.\n"
        "Precedence: figure preset < config file < flags.\n"
        "Exit status: 0 ok, 2 config error, 3 numerical/assertion failure, 4 oracle budget exceeded.");

    std::optional<std::string> mode, figure, format, out, config_path;
    app.add_option("--mode", mode, "experiment mode");
    app.add_option("--figure", figure, "emit the data behind a figure preset");
    app.add_option("--format", format, "csv (default) or json");
    app.add_option("--out", out, "write output to this file instead of stdout");
    app.add_option("--config", config_path, "key=value or JSON config file");

    std::map<std::string, std::optional<double>> numeric;
    for (const auto &spec : kNumericFlags) {
        app.add_option(spec.flag, numeric[spec.key], spec.help);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "config_error: " << e.what() << '\n';
        return kExitConfigError;
    }

    ExperimentConfig flags;
    try {
        if (config_path) {
            flags = load_config_file(*config_path);
        }
        ExperimentConfig overrides;
        if (mode) {
            overrides.mode = parse_mode(*mode);
            if (!overrides.mode) {
                throw ConfigError("unknown mode '" + *mode + "'");
            }
        }
        if (format) {
            if (*format == "csv") {
                overrides.format = OutputFormat::Csv;
            } else if (*format == "json") {
                overrides.format = OutputFormat::Json;
            } else {
                throw ConfigError("unknown output format '" + *format + "' (expected csv or json)");
            }
        }
        overrides.output_path = out;
        for (const auto &[key, value] : numeric) {
            if (value) {
                overrides.parameters[key] = *value;
            }
        }
        flags.merge(overrides);
    } catch (const ConfigError &e) {
        std::cerr << "config_error: " << e.what() << '\n';
        return kExitConfigError;
    }

    if (figure) {
        return emit_figure_data(*figure, flags, std::cout, std::cerr);
    }
    return run(flags, std::cout, std::cerr);
}
