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

#ifndef QSP_TOOLS_RUNNER_HPP
#define QSP_TOOLS_RUNNER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "config.hpp"

namespace qsp::cli {

enum ExitStatus : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitNumericalFailure = 3,
    kExitOracleBudget = 4,
};

/// Empty cells are std::monostate.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Output of one experiment before serialization.
struct Report {
    Mode mode = Mode::Csp;
    /// Effective parameters after defaults, echoed in the metadata line.
    std::vector<std::pair<std::string, double>> parameters;
    std::vector<std::pair<std::string, Cell>> summary;
    Table table;
    std::vector<std::string> warnings;
    /// Set when the run completed but a verification inside it failed (exit status 3).
    std::string failure;
};

/// Shortest decimal with 15 significant digits; negative zero prints as 0.
std::string format_number(double v);

/// Runs a validated configuration. Throws ConfigError, OracleBudgetExceeded or other
/// library exceptions; run() maps those onto exit statuses.
Report execute(const ExperimentConfig &config);

void write_csv(const Report &report, std::ostream &out);
void write_json(const Report &report, std::ostream &out);

/// Validates, executes and writes the report to config.output_path (or `out`). Errors are
/// reported as a single "<kind>: <message>" line on `err`. Returns the process exit status.
int run(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

/// Runs the preset for a figure id, honouring format and output path from `overrides`.
int emit_figure_data(std::string_view figure, const ExperimentConfig &overrides, std::ostream &out, std::ostream &err);

}  // namespace qsp::cli

#endif
