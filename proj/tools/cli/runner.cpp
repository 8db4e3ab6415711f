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

#include "runner.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsp/qsp.hpp"

namespace qsp::cli {

namespace {

/// Past 2^53 a double no longer holds every integer path count.
constexpr double kExactIntegerLimit = 9007199254740992.0;

constexpr double kCompareTolerance = 1e-9;

double quantum_c2(const ExperimentConfig &config, double c1) {
    if (config.has("c2")) {
        return config.require("c2");
    }
    if (std::abs(c1) > 1) {
        throw ConfigError("c2 omitted and |c1| > 1, so sqrt(1 - c1^2) is undefined");
    }
    return std::sqrt(1 - c1 * c1);
}

Hamiltonian hamiltonian_from_config(const ExperimentConfig &config) {
    Hamiltonian h{config.get("alpha", 0), config.require("beta"), config.require("delta"), config.get("hbar", 1)};
    if (h.beta == 0 && h.delta == 0) {
        throw ConfigError("beta and delta are both zero; the period is undefined");
    }
    return h;
}

TransitionMatrix rates_from_config(const ExperimentConfig &config) {
    return {config.require("k11"), config.require("k12"), config.require("k21"), config.require("k22")};
}

void check_exact_range(const SignalVector &a, Report &report, bool &warned) {
    if (!warned && (std::abs(a.a1) > kExactIntegerLimit || std::abs(a.a2) > kExactIntegerLimit)) {
        report.warnings.push_back("|a_i| exceeds 2^53 at n=" + std::to_string(a.n) +
                                  "; signals are no longer exact integer path counts");
        warned = true;
    }
}

Report run_csp(const ExperimentConfig &config) {
    Report r;
    TransitionMatrix k = rates_from_config(config);
    InitialState c{config.get("c1", 1), config.get("c2", 0)};
    auto n_max = static_cast<std::int64_t>(config.get("n_max", 20));
    r.parameters = {{"k11", k.k11}, {"k12", k.k12}, {"k21", k.k21}, {"k22", k.k22},
                    {"c1", c.c1},   {"c2", c.c2},   {"n_max", static_cast<double>(n_max)}};

    try {
        r.summary.emplace_back("dynamics", std::string(to_string(classify_dynamics(k))));
    } catch (const UnclassifiedDynamics &) {
        r.summary.emplace_back("dynamics", std::string("unclassified"));
    }
    try {
        auto stationary = stationary_probability(k);
        r.summary.emplace_back("stationary_P1", stationary ? Cell{stationary->p1} : Cell{std::string("none")});
    } catch (const std::exception &) {
        r.summary.emplace_back("stationary_P1", std::string("undefined"));
    }

    r.table.columns = {"n", "a1", "a2", "P1", "P2"};
    bool warned = false;
    SignalVector a{c.c1, c.c2, 0, 1};
    for (std::int64_t n = 0; n <= n_max; n++) {
        check_exact_range(a, r, warned);
        Probabilities p = classical_probability(a);
        r.table.rows.push_back({a.n, a.a1, a.a2, p.p1, p.p2});
        a = propagate_step(k, a);
    }
    return r;
}

Report run_qsp(const ExperimentConfig &config) {
    Report r;
    double lambda = config.get("lambda", 1);
    double hbar = config.get("hbar", 1);
    double c1 = config.get("c1", 1);
    InitialState c{c1, quantum_c2(config, c1)};
    auto n_max = static_cast<std::int64_t>(config.get("n_max", 20));

    TransitionMatrix k;
    std::optional<Hamiltonian> h;
    if (config.has("beta")) {
        h = hamiltonian_from_config(config);
        k = transition_from_hamiltonian(*h, lambda);
        r.parameters = {{"alpha", h->alpha}, {"beta", h->beta}, {"delta", h->delta}, {"hbar", h->hbar},
                        {"lambda", lambda}};
    } else {
        k = rates_from_config(config);
        r.parameters = {{"k11", k.k11}, {"k12", k.k12}, {"k21", k.k21}, {"k22", k.k22}, {"lambda", lambda},
                        {"hbar", hbar}};
        if (nearly_equal(k.k12, k.k21) && oscillation_condition(k)) {
            h = hamiltonian_from_transition(k, lambda, 0, hbar);
        }
    }
    r.parameters.insert(r.parameters.end(), {{"c1", c.c1}, {"c2", c.c2}, {"n_max", static_cast<double>(n_max)}});

    double tau = h ? period(*h) / 2 : 1;
    r.summary.emplace_back("oscillation_condition", oscillation_condition(k));
    if (h) {
        r.summary.emplace_back("equivalent_beta", h->beta);
        r.summary.emplace_back("equivalent_delta", h->delta);
        r.summary.emplace_back("period", period(*h));
    }
    r.summary.emplace_back("tau", tau);

    r.table.columns = {"n", "t", "theta", "t_over_T", "a1", "a2", "P1", "P2"};
    bool warned = false;
    SignalVector a{c.c1, c.c2, 0, tau};
    for (std::int64_t n = 0; n <= n_max; n++) {
        check_exact_range(a, r, warned);
        Probabilities p = born_probability(a);
        Cell theta, t_over_t;
        if (h) {
            theta = theta_at(*h, a.time());
            t_over_t = a.time() / period(*h);
        }
        r.table.rows.push_back({a.n, a.time(), theta, t_over_t, a.a1, a.a2, p.p1, p.p2});
        a = propagate_step(k, a);
    }
    return r;
}

Report run_schrodinger(const ExperimentConfig &config) {
    Report r;
    Hamiltonian h = hamiltonian_from_config(config);
    double c1 = config.get("c1", 1);
    InitialState c{c1, quantum_c2(config, c1)};
    double T = period(h);
    double t_max = config.get("t_max", 3 * T);
    auto grid = static_cast<std::int64_t>(config.get("grid_points", 301));
    r.parameters = {{"alpha", h.alpha}, {"beta", h.beta}, {"delta", h.delta}, {"hbar", h.hbar},
                    {"c1", c.c1},       {"c2", c.c2},     {"t_max", t_max},   {"grid_points", static_cast<double>(grid)}};

    AmplitudeBounds bounds = amplitude_bounds(h, c);
    r.summary = {{"period", T}, {"P_prime", bounds.p_prime}, {"P_double_prime", bounds.p_double_prime}};

    r.table.columns = {"t", "theta", "t_over_T", "P1", "P2", "psi1_re", "psi1_im", "psi2_re", "psi2_im"};
    for (std::int64_t i = 0; i < grid; i++) {
        double t = grid == 1 ? 0 : t_max * static_cast<double>(i) / static_cast<double>(grid - 1);
        WaveFunction psi = evolve(h, c, t);
        Probabilities p = probabilities(h, c, t);
        r.table.rows.push_back({t, theta_at(h, t), t / T, p.p1, p.p2, psi.psi1.real(), psi.psi1.imag(),
                                psi.psi2.real(), psi.psi2.imag()});
    }
    return r;
}

Report run_oracle(const ExperimentConfig &config) {
    Report r;
    auto as_int = [&](const char *key, double fallback) { return static_cast<std::int64_t>(config.get(key, fallback)); };
    std::int64_t k11 = as_int("k11", 0), k12 = as_int("k12", 0), k21 = as_int("k21", 0), k22 = as_int("k22", 0);
    CountState c{static_cast<std::uint64_t>(as_int("c1", 1)), static_cast<std::uint64_t>(as_int("c2", 0))};
    std::int64_t n_max = as_int("n_max", 8);
    r.parameters = {{"k11", double(k11)}, {"k12", double(k12)}, {"k21", double(k21)},
                    {"k22", double(k22)}, {"c1", double(c.c1)}, {"c2", double(c.c2)},
                    {"n_max", double(n_max)}};

    ChannelMatrix channels = ChannelMatrix::from_signed(k11, k12, k21, k22);
    TransitionMatrix k = channels.signed_rates();
    InitialState c0{static_cast<double>(c.c1), static_cast<double>(c.c2)};

    r.table.columns = {"n", "state", "a_plus", "a_minus", "signal", "born_number", "propagated", "match"};
    std::int64_t mismatches = 0;
    for (std::int64_t n = 0; n <= n_max; n++) {
        SignalVector a = propagate_n(k, c0, n);
        for (State s : {State::One, State::Two}) {
            PathCount p = enumerate_paths(channels, c, n, s);
            std::int64_t signal = signal_from_counts(p);
            double propagated = s == State::One ? a.a1 : a.a2;
            bool match = static_cast<double>(signal) == propagated;
            if (!match && mismatches++ == 0) {
                r.failure = "oracle signal " + std::to_string(signal) + " != propagated " + format_number(propagated) +
                            " at n=" + std::to_string(n) + " state=" + std::to_string(static_cast<int>(s));
            }
            r.table.rows.push_back({n, std::int64_t{static_cast<int>(s)}, static_cast<std::int64_t>(p.a_plus),
                                    static_cast<std::int64_t>(p.a_minus), signal, born_number(p), propagated, match});
        }
    }
    r.summary = {{"checks", static_cast<std::int64_t>(r.table.rows.size())}, {"mismatches", mismatches}};
    return r;
}

Report run_ensemble(const ExperimentConfig &config) {
    Report r;
    auto a_plus = static_cast<std::uint64_t>(config.require("a_plus"));
    auto a_minus = static_cast<std::uint64_t>(config.require("a_minus"));
    r.parameters = {{"a_plus", double(a_plus)}, {"a_minus", double(a_minus)}};

    BornEnsemble ensemble = mean_over_rotations(a_plus, a_minus);
    CellClassification cells = classify_cells(a_plus, a_minus);
    r.summary = {{"size", static_cast<std::int64_t>(ensemble.size)},
                 {"born_count", static_cast<std::int64_t>(ensemble.born_count)},
                 {"invariant_count", static_cast<std::int64_t>(cells.invariant_count)},
                 {"alternating_count", static_cast<std::int64_t>(cells.alternating_count)}};

    for (std::size_t j = 0; j < ensemble.size; j++) {
        r.table.columns.push_back("col" + std::to_string(j + 1));
    }
    for (std::size_t i = 0; i < ensemble.size; i++) {
        std::vector<Cell> row;
        for (std::size_t j = 0; j < ensemble.size; j++) {
            row.emplace_back(std::int64_t{ensemble.at(i, j)});
        }
        r.table.rows.push_back(std::move(row));
    }
    return r;
}

Report run_coin(const ExperimentConfig &config) {
    Report r;
    r.table.columns = {"phi", "P_heads", "P_tails"};
    auto emit = [&](double phi) {
        Probabilities p = coin_probabilities(phi);
        r.table.rows.push_back({phi, p.p1, p.p2});
    };
    if (config.has("phi")) {
        r.parameters = {{"phi", config.require("phi")}};
        emit(config.require("phi"));
        return r;
    }
    auto grid = static_cast<std::int64_t>(config.get("grid_points", 721));
    double phi_max = 4 * std::numbers::pi;
    r.parameters = {{"grid_points", static_cast<double>(grid)}, {"phi_max", phi_max}};
    for (std::int64_t i = 0; i < grid; i++) {
        emit(grid == 1 ? 0 : phi_max * static_cast<double>(i) / static_cast<double>(grid - 1));
    }
    return r;
}

Report run_compare(const ExperimentConfig &config) {
    Report r;
    Hamiltonian h = hamiltonian_from_config(config);
    double lambda = config.get("lambda", 1);
    double c1 = config.get("c1", 1);
    InitialState c{c1, quantum_c2(config, c1)};
    auto n_max = static_cast<std::int64_t>(config.get("n_max", 40));
    r.parameters = {{"alpha", h.alpha}, {"beta", h.beta}, {"delta", h.delta}, {"hbar", h.hbar}, {"lambda", lambda},
                    {"c1", c.c1},       {"c2", c.c2},     {"n_max", static_cast<double>(n_max)}};

    TransitionMatrix k = transition_from_hamiltonian(h, lambda);
    double T = period(h);
    double tau = T / 2;
    double norm = std::sqrt(c.norm_squared());
    InitialState unit{c.c1 / norm, c.c2 / norm};
    NormalizedTransition interp = interpolation_transition(h);

    r.table.columns = {"n", "t", "theta", "t_over_T", "P1_qsp", "P2_qsp", "P1_qm", "P2_qm", "abs_diff", "P1_interp"};
    double worst = 0;
    SignalVector a{c.c1, c.c2, 0, tau};
    for (std::int64_t n = 0; n <= n_max; n++) {
        double t = a.time();
        Probabilities qsp = born_probability(a);
        Probabilities qm = probabilities(h, c, t);
        Probabilities smooth = interpolating_wavefunction(interp, unit, t, tau).probabilities();
        double diff = std::abs(qsp.p1 - qm.p1);
        worst = std::max(worst, diff);
        r.table.rows.push_back({n, t, theta_at(h, t), t / T, qsp.p1, qsp.p2, qm.p1, qm.p2, diff, smooth.p1});
        a = propagate_step(k, a);
    }
    bool passed = worst <= kCompareTolerance;
    r.summary = {{"tau", tau}, {"max_abs_diff", worst}, {"tolerance", kCompareTolerance}, {"passed", passed}};
    if (!passed) {
        r.failure = "QSP deviates from the Schrodinger solution by " + format_number(worst);
    }
    return r;
}

std::string cell_text(const Cell &cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(const std::string &v) const { return v; }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell &cell) {
    using json = nlohmann::ordered_json;
    struct Visitor {
        json operator()(std::monostate) const { return nullptr; }
        json operator()(std::int64_t v) const { return v; }
        json operator()(double v) const { return std::stod(format_number(v)); }
        json operator()(const std::string &v) const { return v; }
        json operator()(bool v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

void write_report(const Report &report, OutputFormat format, std::ostream &out) {
    if (format == OutputFormat::Json) {
        write_json(report, out);
    } else {
        write_csv(report, out);
    }
}

}  // namespace

std::string format_number(double v) {
    if (v == 0) {
        return "0";
    }
    std::ostringstream s;
    s << std::setprecision(15) << v;
    return s.str();
}

Report execute(const ExperimentConfig &config) {
    validate(config);
    Report r;
    switch (*config.mode) {
        case Mode::Csp:
            r = run_csp(config);
            break;
        case Mode::Qsp:
            r = run_qsp(config);
            break;
        case Mode::Schrodinger:
            r = run_schrodinger(config);
            break;
        case Mode::Oracle:
            r = run_oracle(config);
            break;
        case Mode::Ensemble:
            r = run_ensemble(config);
            break;
        case Mode::Coin:
            r = run_coin(config);
            break;
        case Mode::Compare:
            r = run_compare(config);
            break;
    }
    r.mode = *config.mode;
    return r;
}

void write_csv(const Report &report, std::ostream &out) {
    out << "# qsp mode=" << to_string(report.mode);
    for (const auto &[k, v] : report.parameters) {
        out << ' ' << k << '=' << format_number(v);
    }
    out << '\n';
    if (!report.summary.empty()) {
        out << '#';
        for (const auto &[k, v] : report.summary) {
            out << ' ' << k << '=' << cell_text(v);
        }
        out << '\n';
    }
    for (std::size_t i = 0; i < report.table.columns.size(); i++) {
        out << (i ? "," : "") << report.table.columns[i];
    }
    out << '\n';
    for (const auto &row : report.table.rows) {
        for (std::size_t i = 0; i < row.size(); i++) {
            out << (i ? "," : "") << cell_text(row[i]);
        }
        out << '\n';
    }
}

void write_json(const Report &report, std::ostream &out) {
    nlohmann::ordered_json doc;
    doc["mode"] = std::string(to_string(report.mode));
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto &[k, v] : report.parameters) {
        params[k] = std::stod(format_number(v));
    }
    doc["parameters"] = params;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto &[k, v] : report.summary) {
        summary[k] = cell_json(v);
    }
    doc["summary"] = summary;
    doc["columns"] = report.table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : report.table.rows) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const auto &cell : row) {
            jr.push_back(cell_json(cell));
        }
        rows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

int run(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    try {
        Report report = execute(config);
        for (const auto &w : report.warnings) {
            err << "warning: " << w << '\n';
        }
        if (config.output_path) {
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file) {
                throw ConfigError("cannot open output file '" + *config.output_path + "'");
            }
            write_report(report, config.output_format(), file);
        } else {
            write_report(report, config.output_format(), out);
        }
        if (!report.failure.empty()) {
            err << "numerical_error: " << report.failure << '\n';
            return kExitNumericalFailure;
        }
        return kExitOk;
    } catch (const ConfigError &e) {
        err << "config_error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const OracleBudgetExceeded &e) {
        err << "oracle_budget_exceeded: " << e.what() << '\n';
        return kExitOracleBudget;
    } catch (const std::invalid_argument &e) {
        err << "config_error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception &e) {
        err << "numerical_error: " << e.what() << '\n';
        return kExitNumericalFailure;
    }
}

int emit_figure_data(std::string_view figure, const ExperimentConfig &overrides, std::ostream &out, std::ostream &err) {
    ExperimentConfig config;
    try {
        config = figure_preset(figure);
    } catch (const ConfigError &e) {
        err << "config_error: " << e.what() << '\n';
        return kExitConfigError;
    }
    config.merge(overrides);
    return run(config, out, err);
}

}  // namespace qsp::cli
