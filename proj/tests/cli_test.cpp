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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "config.hpp"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "runner.hpp"

using namespace qsp::cli;

namespace {

struct Invocation {
    int status = -1;
    std::string out;
};

/// Runs the installed-style binary through the shell and captures stdout.
Invocation invoke(const std::string &args) {
    std::string command = std::string(QSP_CLI_BINARY) + " " + args + " 2>/dev/null";
    Invocation r;
    FILE *pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "qsp_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

int run_text(const std::string &config_text, std::string *out_text = nullptr) {
    std::ostringstream out, err;
    int status;
    try {
        status = run(parse_config_text(config_text), out, err);
    } catch (const ConfigError &) {
        status = kExitConfigError;
    }
    if (out_text != nullptr) {
        *out_text = out.str();
    }
    return status;
}

}  // namespace

TEST(parse_config_text, key_value_lines) {
    ExperimentConfig c = parse_config_text("# comment\nmode = csp\nk11=2\nk12 = 1\nn-max=4\n\ngrid=9\n");
    ASSERT_TRUE(c.mode.has_value());
    EXPECT_EQ(*c.mode, Mode::Csp);
    EXPECT_EQ(c.parameters.at("k11"), 2);
    EXPECT_EQ(c.parameters.at("n_max"), 4);
    EXPECT_EQ(c.parameters.at("grid_points"), 9);
}

TEST(parse_config_text, json_object) {
    ExperimentConfig c = parse_config_text(R"({"mode": "ensemble", "parameters": {"a_plus": 1, "a-minus": 3}})");
    EXPECT_EQ(*c.mode, Mode::Ensemble);
    EXPECT_EQ(c.parameters.at("a_plus"), 1);
    EXPECT_EQ(c.parameters.at("a_minus"), 3);
}

TEST(parse_config_text, rejects_unknown_keys_and_bad_values) {
    EXPECT_THROW(parse_config_text("mode=csp\nfoo=1\n"), ConfigError);
    EXPECT_THROW(parse_config_text("mode=csp\nk11=abc\n"), ConfigError);
    EXPECT_THROW(parse_config_text("mode=nonsense\n"), ConfigError);
    EXPECT_THROW(parse_config_text("{not json"), ConfigError);
}

TEST(validate, required_and_foreign_keys) {
    EXPECT_THROW(validate(parse_config_text("k11=1\n")), ConfigError);
    EXPECT_THROW(validate(parse_config_text("mode=csp\nk11=1\nk12=1\nk21=1\n")), ConfigError);
    EXPECT_THROW(validate(parse_config_text("mode=ensemble\na_plus=1\na_minus=3\nbeta=1\n")), ConfigError);
    EXPECT_THROW(validate(parse_config_text("mode=ensemble\na_plus=1.5\na_minus=3\n")), ConfigError);
    EXPECT_NO_THROW(validate(parse_config_text("mode=ensemble\na_plus=1\na_minus=3\n")));
}

TEST(merge, later_values_win) {
    ExperimentConfig base = figure_preset("fig3b");
    ExperimentConfig flags;
    flags.parameters["k12"] = 3;
    flags.format = OutputFormat::Json;
    base.merge(flags);
    EXPECT_EQ(base.parameters.at("k12"), 3);
    EXPECT_EQ(base.parameters.at("k11"), 2);
    EXPECT_EQ(*base.mode, Mode::Csp);
    EXPECT_EQ(base.output_format(), OutputFormat::Json);
}

TEST(format_number, canonical_text) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(1.0 / 3), "0.333333333333333");
    EXPECT_EQ(format_number(12), "12");
}

TEST(run, exit_statuses) {
    EXPECT_EQ(run_text("mode=csp\nk11=2\nk12=1\nk21=1\nk22=2\nn_max=3\n"), kExitOk);
    EXPECT_EQ(run_text("mode=csp\nk11=-1\nk12=1\nk21=1\nk22=2\nn_max=3\n"), kExitConfigError);
    EXPECT_EQ(run_text("mode=oracle\nk11=2\nk12=2\nk21=2\nk22=2\nn_max=40\n"), kExitOracleBudget);
    EXPECT_EQ(run_text("mode=schrodinger\nbeta=0\ndelta=0\nc1=1\n"), kExitConfigError);
}

TEST(run, ensemble_report) {
    std::string out;
    ASSERT_EQ(run_text("mode=ensemble\na_plus=1\na_minus=3\n", &out), kExitOk);
    EXPECT_NE(out.find("born_count=4"), std::string::npos) << out;
    EXPECT_NE(out.find("0,1,1,0"), std::string::npos) << out;
}

TEST(run, json_output_is_well_formed) {
    std::string out;
    ASSERT_EQ(run_text("mode=csp\nk11=2\nk12=1\nk21=1\nk22=2\nn_max=3\n", &out), kExitOk);
    ExperimentConfig c = parse_config_text("mode=csp\nk11=2\nk12=1\nk21=1\nk22=2\nn_max=3\n");
    c.format = OutputFormat::Json;
    std::ostringstream json_out, err;
    ASSERT_EQ(run(c, json_out, err), kExitOk);
    nlohmann::json doc = nlohmann::json::parse(json_out.str());
    EXPECT_EQ(doc.at("mode"), "csp");
    EXPECT_EQ(doc.at("columns").size(), 5u);
    ASSERT_EQ(doc.at("rows").size(), 4u);
    EXPECT_DOUBLE_EQ(doc.at("rows")[1][3].get<double>(), 2.0 / 3);
}

TEST(binary, exit_codes) {
    EXPECT_EQ(invoke("--mode ensemble --a-plus 1 --a-minus 3").status, 0);
    EXPECT_EQ(invoke("--mode csp --k11 -1 --k12 1 --k21 1 --k22 1").status, 2);
    EXPECT_EQ(invoke("--mode bogus").status, 2);
    EXPECT_EQ(invoke("--figure fig99").status, 2);
    EXPECT_EQ(invoke("--mode oracle --k11 2 --k12 2 --k21 2 --k22 2 --n-max 40").status, 4);
    EXPECT_EQ(invoke("--figure fig4b").status, 0);
}

TEST(binary, flags_override_config_file) {
    auto path = scratch("override.cfg");
    std::ofstream(path) << "mode=csp\nk11=2\nk12=1\nk21=1\nk22=2\nn_max=2\n";
    Invocation from_file = invoke("--config " + path.string());
    Invocation overridden = invoke("--config " + path.string() + " --n-max 5");
    ASSERT_EQ(from_file.status, 0);
    ASSERT_EQ(overridden.status, 0);
    EXPECT_NE(from_file.out, overridden.out);
    EXPECT_NE(overridden.out.find("n_max=5"), std::string::npos) << overridden.out;
}

TEST(binary, out_flag_writes_file) {
    auto path = scratch("coin.csv");
    std::filesystem::remove(path);
    ASSERT_EQ(invoke("--mode coin --grid 5 --out " + path.string()).status, 0);
    EXPECT_EQ(read_file(path), invoke("--mode coin --grid 5").out);
}

TEST(binary, deterministic_output) {
    for (const auto &figure : figure_ids()) {
        Invocation a = invoke("--figure " + figure);
        Invocation b = invoke("--figure " + figure);
        ASSERT_EQ(a.status, 0) << figure;
        EXPECT_EQ(a.out, b.out) << figure;
    }
}

struct GoldenCase {
    const char *file;
    const char *args;

    friend std::ostream &operator<<(std::ostream &os, const GoldenCase &g) { return os << g.file; }
};

class golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(golden, matches_checked_in_output) {
    auto [file, args] = GetParam();
    Invocation r = invoke(args);
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, read_file(std::filesystem::path(QSP_GOLDEN_DIR) / file)) << args;
}

INSTANTIATE_TEST_SUITE_P(
    cli, golden,
    ::testing::Values(GoldenCase{"ensemble_1_3.csv", "--mode ensemble --a-plus 1 --a-minus 3"},
                      GoldenCase{"fig3c.csv", "--figure fig3c"}, GoldenCase{"fig3d.csv", "--figure fig3d"},
                      GoldenCase{"fig4b.csv", "--figure fig4b"},
                      GoldenCase{"coin_9.csv", "--mode coin --grid 9"},
                      GoldenCase{"oracle_small.json",
                                     "--mode oracle --k11 1 --k12 -1 --k21 2 --k22 0 --n-max 5 --format json"}),
    [](const auto &info) {
        std::string name = info.param.file;
        return name.substr(0, name.find('.'));
    });
