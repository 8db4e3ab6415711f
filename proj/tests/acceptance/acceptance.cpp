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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "qsp/qsp.hpp"
#include "support/rk4_oracle.hpp"

using namespace qsp;
using std::numbers::pi;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string &why) {
        if (passed) {
            detail = why;
        }
        passed = false;
    }
};

struct Criterion {
    int id;
    const char *name;
    double time_limit_s;  // <= 0 means no limit
    std::function<Outcome()> body;
};

std::string fmt(const char *f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

const Hamiltonian kFig1{0, 1.56, 1.255, 1};
const double kFig1C1 = 0.825;

InitialState fig1_state() {
    return {kFig1C1, std::sqrt(1 - kFig1C1 * kFig1C1)};
}

Outcome half_period_sampling() {
    Outcome o;
    TransitionMatrix k = transition_from_hamiltonian(kFig1, 1);
    double tau = pi * kFig1.hbar / (2 * kFig1.omega());
    InitialState c = fig1_state();
    double worst = 0;
    for (int n = 0; n <= 40; n++) {
        double qsp = born_probability(propagate_n(k, c, n, tau)).p1;
        double qm = probabilities(kFig1, c, n * tau).p1;
        worst = std::max(worst, std::abs(qsp - qm));
    }
    o.detail = fmt("max |dP1| = %.3g over n <= 40", worst);
    if (!(worst <= 1e-9)) {
        o.fail(o.detail);
    }
    return o;
}

// Exact integer matrix power applied to a unit start vector.
std::int64_t integer_signal(const std::int64_t k[2][2], int start, int target, int n) {
    std::int64_t v[2] = {start == 0 ? 1 : 0, start == 1 ? 1 : 0};
    for (int i = 0; i < n; i++) {
        std::int64_t w0 = k[0][0] * v[0] + k[0][1] * v[1];
        std::int64_t w1 = k[1][0] * v[0] + k[1][1] * v[1];
        v[0] = w0;
        v[1] = w1;
    }
    return v[target];
}

Outcome oracle_equivalence() {
    Outcome o;
    std::int64_t checks = 0;
    for (int k11 = -2; k11 <= 2; k11++) {
        for (int k12 = -2; k12 <= 2; k12++) {
            for (int k21 = -2; k21 <= 2; k21++) {
                for (int k22 = -2; k22 <= 2; k22++) {
                    const std::int64_t k[2][2] = {{k11, k12}, {k21, k22}};
                    ChannelMatrix ch = ChannelMatrix::from_signed(k11, k12, k21, k22);
                    for (int start = 0; start < 2; start++) {
                        CountState c{start == 0 ? 1u : 0u, start == 1 ? 1u : 0u};
                        for (int target = 0; target < 2; target++) {
                            State s = target == 0 ? State::One : State::Two;
                            for (int n = 0; n <= 8; n++) {
                                PathCount p = enumerate_paths(ch, c, n, s);
                                std::int64_t expect = integer_signal(k, start, target, n);
                                checks++;
                                if (signal_from_counts(p) != expect || born_number(p) != expect * expect) {
                                    std::ostringstream msg;
                                    msg << "K=[[" << k11 << "," << k12 << "],[" << k21 << "," << k22
                                        << "]] start=" << start + 1 << " target=" << target + 1 << " n=" << n;
                                    o.fail(msg.str());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if (o.passed) {
        o.detail = std::to_string(checks) + " exact comparisons";
    }
    return o;
}

Outcome born_ensemble() {
    Outcome o;
    int cases = 0;
    for (std::uint64_t p = 0; p <= 6; p++) {
        for (std::uint64_t m = 0; m <= 6; m++) {
            if (p + m == 0) {
                continue;
            }
            cases++;
            std::int64_t d = static_cast<std::int64_t>(p) - static_cast<std::int64_t>(m);
            std::uint64_t born = static_cast<std::uint64_t>(d * d);
            std::uint64_t side = static_cast<std::uint64_t>(std::abs(d));
            std::uint64_t lo = std::min(p, m);
            std::string where = "a+=" + std::to_string(p) + " a-=" + std::to_string(m);

            std::vector<EventMatrix> views;
            for (int rot = 0; rot < 4; rot++) {
                views.push_back(build_event_matrix(p, m, rot));
                if (views.back().sum() != d * d) {
                    o.fail(where + ": rotation sum");
                }
            }
            BornEnsemble mean = mean_over_rotations(p, m);
            if (mean.born_count != born) {
                o.fail(where + ": mean count");
            }
            std::size_t n = mean.size;
            for (std::size_t i = 0; i < n; i++) {
                for (std::size_t j = 0; j < n; j++) {
                    bool inside = i >= lo && i < lo + side && j >= lo && j < lo + side;
                    int cell = mean.at(i, j);
                    if (cell != (inside ? 1 : 0)) {
                        o.fail(where + ": mean block");
                    }
                    int positive = 0;
                    for (const auto &v : views) {
                        positive += v.at(i, j) == 1;
                    }
                    if (positive != 4 && positive != 2) {
                        o.fail(where + ": cell positive in " + std::to_string(positive) + " rotations");
                    }
                }
            }
            if (classify_cells(p, m).invariant_count != born) {
                o.fail(where + ": invariant count");
            }
        }
    }
    if (o.passed) {
        o.detail = std::to_string(cases) + " (a+, a-) pairs";
    }
    return o;
}

Outcome unitary_normalization() {
    Outcome o;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    std::uniform_real_distribution<double> angle(0, 2 * pi);
    double worst_norm = 0, worst_power = 0;
    for (int trial = 0; trial < 10; trial++) {
        double kk = u(rng), ll = u(rng);
        NormalizedTransition nt = normalize_unitary({kk, ll, ll, -kk});
        TransitionMatrix m = nt.matrix();
        double a = angle(rng);
        SignalVector v{std::cos(a), std::sin(a), 0};
        TransitionMatrix power = TransitionMatrix::identity();
        for (int n = 0; n <= 1000; n++) {
            worst_norm = std::max(worst_norm, std::abs(v.a1 * v.a1 + v.a2 * v.a2 - 1));
            TransitionMatrix closed = power_closed_form(nt, n);
            worst_power = std::max({worst_power, std::abs(closed.k11 - power.k11), std::abs(closed.k12 - power.k12),
                                    std::abs(closed.k21 - power.k21), std::abs(closed.k22 - power.k22)});
            v = propagate_step(m, v);
            power = m * power;
        }
    }
    o.detail = fmt("max |p1+p2-1| = %.3g, max power diff = %.3g", worst_norm, worst_power);
    if (!(worst_norm <= 1e-12 && worst_power <= 1e-12)) {
        o.fail(o.detail);
    }
    return o;
}

Outcome markov_reduction() {
    Outcome o;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    double worst = 0;
    for (int trial = 0; trial < 50; trial++) {
        double p = u(rng), q = u(rng);
        TransitionMatrix k{p, q, 1 - p, 1 - q};
        double c1 = u(rng);
        InitialState c{c1, 1 - c1};
        for (int n = 0; n <= 64; n++) {
            Probabilities csp = classical_probability(propagate_n(k, c, n));
            Probabilities markov = markov_propagate(k, {c1, 1 - c1}, n);
            worst = std::max({worst, std::abs(csp.p1 - markov.p1), std::abs(csp.p2 - markov.p2)});
        }
    }
    o.detail = fmt("max diff = %.3g over 50 matrices, n <= 64", worst);
    if (!(worst <= 1e-12)) {
        o.fail(o.detail);
    }
    return o;
}

Outcome interpolating_wavefunction_criterion() {
    Outcome o;
    NormalizedTransition nt = interpolation_transition(kFig1);
    InitialState c = fig1_state();
    double tau = period(kFig1) / 2;
    double worst_norm = 0, worst_sample = 0, worst_closed = 0;
    for (int i = 0; i < 1000; i++) {
        double t = 8 * tau * i / 999.0;
        WaveFunction w = interpolating_wavefunction(nt, c, t, tau);
        worst_norm = std::max(worst_norm, std::abs(w.norm_squared() - 1));
        WaveFunction ref = evolve(kFig1, c, t);
        worst_closed = std::max({worst_closed, std::abs(w.psi1 - ref.psi1), std::abs(w.psi2 - ref.psi2)});
    }
    for (int n = 0; n <= 16; n++) {
        Probabilities step = born_probability(propagate_n(nt.matrix(), c, n, tau));
        Probabilities w = interpolating_wavefunction(nt, c, n * tau, tau).probabilities();
        worst_sample = std::max({worst_sample, std::abs(step.p1 - w.p1), std::abs(step.p2 - w.p2)});
    }
    o.detail = fmt("norm %.3g, samples %.3g, closed form %.3g", worst_norm, worst_sample, worst_closed);
    if (!(worst_norm <= 1e-12 && worst_sample <= 1e-9 && worst_closed <= 1e-9)) {
        o.fail(o.detail);
    }
    return o;
}

Outcome fair_coin() {
    Outcome o;
    double worst = 0;
    for (int i = 0; i < 720; i++) {
        double phi = 2 * pi * i / 720.0;
        Probabilities p = coin_probabilities(phi);
        double c = std::cos(phi / 2), s = std::sin(phi / 2);
        worst = std::max({worst, std::abs(p.p1 - c * c), std::abs(p.p2 - s * s)});
    }
    if (!(worst <= 1e-12)) {
        o.fail(fmt("coin grid max diff %.3g", worst));
    }
    for (double l : {0.25, 1.0, 3.0, 17.0}) {
        TransitionMatrix k{0, l, l, 0};
        for (int n = 0; n <= 32; n++) {
            double p1 = classical_probability(propagate_n(k, {1, 0}, n)).p1;
            if (p1 != (n % 2 == 0 ? 1.0 : 0.0)) {
                o.fail(fmt("exchange L=%g breaks alternation at n=%g", l, n));
            }
        }
    }
    if (o.passed) {
        o.detail = fmt("coin grid max diff %.3g; exchange alternates for n <= 32", worst);
    }
    return o;
}

std::vector<double> preset_sequence(const std::string &figure, double override_k12 = -1, double override_k21 = -1) {
    cli::ExperimentConfig c = cli::figure_preset(figure);
    auto &p = c.parameters;
    TransitionMatrix k{p.at("k11"), override_k12 >= 0 ? override_k12 : p.at("k12"),
                       override_k21 >= 0 ? override_k21 : p.at("k21"), p.at("k22")};
    InitialState c0{p.at("c1"), p.at("c2")};
    std::vector<double> out;
    for (int n = 0; n <= static_cast<int>(p.at("n_max")); n++) {
        out.push_back(classical_probability(propagate_n(k, c0, n)).p1);
    }
    return out;
}

Outcome dynamics_regimes() {
    Outcome o;
    {
        cli::ExperimentConfig c = cli::figure_preset("fig3a");
        auto &p = c.parameters;
        TransitionMatrix k{p.at("k11"), p.at("k12"), p.at("k21"), p.at("k22")};
        double stationary = stationary_probability(k).value().p1;
        std::vector<double> seq = preset_sequence("fig3a");
        for (std::size_t n = 1; n < seq.size(); n++) {
            if (seq[n] != stationary) {
                o.fail(fmt("fig3a P1(%g) = %.17g differs from stationary value", static_cast<double>(n), seq[n]));
            }
        }
    }
    {
        std::vector<double> seq = preset_sequence("fig3b");
        double dir = seq[2] - seq[1];
        for (std::size_t n = 2; n < seq.size(); n++) {
            if ((seq[n] - seq[n - 1]) * dir < 0 || dir == 0) {
                o.fail("fig3b not monotone after n=1");
            }
        }
    }
    {
        std::vector<double> seq = preset_sequence("fig3c");
        for (std::size_t n = 2; n < seq.size(); n++) {
            double prev = seq[n - 1] - seq[n - 2];
            double cur = seq[n] - seq[n - 1];
            if (!(prev * cur < 0 && std::abs(cur) < std::abs(prev))) {
                o.fail(fmt("fig3c not a damped alternation at n=%g", static_cast<double>(n)));
            }
        }
    }
    {
        cli::ExperimentConfig c = cli::figure_preset("fig3d");
        double c1 = c.parameters.at("c1");
        double c2 = c.parameters.at("c2");
        std::vector<double> seq = preset_sequence("fig3d");
        for (std::size_t n = 0; n < seq.size(); n++) {
            if (seq[n] != (n % 2 == 0 ? c1 / (c1 + c2) : c2 / (c1 + c2))) {
                o.fail("fig3d does not alternate between c1 and c2");
            }
        }
        if (preset_sequence("fig3d", 2, 5) != seq || preset_sequence("fig3d", 0.3, 7) != seq) {
            o.fail("fig3d amplitude depends on k12, k21");
        }
    }
    if (o.passed) {
        o.detail = "fig3a stationary at n=1, fig3b monotone, fig3c damped, fig3d rate independent";
    }
    return o;
}

Outcome schrodinger_vs_integrator() {
    Outcome o;
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> coef(-2, 2);
    std::uniform_real_distribution<double> angle(0, 2 * pi);
    double worst = 0, worst_alpha = 0;
    for (int trial = 0; trial < 20; trial++) {
        Hamiltonian h{0, coef(rng), coef(rng), 1};
        if (h.omega() < 0.1) {
            h.beta += 0.5;
        }
        double a = angle(rng);
        InitialState c{std::cos(a), std::sin(a)};
        double alpha = coef(rng) * 5;
        Hamiltonian shifted = h;
        shifted.alpha = alpha;
        oracle::integrate_two_level(alpha, h.beta, h.delta, h.hbar, c.c1, c.c2, 4 * period(h),
                                     [&](double t, const oracle::Amplitudes &psi) {
                                         Probabilities p = probabilities(h, c, t);
                                         worst = std::max({worst, std::abs(std::norm(psi[0]) - p.p1),
                                                           std::abs(std::norm(psi[1]) - p.p2)});
                                         Probabilities q = probabilities(shifted, c, t);
                                         worst_alpha = std::max(worst_alpha, std::abs(q.p1 - p.p1));
                                     });
    }
    o.detail = fmt("max |dP| vs RK4 = %.3g, alpha shift = %.3g", worst, worst_alpha);
    if (!(worst <= 1e-8 && worst_alpha <= 1e-12)) {
        o.fail(o.detail);
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "half-period sampling", 1.0, half_period_sampling},
        {2, "oracle equivalence", 30.0, oracle_equivalence},
        {3, "Born ensemble", 1.0, born_ensemble},
        {4, "unitary normalization", 0, unitary_normalization},
        {5, "Markov reduction", 0, markov_reduction},
        {6, "interpolating wave function", 0, interpolating_wavefunction_criterion},
        {7, "fair coin", 0, fair_coin},
        {8, "dynamics regimes", 0, dynamics_regimes},
        {9, "Schrodinger closed form vs integrator", 0, schrodinger_vs_integrator},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
            o.fail(o.detail + fmt(" (took %.3f s, limit %.0f s)", elapsed, c.time_limit_s));
        }
        failures += !o.passed;
        std::printf("AC%d %s %s: %s [%.3f s]\n", c.id, o.passed ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                    elapsed);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
