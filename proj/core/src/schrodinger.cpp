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

#include "qsp/schrodinger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsp {

namespace {

void validate_state(const InitialState &c) {
    if (!std::isfinite(c.c1) || !std::isfinite(c.c2) || !(c.norm_squared() > 0)) {
        throw std::invalid_argument("initial state must be finite with c1^2 + c2^2 > 0");
    }
}

}  // namespace

double Hamiltonian::omega() const {
    return std::hypot(beta, delta);
}

void validate(const Hamiltonian &h) {
    if (!std::isfinite(h.alpha) || !std::isfinite(h.beta) || !std::isfinite(h.delta) || !std::isfinite(h.hbar)) {
        throw std::invalid_argument("Hamiltonian has non-finite parameters");
    }
    if (!(h.hbar > 0)) {
        throw std::invalid_argument("hbar must be positive");
    }
    if (h.beta == 0 && h.delta == 0) {
        throw std::invalid_argument("Hamiltonian requires beta^2 + delta^2 > 0");
    }
}

double theta_at(const Hamiltonian &h, double t) {
    return t * h.omega() / h.hbar;
}

double period(const Hamiltonian &h) {
    validate(h);
    return std::numbers::pi * h.hbar / h.omega();
}

WaveFunction evolve(const Hamiltonian &h, const InitialState &c, double t) {
    validate(h);
    validate_state(c);
    using namespace std::complex_literals;

    double w = h.omega();
    double th = theta_at(h, t);
    double cs = std::cos(th);
    double sn = std::sin(th);
    std::complex<double> phase = std::exp(-1i * (h.alpha * t / h.hbar));

    std::complex<double> u11 = phase * (cs - 1i * (h.delta / w) * sn);
    std::complex<double> u12 = phase * (-1i * (h.beta / w) * sn);
    std::complex<double> u21 = u12;
    std::complex<double> u22 = phase * (cs + 1i * (h.delta / w) * sn);

    double norm = std::sqrt(c.norm_squared());
    double c1 = c.c1 / norm;
    double c2 = c.c2 / norm;
    return {u11 * c1 + u12 * c2, u21 * c1 + u22 * c2, t};
}

Probabilities probabilities(const Hamiltonian &h, const InitialState &c, double t) {
    validate(h);
    validate_state(c);
    double n2 = c.norm_squared();
    double w2 = h.beta * h.beta + h.delta * h.delta;
    double th = theta_at(h, t);
    double cos2 = std::cos(th) * std::cos(th);
    double sin2 = std::sin(th) * std::sin(th);
    double m1 = c.c1 * h.delta + c.c2 * h.beta;
    double m2 = c.c1 * h.beta - c.c2 * h.delta;
    return {
        c.c1 * c.c1 / n2 * cos2 + sin2 * m1 * m1 / (n2 * w2),
        c.c2 * c.c2 / n2 * cos2 + sin2 * m2 * m2 / (n2 * w2),
    };
}

AmplitudeBounds amplitude_bounds(const Hamiltonian &h, const InitialState &c) {
    double half_period = period(h) / 2;
    return {probabilities(h, c, 0).p1, probabilities(h, c, half_period).p1};
}

}  // namespace qsp
