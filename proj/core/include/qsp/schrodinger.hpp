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

#ifndef QSP_SCHRODINGER_HPP
#define QSP_SCHRODINGER_HPP

#include <complex>

#include "qsp/types.hpp"

namespace qsp {

/// Real symmetric two-level Hamiltonian [[alpha + delta, beta], [beta, alpha - delta]].
struct Hamiltonian {
    double alpha = 0;
    double beta = 0;
    double delta = 0;
    double hbar = 1;

    /// sqrt(beta^2 + delta^2), half the level splitting.
    double omega() const;
};

struct WaveFunction {
    std::complex<double> psi1;
    std::complex<double> psi2;
    double t = 0;

    double norm_squared() const { return std::norm(psi1) + std::norm(psi2); }
    Probabilities probabilities() const { return {std::norm(psi1), std::norm(psi2)}; }
};

struct AmplitudeBounds {
    /// P1 at theta = 0.
    double p_prime = 0;
    /// P1 at theta = pi/2.
    double p_double_prime = 0;
};

/// Throws std::invalid_argument unless beta^2 + delta^2 > 0, hbar > 0 and all fields are finite.
void validate(const Hamiltonian &h);

/// Phase angle theta = t * sqrt(beta^2 + delta^2) / hbar.
double theta_at(const Hamiltonian &h, double t);

/// Oscillation period pi * hbar / sqrt(beta^2 + delta^2) of the level probabilities.
double period(const Hamiltonian &h);

/// Closed-form solution U(t) c / |c| of i hbar d|psi>/dt = H |psi>.
WaveFunction evolve(const Hamiltonian &h, const InitialState &c, double t);

/// Level probabilities |psi_i(t)|^2 in closed form:
///   P1 = c1^2 cos^2(theta) / |c|^2 + sin^2(theta) (c1 delta + c2 beta)^2 / (|c|^2 omega^2)
///   P2 = c2^2 cos^2(theta) / |c|^2 + sin^2(theta) (c1 beta - c2 delta)^2 / (|c|^2 omega^2)
/// Independent of alpha.
Probabilities probabilities(const Hamiltonian &h, const InitialState &c, double t);

/// Extremes of P1(t), reached at theta = 0 and theta = pi/2.
AmplitudeBounds amplitude_bounds(const Hamiltonian &h, const InitialState &c);

}  // namespace qsp

#endif
