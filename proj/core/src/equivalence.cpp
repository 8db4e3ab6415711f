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

#include "qsp/equivalence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsp/errors.hpp"

namespace qsp {

bool oscillation_condition(const TransitionMatrix &k) {
    if (!k.is_finite()) {
        return false;
    }
    if (!nearly_equal(k.k11, -k.k22)) {
        return false;
    }
    if (nearly_equal(k.k22 * k.k22 + k.k12 * k.k21, 0)) {
        return false;
    }
    // The k21 = 0 branch keeps P1 fixed at 1 and is not an oscillation.
    return !(nearly_equal(k.k21, 0) && !nearly_equal(k.k11, 0));
}

TransitionMatrix transition_from_hamiltonian(const Hamiltonian &h, double lambda) {
    if (lambda == 0 || !std::isfinite(lambda)) {
        throw std::invalid_argument("transition_from_hamiltonian: lambda must be finite and nonzero");
    }
    return {lambda * h.delta, lambda * h.beta, lambda * h.beta, -lambda * h.delta};
}

Hamiltonian hamiltonian_from_transition(const TransitionMatrix &k, double lambda, double alpha, double hbar) {
    if (lambda == 0 || !std::isfinite(lambda)) {
        throw std::invalid_argument("hamiltonian_from_transition: lambda must be finite and nonzero");
    }
    if (!nearly_equal(k.k12, k.k21)) {
        throw NoEquivalentHamiltonian("no equivalent Hamiltonian: transition matrix is not symmetric");
    }
    if (!oscillation_condition(k)) {
        throw NoEquivalentHamiltonian("no equivalent Hamiltonian: transition matrix does not oscillate");
    }
    return {alpha, k.k12 / lambda, k.k11 / lambda, hbar};
}

NormalizedTransition normalize_unitary(const TransitionMatrix &k) {
    double scale = std::hypot(k.k11, k.k12);
    if (!(scale > 0)) {
        throw std::invalid_argument("normalize_unitary: zero matrix");
    }
    if (!nearly_equal(k.k12, k.k21) || !oscillation_condition(k)) {
        throw std::invalid_argument("normalize_unitary: matrix is not symmetric and oscillatory");
    }
    return {k.k11 / scale, k.k12 / scale};
}

TransitionMatrix power_closed_form(const NormalizedTransition &nt, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("power_closed_form: negative exponent");
    }
    return n % 2 == 0 ? TransitionMatrix::identity() : nt.matrix();
}

NormalizedTransition interpolation_transition(const Hamiltonian &h) {
    validate(h);
    double w = h.omega();
    return {-h.delta / w, -h.beta / w};
}

WaveFunction interpolating_wavefunction(const NormalizedTransition &nt, const InitialState &c, double t, double tau) {
    if (!(tau > 0)) {
        throw std::invalid_argument("interpolating_wavefunction: tau must be positive");
    }
    if (!nearly_equal(c.norm_squared(), 1)) {
        throw std::invalid_argument("interpolating_wavefunction: initial state must satisfy c1^2 + c2^2 = 1");
    }
    using namespace std::complex_literals;
    auto x = [tau](double s) { return std::cos(std::numbers::pi * s / (2 * tau)); };
    double now = x(t);
    double ahead = x(t + tau);
    double kc1 = nt.K * c.c1 + nt.L * c.c2;
    double kc2 = nt.L * c.c1 - nt.K * c.c2;
    return {now * c.c1 - 1i * ahead * kc1, now * c.c2 - 1i * ahead * kc2, t};
}

Probabilities coin_probabilities(double phi) {
    double h = std::cos(phi / 2);
    double s = std::sin(phi / 2);
    return {h * h, s * s};
}

}  // namespace qsp
