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

#ifndef QSP_EQUIVALENCE_HPP
#define QSP_EQUIVALENCE_HPP

#include <cstdint>

#include "qsp/schrodinger.hpp"
#include "qsp/types.hpp"

namespace qsp {

/// Symmetric orthogonal transition matrix [[K, L], [L, -K]] with K^2 + L^2 = 1.
struct NormalizedTransition {
    double K = 1;
    double L = 0;

    TransitionMatrix matrix() const { return {K, L, L, -K}; }
};

/// Necessary condition for sustained oscillation of the quantum process:
/// k11 = -k22 and k22^2 + k12 k21 != 0, excluding k21 = 0 with k11 != 0 (which pins
/// P1 = 1 from c = (1, 0)).
bool oscillation_condition(const TransitionMatrix &k);

/// lambda (H - alpha I) = [[lambda delta, lambda beta], [lambda beta, -lambda delta]].
TransitionMatrix transition_from_hamiltonian(const Hamiltonian &h, double lambda);

/// Inverse of transition_from_hamiltonian: beta = k12 / lambda, delta = k11 / lambda.
/// Throws NoEquivalentHamiltonian unless K is symmetric and oscillatory.
Hamiltonian hamiltonian_from_transition(const TransitionMatrix &k, double lambda, double alpha, double hbar = 1);

/// Rescales a symmetric oscillatory matrix to K^2 + L^2 = 1. Born probabilities are unchanged.
NormalizedTransition normalize_unitary(const TransitionMatrix &k);

/// n-th power of a normalized transition matrix: the identity for even n, the matrix itself
/// for odd n.
TransitionMatrix power_closed_form(const NormalizedTransition &nt, std::int64_t n);

/// Normalized transition whose interpolating wave function reproduces evolve(h, c, t) at
/// alpha = 0: (K, L) = -(delta, beta) / sqrt(beta^2 + delta^2).
NormalizedTransition interpolation_transition(const Hamiltonian &h);

/// Continuous interpolation of the discrete quantum process,
///   psi(t) = X(t) c - i X(t + tau) K c,   X(t) = cos(pi t / (2 tau)).
/// |psi_i(n tau)|^2 equals the step-n probabilities and |psi|^2 = 1 for all t.
/// Requires c1^2 + c2^2 = 1 and tau > 0.
WaveFunction interpolating_wavefunction(const NormalizedTransition &nt, const InitialState &c, double t, double tau);

/// Heads/tails probabilities cos^2(phi/2), sin^2(phi/2) for impact angle phi.
Probabilities coin_probabilities(double phi);

}  // namespace qsp

#endif
