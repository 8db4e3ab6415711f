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

#ifndef QSP_CORE_PROCESS_HPP
#define QSP_CORE_PROCESS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "qsp/types.hpp"

namespace qsp {

enum class DynamicsClass {
    ImmediateStationary,
    MonotoneStationary,
    DampedOscillation,
    SustainedOscillation,
};

std::string_view to_string(DynamicsClass c);

/// One transition step: returns K * a with the step index advanced.
SignalVector propagate_step(const TransitionMatrix &k, const SignalVector &a);

/// K^n * (c1, c2), computed by n applications of propagate_step.
/// Throws std::invalid_argument for n < 0 or tau <= 0.
SignalVector propagate_n(const TransitionMatrix &k, const InitialState &a0, std::int64_t n, double tau = 1);

/// Probability proportional to the signal itself: P_i = a_i / (a1 + a2).
/// Rejects negative signals and a zero total.
Probabilities classical_probability(const SignalVector &a);

/// Probability proportional to the squared signal: P_i = a_i^2 / (a1^2 + a2^2).
Probabilities born_probability(const SignalVector &a);

/// Fixed point of the classical probability map.
///
/// The stationary P1 solves
///   (s1 - s2) P^2 + (s2 - k11 + k12) P - k12 = 0,   s_j = k1j + k2j,
/// and the root in [0, 1] is returned. When two roots lie in [0, 1] the one reached
/// by iterating from (1, 0) is chosen. Returns nullopt in the sustained-oscillation
/// regime (k11 = k22 = 0), where no stationary value is approached.
std::optional<Probabilities> stationary_probability(const TransitionMatrix &k);

/// True when all entries are nonnegative and both columns sum to 1.
bool is_markov(const TransitionMatrix &k);

/// K^n * P0 for a column-stochastic K.
Probabilities markov_propagate(const TransitionMatrix &k, const Probabilities &p0, std::int64_t n);

/// Classifies the classical dynamics of a nonnegative matrix.
///
/// Checked in order: ImmediateStationary (k11 = k21 and k12 = k22), SustainedOscillation
/// (k11 = k22 = 0, k12 > 0, k21 > 0), then the sign of det(K). A zero determinant
/// outside the first structure throws UnclassifiedDynamics.
DynamicsClass classify_dynamics(const TransitionMatrix &k);

}  // namespace qsp

#endif
