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

#ifndef QSP_TYPES_HPP
#define QSP_TYPES_HPP

#include <cmath>
#include <cstdint>

namespace qsp {

/// Absolute tolerance for structural equality tests on user-supplied rates.
inline constexpr double kStructuralTolerance = 1e-12;

inline bool nearly_equal(double a, double b, double tol = kStructuralTolerance) {
    return std::abs(a - b) <= tol;
}

/// 2x2 matrix of transition rates; k_ij is the rate of the transition j -> i.
///
/// Entries may be negative (sign-flipping channels). Classical entry points check
/// nonnegativity themselves; the type only requires finite values.
struct TransitionMatrix {
    double k11 = 0;
    double k12 = 0;
    double k21 = 0;
    double k22 = 0;

    static constexpr TransitionMatrix identity() { return {1, 0, 0, 1}; }

    double det() const { return k11 * k22 - k12 * k21; }
    bool is_finite() const {
        return std::isfinite(k11) && std::isfinite(k12) && std::isfinite(k21) && std::isfinite(k22);
    }
    bool is_nonnegative() const { return k11 >= 0 && k12 >= 0 && k21 >= 0 && k22 >= 0; }

    constexpr TransitionMatrix operator*(const TransitionMatrix &o) const {
        return {
            k11 * o.k11 + k12 * o.k21, k11 * o.k12 + k12 * o.k22,
            k21 * o.k11 + k22 * o.k21, k21 * o.k12 + k22 * o.k22,
        };
    }
    constexpr bool operator==(const TransitionMatrix &) const = default;
};

/// Signals (or multiplicities) transmitted to the two observations of step n.
struct SignalVector {
    double a1 = 0;
    double a2 = 0;
    std::int64_t n = 0;
    /// Mean time between transitions; the observation time is n * tau.
    double tau = 1;

    double time() const { return static_cast<double>(n) * tau; }
};

/// Initial amplitudes or multiplicities (c1, c2).
struct InitialState {
    double c1 = 1;
    double c2 = 0;

    double norm_squared() const { return c1 * c1 + c2 * c2; }
};

struct Probabilities {
    double p1 = 0;
    double p2 = 0;
};

}  // namespace qsp

#endif
