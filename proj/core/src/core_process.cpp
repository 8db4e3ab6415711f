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

#include "qsp/core_process.hpp"

#include <cmath>
#include <stdexcept>

#include "qsp/errors.hpp"

namespace qsp {

namespace {

void require_finite(const TransitionMatrix &k) {
    if (!k.is_finite()) {
        throw std::invalid_argument("transition matrix has non-finite entries");
    }
}

void require_classical(const TransitionMatrix &k) {
    require_finite(k);
    if (!k.is_nonnegative()) {
        throw std::invalid_argument("classical process requires nonnegative transition rates");
    }
}

bool in_unit_interval(double p) {
    return p >= -kStructuralTolerance && p <= 1 + kStructuralTolerance;
}

double clamp_unit(double p) {
    return p < 0 ? 0 : (p > 1 ? 1 : p);
}

}  // namespace

std::string_view to_string(DynamicsClass c) {
    switch (c) {
        case DynamicsClass::ImmediateStationary:
            return "ImmediateStationary";
        case DynamicsClass::MonotoneStationary:
            return "MonotoneStationary";
        case DynamicsClass::DampedOscillation:
            return "DampedOscillation";
        case DynamicsClass::SustainedOscillation:
            return "SustainedOscillation";
    }
    return "?";
}

SignalVector propagate_step(const TransitionMatrix &k, const SignalVector &a) {
    return {
        k.k11 * a.a1 + k.k12 * a.a2,
        k.k21 * a.a1 + k.k22 * a.a2,
        a.n + 1,
        a.tau,
    };
}

SignalVector propagate_n(const TransitionMatrix &k, const InitialState &a0, std::int64_t n, double tau) {
    if (n < 0) {
        throw std::invalid_argument("propagate_n: negative step count");
    }
    if (!(tau > 0)) {
        throw std::invalid_argument("propagate_n: tau must be positive");
    }
    SignalVector a{a0.c1, a0.c2, 0, tau};
    for (std::int64_t i = 0; i < n; i++) {
        a = propagate_step(k, a);
    }
    return a;
}

Probabilities classical_probability(const SignalVector &a) {
    if (a.a1 < 0 || a.a2 < 0) {
        throw std::invalid_argument("classical_probability: negative signal (quantum vector passed to the classical rule)");
    }
    double total = a.a1 + a.a2;
    if (!(total > 0)) {
        throw std::invalid_argument("classical_probability: zero total signal");
    }
    return {a.a1 / total, a.a2 / total};
}

Probabilities born_probability(const SignalVector &a) {
    double s1 = a.a1 * a.a1;
    double s2 = a.a2 * a.a2;
    double total = s1 + s2;
    if (!(total > 0)) {
        throw std::invalid_argument("born_probability: zero signal vector");
    }
    return {s1 / total, s2 / total};
}

std::optional<Probabilities> stationary_probability(const TransitionMatrix &k) {
    require_classical(k);
    double s1 = k.k11 + k.k21;
    double s2 = k.k12 + k.k22;
    if (s1 == 0 || s2 == 0) {
        throw std::invalid_argument("stationary_probability: transition matrix has a zero column");
    }
    if (nearly_equal(k.k11, 0) && nearly_equal(k.k22, 0)) {
        return std::nullopt;
    }

    // (s1 - s2) P^2 + (s2 - k11 + k12) P - k12 = 0
    double qa = s1 - s2;
    double qb = s2 - k.k11 + k.k12;
    double qc = -k.k12;

    // Each root of the quadratic is the P1 of an eigenvector (P, 1 - P); its eigenvalue is
    // the column-sum weighted average s1 P + s2 (1 - P).
    auto eigenvalue = [&](double p) { return s1 * p + s2 * (1 - p); };

    double roots[2];
    int count = 0;
    if (std::abs(qa) <= kStructuralTolerance) {
        if (std::abs(qb) <= kStructuralTolerance) {
            // Scalar multiple of the identity: every P is fixed, so the iteration stays at (1, 0).
            return Probabilities{1, 0};
        }
        roots[count++] = -qc / qb;
    } else {
        double disc = qb * qb - 4 * qa * qc;
        if (disc < 0) {
            disc = 0;
        }
        double sq = std::sqrt(disc);
        // Numerically stable pair of roots.
        double q = -0.5 * (qb + std::copysign(sq, qb));
        if (q != 0) {
            roots[count++] = q / qa;
            roots[count++] = qc / q;
        } else {
            roots[count++] = 0;
        }
    }

    std::optional<double> best;
    for (int i = 0; i < count; i++) {
        if (!in_unit_interval(roots[i])) {
            continue;
        }
        double p = clamp_unit(roots[i]);
        if (!best) {
            best = p;
        } else if (nearly_equal(k.k21, 0) && p == 1) {
            // (1, 0) is itself an eigenvector and the iteration never leaves it.
            best = p;
        } else if (!(nearly_equal(k.k21, 0) && *best == 1) && eigenvalue(p) > eigenvalue(*best)) {
            best = p;
        }
    }
    if (!best) {
        throw std::domain_error("stationary_probability: no root in [0, 1]");
    }
    return Probabilities{*best, 1 - *best};
}

bool is_markov(const TransitionMatrix &k) {
    return k.is_finite() && k.is_nonnegative() && nearly_equal(k.k11 + k.k21, 1) && nearly_equal(k.k12 + k.k22, 1);
}

Probabilities markov_propagate(const TransitionMatrix &k, const Probabilities &p0, std::int64_t n) {
    if (!is_markov(k)) {
        throw std::invalid_argument("markov_propagate: transition matrix is not column-stochastic");
    }
    if (p0.p1 < 0 || p0.p2 < 0 || !nearly_equal(p0.p1 + p0.p2, 1)) {
        throw std::invalid_argument("markov_propagate: initial probabilities must be nonnegative and sum to 1");
    }
    if (n < 0) {
        throw std::invalid_argument("markov_propagate: negative step count");
    }
    Probabilities p = p0;
    for (std::int64_t i = 0; i < n; i++) {
        p = {k.k11 * p.p1 + k.k12 * p.p2, k.k21 * p.p1 + k.k22 * p.p2};
    }
    return p;
}

DynamicsClass classify_dynamics(const TransitionMatrix &k) {
    require_classical(k);
    if (k.k11 == 0 && k.k12 == 0 && k.k21 == 0 && k.k22 == 0) {
        throw std::invalid_argument("classify_dynamics: zero matrix");
    }
    if (nearly_equal(k.k11, k.k21) && nearly_equal(k.k12, k.k22)) {
        return DynamicsClass::ImmediateStationary;
    }
    if (nearly_equal(k.k11, 0) && nearly_equal(k.k22, 0) && k.k12 > kStructuralTolerance &&
        k.k21 > kStructuralTolerance) {
        return DynamicsClass::SustainedOscillation;
    }
    double det = k.det();
    if (det > kStructuralTolerance) {
        return DynamicsClass::MonotoneStationary;
    }
    if (det < -kStructuralTolerance) {
        return DynamicsClass::DampedOscillation;
    }
    throw UnclassifiedDynamics("classify_dynamics: det(K) = 0 without rank-one or pure-exchange structure");
}

}  // namespace qsp
