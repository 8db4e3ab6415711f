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

#ifndef QSP_PATH_ORACLE_HPP
#define QSP_PATH_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "qsp/types.hpp"

namespace qsp {

enum class State : int { One = 1, Two = 2 };

/// Channel picture of an integer transition matrix: m_ij parallel unit channels from
/// state j to state i, each flipping the transmitted signal when s_ij = -1.
struct ChannelMatrix {
    std::uint64_t m11 = 0, m12 = 0, m21 = 0, m22 = 0;
    int s11 = 1, s12 = 1, s21 = 1, s22 = 1;

    /// Splits signed integer rates into channel counts and signs (zero rates get sign +1).
    static ChannelMatrix from_signed(std::int64_t k11, std::int64_t k12, std::int64_t k21, std::int64_t k22);

    std::uint64_t channels(State to, State from) const;
    int sign(State to, State from) const;

    /// Signed rates s_ij * m_ij as a floating-point transition matrix.
    TransitionMatrix signed_rates() const;
    /// Unsigned rates m_ij.
    TransitionMatrix unsigned_rates() const;
};

/// Nonnegative integer initial multiplicities.
struct CountState {
    std::uint64_t c1 = 1;
    std::uint64_t c2 = 0;

    std::uint64_t at(State s) const { return s == State::One ? c1 : c2; }
};

/// Positive and negative path counts to observation (state; n).
struct PathCount {
    std::uint64_t a_plus = 0;
    std::uint64_t a_minus = 0;
    State state = State::One;
    std::int64_t n = 0;
};

struct OracleOptions {
    /// Upper bound on weighted paths (and on visited path prefixes) per enumeration.
    std::uint64_t max_paths = 100'000'000;
};

/// Enumerates every state sequence of n transitions ending at target. A sequence is
/// weighted by its start multiplicity times the product of its channel counts and signed
/// by the product of its channel signs.
///
/// Throws std::invalid_argument for n < 0 or c = (0, 0), and OracleBudgetExceeded when the
/// weighted path total or the enumeration work exceeds options.max_paths.
PathCount enumerate_paths(const ChannelMatrix &channels, const CountState &c, std::int64_t n, State target,
                          const OracleOptions &options = {});

/// Net signal a+ - a-.
std::int64_t signal_from_counts(const PathCount &p);

/// Net recombination events (a+)^2 + (a-)^2 - 2 a+ a-; never negative.
std::int64_t born_number(const PathCount &p);

struct OracleMismatch {
    std::int64_t n = 0;
    State state = State::One;
    std::int64_t oracle_signal = 0;
    double propagated_signal = 0;
};

struct VerificationReport {
    bool passed = true;
    std::int64_t checks = 0;
    std::optional<OracleMismatch> first_failure;
};

/// Compares the enumerated signal with propagate_n on the signed rates for every n <= n_max
/// and both states.
VerificationReport verify_against_propagation(const ChannelMatrix &channels, const CountState &c, std::int64_t n_max,
                                              const OracleOptions &options = {});

}  // namespace qsp

#endif
