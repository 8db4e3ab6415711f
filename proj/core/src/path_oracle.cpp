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

#include "qsp/path_oracle.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "qsp/core_process.hpp"
#include "qsp/errors.hpp"

namespace qsp {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

int index(State s) {
    return s == State::One ? 0 : 1;
}

constexpr State kStates[2] = {State::One, State::Two};

/// Total weighted path count to each state after n steps: |K|^n c in saturating arithmetic.
std::uint64_t total_paths(const ChannelMatrix &ch, const CountState &c, std::int64_t n, State target) {
    std::uint64_t v[2] = {c.c1, c.c2};
    for (std::int64_t step = 0; step < n; step++) {
        std::uint64_t next[2];
        for (State to : kStates) {
            std::uint64_t sum = 0;
            for (State from : kStates) {
                sum = saturating_add(sum, saturating_mul(ch.channels(to, from), v[index(from)]));
            }
            next[index(to)] = sum;
        }
        v[0] = next[0];
        v[1] = next[1];
        if (v[0] == kSaturated && v[1] == kSaturated) {
            break;
        }
    }
    return v[index(target)];
}

struct Enumeration {
    const ChannelMatrix &channels;
    std::int64_t n;
    State target;
    std::uint64_t budget;
    std::uint64_t work = 0;
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;

    void visit(State at, std::int64_t depth, std::uint64_t weight, int sign) {
        if (++work > budget) {
            throw OracleBudgetExceeded("path enumeration exceeded the oracle budget of " + std::to_string(budget) +
                                       " visited prefixes");
        }
        if (depth == n) {
            if (at == target) {
                (sign > 0 ? plus : minus) += weight;
            }
            return;
        }
        for (State to : kStates) {
            std::uint64_t m = channels.channels(to, at);
            if (m == 0) {
                continue;
            }
            visit(to, depth + 1, saturating_mul(weight, m), sign * channels.sign(to, at));
        }
    }
};

}  // namespace

ChannelMatrix ChannelMatrix::from_signed(std::int64_t k11, std::int64_t k12, std::int64_t k21, std::int64_t k22) {
    auto mag = [](std::int64_t k) { return static_cast<std::uint64_t>(k < 0 ? -k : k); };
    auto sgn = [](std::int64_t k) { return k < 0 ? -1 : 1; };
    return {mag(k11), mag(k12), mag(k21), mag(k22), sgn(k11), sgn(k12), sgn(k21), sgn(k22)};
}

std::uint64_t ChannelMatrix::channels(State to, State from) const {
    if (to == State::One) {
        return from == State::One ? m11 : m12;
    }
    return from == State::One ? m21 : m22;
}

int ChannelMatrix::sign(State to, State from) const {
    if (to == State::One) {
        return from == State::One ? s11 : s12;
    }
    return from == State::One ? s21 : s22;
}

TransitionMatrix ChannelMatrix::signed_rates() const {
    auto r = [](std::uint64_t m, int s) { return s * static_cast<double>(m); };
    return {r(m11, s11), r(m12, s12), r(m21, s21), r(m22, s22)};
}

TransitionMatrix ChannelMatrix::unsigned_rates() const {
    return {static_cast<double>(m11), static_cast<double>(m12), static_cast<double>(m21), static_cast<double>(m22)};
}

PathCount enumerate_paths(const ChannelMatrix &channels, const CountState &c, std::int64_t n, State target,
                          const OracleOptions &options) {
    if (n < 0) {
        throw std::invalid_argument("enumerate_paths: negative step count");
    }
    if (c.c1 == 0 && c.c2 == 0) {
        throw std::invalid_argument("enumerate_paths: initial multiplicities are both zero");
    }
    for (int s : {channels.s11, channels.s12, channels.s21, channels.s22}) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("enumerate_paths: channel signs must be +1 or -1");
        }
    }
    std::uint64_t total = total_paths(channels, c, n, target);
    if (total > options.max_paths) {
        throw OracleBudgetExceeded("path enumeration needs " +
                                   (total == kSaturated ? std::string("more than 2^64") : std::to_string(total)) +
                                   " weighted paths, budget is " + std::to_string(options.max_paths));
    }

    Enumeration e{channels, n, target, options.max_paths};
    for (State start : kStates) {
        std::uint64_t mult = c.at(start);
        if (mult != 0) {
            e.visit(start, 0, mult, +1);
        }
    }
    return {e.plus, e.minus, target, n};
}

std::int64_t signal_from_counts(const PathCount &p) {
    constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    std::int64_t d;
    if (p.a_plus > kMax || p.a_minus > kMax ||
        __builtin_sub_overflow(static_cast<std::int64_t>(p.a_plus), static_cast<std::int64_t>(p.a_minus), &d)) {
        throw std::overflow_error("signal_from_counts: difference does not fit in 64 bits");
    }
    return d;
}

std::int64_t born_number(const PathCount &p) {
    std::int64_t d = signal_from_counts(p);
    std::int64_t plus = static_cast<std::int64_t>(p.a_plus);
    std::int64_t minus = static_cast<std::int64_t>(p.a_minus);
    // Positive recombinations (a+)^2 + (a-)^2 minus negative ones 2 a+ a-.
    std::int64_t pp, mm, pm, positive, negative, net;
    if (!__builtin_mul_overflow(plus, plus, &pp) && !__builtin_mul_overflow(minus, minus, &mm) &&
        !__builtin_mul_overflow(plus, minus, &pm) && !__builtin_add_overflow(pp, mm, &positive) &&
        !__builtin_mul_overflow(pm, std::int64_t{2}, &negative) && !__builtin_sub_overflow(positive, negative, &net)) {
        return net;
    }
    if (__builtin_mul_overflow(d, d, &net)) {
        throw std::overflow_error("born_number: square does not fit in 64 bits");
    }
    return net;
}

VerificationReport verify_against_propagation(const ChannelMatrix &channels, const CountState &c, std::int64_t n_max,
                                              const OracleOptions &options) {
    if (n_max < 0) {
        throw std::invalid_argument("verify_against_propagation: negative n_max");
    }
    VerificationReport report;
    TransitionMatrix k = channels.signed_rates();
    InitialState c0{static_cast<double>(c.c1), static_cast<double>(c.c2)};
    for (std::int64_t n = 0; n <= n_max; n++) {
        SignalVector a = propagate_n(k, c0, n);
        for (State s : kStates) {
            PathCount p = enumerate_paths(channels, c, n, s, options);
            std::int64_t signal = signal_from_counts(p);
            double propagated = s == State::One ? a.a1 : a.a2;
            report.checks++;
            if (static_cast<double>(signal) != propagated && report.passed) {
                report.passed = false;
                report.first_failure = OracleMismatch{n, s, signal, propagated};
            }
        }
    }
    return report;
}

}  // namespace qsp
