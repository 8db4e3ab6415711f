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

#include "qsp/born_ensemble.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "qsp/errors.hpp"

namespace qsp {

namespace {

/// Beyond this side length the N x N matrices stop being a sensible thing to materialize.
constexpr std::uint64_t kMaxSide = 1u << 12;

std::size_t checked_size(std::uint64_t a_plus, std::uint64_t a_minus) {
    if (a_plus + a_minus == 0) {
        throw std::invalid_argument("event matrix needs at least one transmitted qubit");
    }
    if (a_plus > kMaxSide || a_minus > kMaxSide || a_plus + a_minus > kMaxSide) {
        throw std::invalid_argument("event matrix side exceeds " + std::to_string(kMaxSide));
    }
    return static_cast<std::size_t>(a_plus + a_minus);
}

/// Path sign of each qubit on an axis; positive-path qubits first unless reversed.
std::vector<int> axis_signs(std::uint64_t a_plus, std::uint64_t a_minus, bool positive_first) {
    std::vector<int> s;
    s.reserve(a_plus + a_minus);
    s.insert(s.end(), a_plus, +1);
    s.insert(s.end(), a_minus, -1);
    if (!positive_first) {
        std::reverse(s.begin(), s.end());
    }
    return s;
}

std::vector<int> outer(const std::vector<int> &rows, const std::vector<int> &cols) {
    std::vector<int> out;
    out.reserve(rows.size() * cols.size());
    for (int r : rows) {
        for (int c : cols) {
            out.push_back(r * c);
        }
    }
    return out;
}

std::array<EventMatrix, 4> all_rotations(std::uint64_t a_plus, std::uint64_t a_minus) {
    EventMatrix r0 = build_event_matrix(a_plus, a_minus, 0);
    EventMatrix r1 = rotate(r0);
    EventMatrix r2 = rotate(r1);
    EventMatrix r3 = rotate(r2);
    return {r0, r1, r2, r3};
}

}  // namespace

EventMatrix::EventMatrix(std::uint64_t a_plus, std::uint64_t a_minus, int rotation, std::vector<int> entries)
    : a_plus_(a_plus), a_minus_(a_minus), rotation_(rotation), size_(checked_size(a_plus, a_minus)),
      entries_(std::move(entries)) {
    if (rotation < 0 || rotation > 3) {
        throw std::invalid_argument("event matrix rotation must be in {0, 1, 2, 3}");
    }
    if (entries_.size() != size_ * size_) {
        throw std::invalid_argument("event matrix entry count does not match its size");
    }
}

std::int64_t EventMatrix::sum() const {
    std::int64_t total = 0;
    for (int v : entries_) {
        total += v;
    }
    return total;
}

bool EventMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < size_; i++) {
        for (std::size_t j = i + 1; j < size_; j++) {
            if (at(i, j) != at(j, i)) {
                return false;
            }
        }
    }
    return true;
}

EventMatrix build_event_matrix(std::uint64_t a_plus, std::uint64_t a_minus, int rotation) {
    if (rotation < 0 || rotation > 3) {
        throw std::invalid_argument("event matrix rotation must be in {0, 1, 2, 3}");
    }
    checked_size(a_plus, a_minus);
    std::vector<int> s = axis_signs(a_plus, a_minus, true);
    EventMatrix e(a_plus, a_minus, 0, outer(s, s));
    for (int r = 0; r < rotation; r++) {
        e = rotate(e);
    }
    return e;
}

EventMatrix rotate(const EventMatrix &e) {
    std::size_t n = e.size();
    std::vector<int> out(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            out[i * n + j] = e.at(j, n - 1 - i);
        }
    }
    return EventMatrix(e.a_plus(), e.a_minus(), (e.rotation() + 1) % 4, std::move(out));
}

EventMatrix event_matrix_from_axis_assignment(std::uint64_t a_plus, std::uint64_t a_minus, bool rows_positive_first,
                                              bool cols_positive_first) {
    checked_size(a_plus, a_minus);
    std::vector<int> rows = axis_signs(a_plus, a_minus, rows_positive_first);
    std::vector<int> cols = axis_signs(a_plus, a_minus, cols_positive_first);
    // Quarter turns alternate reversing the row axis and the column axis.
    int rotation = rows_positive_first ? (cols_positive_first ? 0 : 3) : (cols_positive_first ? 1 : 2);
    return EventMatrix(a_plus, a_minus, rotation, outer(rows, cols));
}

BornEnsemble mean_over_rotations(std::uint64_t a_plus, std::uint64_t a_minus) {
    std::array<EventMatrix, 4> rots = all_rotations(a_plus, a_minus);
    std::size_t n = rots[0].size();
    std::uint64_t lo = std::min(a_plus, a_minus);
    std::uint64_t side = a_plus > a_minus ? a_plus - a_minus : a_minus - a_plus;
    auto in_block = [&](std::size_t i) { return i >= lo && i < lo + side; };

    BornEnsemble ensemble;
    ensemble.size = n;
    ensemble.mean_entries.resize(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            int total = 0;
            for (const EventMatrix &r : rots) {
                total += r.at(i, j);
            }
            if (total != 0 && total != 4) {
                throw EnsembleFalsified("mean event matrix entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                        ") is " + std::to_string(total) + "/4, not 0 or 1");
            }
            int mean = total / 4;
            if ((mean == 1) != (in_block(i) && in_block(j))) {
                throw EnsembleFalsified("unit entries of the mean event matrix are not the central square block");
            }
            ensemble.mean_entries[i * n + j] = mean;
            ensemble.born_count += static_cast<std::uint64_t>(mean);
        }
    }
    if (ensemble.born_count != side * side) {
        throw EnsembleFalsified("mean event matrix has " + std::to_string(ensemble.born_count) + " unit entries, expected " +
                                std::to_string(side * side));
    }
    return ensemble;
}

CellClassification classify_cells(std::uint64_t a_plus, std::uint64_t a_minus) {
    std::array<EventMatrix, 4> rots = all_rotations(a_plus, a_minus);
    std::size_t n = rots[0].size();
    CellClassification result;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            int positives = 0;
            for (const EventMatrix &r : rots) {
                positives += r.at(i, j) > 0;
            }
            if (positives == 4) {
                result.invariant_count++;
            } else if (positives == 2) {
                result.alternating_count++;
            } else {
                throw EnsembleFalsified("cell (" + std::to_string(i) + ", " + std::to_string(j) + ") is +1 in " +
                                        std::to_string(positives) + " of four rotations");
            }
        }
    }
    return result;
}

}  // namespace qsp
