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

#ifndef QSP_BORN_ENSEMBLE_HPP
#define QSP_BORN_ENSEMBLE_HPP

#include <cstdint>
#include <vector>

namespace qsp {

/// Square +/-1 matrix of all pairings of the qubits transmitted to one observation.
///
/// Rows and columns index transmitted qubits. At rotation 0 both axes carry the a+ qubits
/// from positive paths first, then the a- qubits from negative paths; entry (i, j) is +1
/// when qubits i and j travelled paths of the same sign.
class EventMatrix {
  public:
    EventMatrix(std::uint64_t a_plus, std::uint64_t a_minus, int rotation, std::vector<int> entries);

    std::size_t size() const { return size_; }
    int rotation() const { return rotation_; }
    std::uint64_t a_plus() const { return a_plus_; }
    std::uint64_t a_minus() const { return a_minus_; }
    int at(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
    const std::vector<int> &entries() const { return entries_; }

    std::int64_t sum() const;
    bool is_symmetric() const;

    bool operator==(const EventMatrix &) const = default;

  private:
    std::uint64_t a_plus_;
    std::uint64_t a_minus_;
    int rotation_;
    std::size_t size_;
    std::vector<int> entries_;
};

/// Mean of the four rotated event matrices.
struct BornEnsemble {
    std::size_t size = 0;
    /// Row-major, each entry 0 or 1.
    std::vector<int> mean_entries;
    std::uint64_t born_count = 0;

    int at(std::size_t row, std::size_t col) const { return mean_entries[row * size + col]; }
};

struct CellClassification {
    /// Cells equal to +1 in all four rotations.
    std::uint64_t invariant_count = 0;
    /// Cells equal to +1 in exactly two rotations.
    std::uint64_t alternating_count = 0;
};

/// Event matrix for a+ positive and a- negative paths, rotated by rotation * 90 degrees.
/// Throws std::invalid_argument when a+ + a- = 0 or rotation is outside {0, 1, 2, 3}.
EventMatrix build_event_matrix(std::uint64_t a_plus, std::uint64_t a_minus, int rotation);

/// Quarter turn: entry (i, j) of the result is entry (j, N-1-i) of the input.
EventMatrix rotate(const EventMatrix &e);

/// Event matrix obtained by assigning qubit types independently on each axis instead of by
/// rotation. With rows_positive_first the row axis lists positive-path qubits first,
/// otherwise negative-path qubits first; likewise for columns. The returned rotation index
/// is the one whose rotated matrix coincides with this assignment.
EventMatrix event_matrix_from_axis_assignment(std::uint64_t a_plus, std::uint64_t a_minus, bool rows_positive_first,
                                              bool cols_positive_first);

/// Elementwise mean over the four rotations. Throws EnsembleFalsified when a mean entry is
/// outside {0, 1} or the unit entries do not form the central square block of side |a+ - a-|.
BornEnsemble mean_over_rotations(std::uint64_t a_plus, std::uint64_t a_minus);

/// Partitions cells into rotation-invariant and alternating ones. Throws EnsembleFalsified
/// if any cell is neither.
CellClassification classify_cells(std::uint64_t a_plus, std::uint64_t a_minus);

}  // namespace qsp

#endif
