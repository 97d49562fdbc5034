// Copyright 2026 The cliffsim Authors
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

#ifndef CLIFFSIM_CONTEXTUALITY_HPP
#define CLIFFSIM_CONTEXTUALITY_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cliffsim/clifford2.hpp"

namespace cliffsim {

// Thrown when prover-supplied outcome tables violate their own product
// constraints (a transcript-valid prover can never trigger it).
struct MalformedProverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Three pairwise-commuting canonical two-qubit Paulis multiplying to
// sign * II.
struct PauliLine {
    std::array<PauliString, 3> paulis;  // sorted by bit pattern
    int8_t sign;                        // +1 or -1

    bool contains(const PauliString& p) const;
    bool operator==(const PauliLine& o) const { return paulis == o.paulis; }
};

// Index of a canonical two-qubit Pauli in 0..15 (bit order x0,x1,z0,z1).
size_t canonical2_index(const PauliString& p);
PauliString canonical2_from_index(size_t idx);

// Total +-1 assignment to the 15 non-identity canonical two-qubit Paulis,
// indexed by canonical2_index (entry 0 unused).
using PauliAssignment = std::array<int8_t, 16>;

// All 15 Pauli lines, in a fixed deterministic order.
const std::vector<PauliLine>& enumerate_pauli_lines();

// Lines whose assigned outcome product differs from the line sign. Throws
// on a partial assignment (a zero entry for a non-identity Pauli).
std::vector<PauliLine> violated_lines(const PauliAssignment& assignment);

// The magic square grid (rows multiply to -II, columns to +II).
struct MagicSquare {
    std::array<std::array<PauliString, 3>, 3> grid;

    static const MagicSquare& standard();
    MagicSquare conjugated(C2Coset u) const;
    bool check_structure() const;  // row sign -, column sign +, commuting
    // Weaker invariant that survives sign-free conjugation: rows and columns
    // commute and the product of row signs differs from the product of
    // column signs, which is what forces contradictory tables.
    bool is_valid_context() const;
    int8_t row_sign(size_t i) const;
    int8_t col_sign(size_t j) const;
};

// Outcome tables for the six magic-square measurement programs:
// row_outcomes[i][j] is the +-1 outcome of grid[i][j] in the row-i program,
// col_outcomes[j][i] the outcome of grid[i][j] in the column-j program.
using SquareOutcomes = std::array<std::array<int8_t, 3>, 3>;

// Returns a Pauli whose row-program and column-program outcomes disagree
// (row-major first disagreement). Throws MalformedProverError when a triple
// violates its own product constraint.
PauliString extract_nonstab_square(const MagicSquare& square, const SquareOutcomes& row_outcomes,
                                   const SquareOutcomes& col_outcomes);

// The magic pentagram on three qubits.
struct Pentagram {
    std::array<PauliString, 10> nodes;            // fixed order
    std::array<std::array<uint8_t, 4>, 5> lines;  // node indices per line
    std::array<int8_t, 5> line_signs;

    static const Pentagram& standard();
    bool check_structure() const;
    // True iff some +-1 node assignment satisfies every line constraint
    // (exhaustively decided; false for the magic pentagram).
    bool has_satisfying_assignment() const;
    std::optional<size_t> node_index(const PauliString& p) const;
};

// Five outcome quadruples, one per line, aligned with Pentagram::lines.
using PentagramOutcomes = std::array<std::array<int8_t, 4>, 5>;

// First node (in fixed node order) whose two line measurements disagree.
PauliString extract_nonstab_pentagram(const Pentagram& pent, const PentagramOutcomes& outcomes);

// Majority vote over three outcomes per Pauli (one from each containing
// line), then a uniformly random violated line.
// line_outcomes[k][j] is the outcome of enumerate_pauli_lines()[k].paulis[j].
using LineOutcomeTables = std::array<std::array<int8_t, 3>, 15>;
PauliLine majority_line_extract(const LineOutcomeTables& line_outcomes, Rng& rng);

// Fact check: every magic square obtained by conjugating the standard one by
// any of the 720 cosets intersects all 15 Pauli lines.
bool square_line_intersection_check();

// Basis change for measuring row/column `index` (0..2 rows, 3..5 columns) of
// the standard magic square: conjugation by the result maps the triple to
// {+-ZI, +-IZ, +-ZZ}, so measuring both qubits in Z after it measures the
// triple. Built as (single-qubit Clifford on one side) then the Bell basis
// change, except row 0 which is the plain Bell basis change.
C2Coset row_col_measurement_program(size_t index);

// Same contract for an arbitrary Pauli line: maps paulis[0] -> +-ZI,
// paulis[1] -> +-IZ, paulis[2] -> +-ZZ.
C2Coset line_measurement_program(const PauliLine& line);

}  // namespace cliffsim

#endif
