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

#ifndef CLIFFSIM_LAYOUT_HPP
#define CLIFFSIM_LAYOUT_HPP

#include <functional>

#include "cliffsim/clifford2.hpp"
#include "cliffsim/hm_group.hpp"
#include "cliffsim/stabilizer.hpp"

namespace cliffsim {

// One grid column of an MBQC layout: a basis bit per row (0 = X, 1 = Y) and
// the vertical CZ edges within the column (adjacent rows only).
struct LayoutColumn {
    BitVec basis;
    std::vector<std::pair<uint32_t, uint32_t>> vert_edges;
};

// Measurement-based program on a rows x cols grid subgraph. Every vertex
// exists; horizontal edges join every pair of neighbouring columns row-wise,
// vertical edges are per column. Inputs are column 0, outputs the last
// column (unmeasured in gadget mode). Measuring columns left to right
// teleports an m-qubit logical state through; each measured column applies
// CZ(vertical edges) then per row H * Rz^-basis, with byproduct X^outcome.
struct MeasurementLayout {
    size_t rows = 0;
    std::vector<LayoutColumn> cols;
    size_t round1_cols = 0;  // columns [0, round1_cols) form round 1

    // Exact (signed) logical product of all measured-column operations; the
    // all-plus residual satisfies residual == frame * net |+...+>.
    CliffordTableau net{0};

    size_t num_cols() const { return cols.size(); }
    size_t output_col() const { return cols.size() - 1; }
    size_t num_vertices() const { return rows * cols.size(); }
    size_t vid(size_t row, size_t col) const { return col * rows + row; }
    size_t row_of(size_t vid_) const { return vid_ % rows; }
    size_t col_of(size_t vid_) const { return vid_ / rows; }
    size_t num_measured() const { return rows * (cols.size() - 1); }

    // Gate list of one measured column's logical operation.
    std::vector<Gate> column_gates(size_t col) const;

    // Full graph adjacency over vertex ids (small layouts only).
    BitMat to_graph() const;

    // Structural check: edges grid-local, basis defined on measured columns.
    bool grid_embedding_ok() const;

    std::string to_text() const;
    static std::optional<MeasurementLayout> from_text(const std::string& text);
};

// Result of sweeping a layout's measured columns.
struct SweepResult {
    MeasurementRecord record;      // qubit field holds vertex ids
    StabilizerState residual{0};   // logical m-qubit state on the outputs
};

// Honest simulation: every teleport outcome is a fresh fair coin.
SweepResult run_layout(const MeasurementLayout& layout, Rng& rng);

// Sweep with outcomes forced to the given bits, basis bits optionally
// overridden (nullptr keeps the compiled ones). outcomes[vid(r, c)] for all
// measured columns c.
StabilizerState sweep_forced(const MeasurementLayout& layout, const std::vector<uint8_t>& outcomes,
                             const std::vector<BitVec>* basis_override = nullptr);

// Exact Pauli correction P with residual == P * net |+...+>, solved from the
// recorded outcomes; defined up to a stabilizer of the target state.
PauliString pauli_frame(const MeasurementLayout& layout, const MeasurementRecord& outcomes);

// --- Compilers -------------------------------------------------------------

// Line gadget on 3n+2 vertices: residual == gates[0] * ... * gates[n-1]
// applied to |+> modulo Pauli. Letters are placed right-to-left (the last
// letter's block is leftmost and absorbs the input-column Hadamard).
MeasurementLayout line_gadget(const std::vector<C1Coset>& gates);

// Brickwork gadget on 2 x (8n+2) vertices (16n+4 in total): residual ==
// gates[0] * ... * gates[n-1] |++> modulo Pauli.
MeasurementLayout brickwork_gadget(const std::vector<C2Coset>& gates);

// Wide cluster gadget on m rows: residual == word[0] * ... * word[n-1]
// |+...+> modulo Pauli. Each letter occupies an Rz segment plus two double
// reversals of the even-odd sorting network; every basis bit depends on at
// most one input bit.
MeasurementLayout wide_cluster_gadget_letters(size_t m, const std::vector<GmLetter>& word);

// Spec-shaped wrapper: realizes g[0] h[0] g[1] h[1] ... g[n-1] h[n-1]
// |+...+> modulo Pauli (h[n-1] applied first).
MeasurementLayout wide_cluster_gadget(size_t m, const std::vector<CnotLetter>& g,
                                      const std::vector<HmElement>& h);

// Buffer-free sequential composition: b's unitary after a's.
MeasurementLayout compose_gadgets(const MeasurementLayout& a, const MeasurementLayout& b);

// --- Block tables ----------------------------------------------------------

// 16 basis bits (bit = 2*relcol + row) of the 8-column two-row block with
// vertical edges at relative columns 0, 2, 4, 6; covers all 720 cosets.
uint16_t brickwork_block_bits(C2Coset target);
C2Coset brickwork_block_gate(uint16_t bits);

// 3 basis bits of a line block; covers all 6 cosets.
uint8_t line_block_bits(C1Coset target);
C1Coset line_block_gate(uint8_t bits);

// Decomposition of a 3-qubit Clifford (mod Pauli) into nearest-neighbour
// two-qubit cosets on wire pairs (0,1) and (1,2); entry k applies before
// entry k+1. Found by meet-in-the-middle; at most four factors.
std::vector<std::pair<int, C2Coset>> nn_pair_decompose(const CliffordTableau& target);

}  // namespace cliffsim

#endif
