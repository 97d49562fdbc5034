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

#ifndef CLIFFSIM_STABILIZER_HPP
#define CLIFFSIM_STABILIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "cliffsim/dense.hpp"
#include "cliffsim/rng.hpp"
#include "cliffsim/tableau.hpp"

namespace cliffsim {

enum class StabKind { Plus, Minus, NonStabilizer };

struct MeasurementRecord {
    std::vector<size_t> qubits;
    std::vector<char> bases;         // 'X', 'Y' or 'Z'
    std::vector<uint8_t> outcomes;   // 0 = eigenvalue +1, 1 = eigenvalue -1
    std::vector<uint8_t> deterministic;

    size_t size() const { return qubits.size(); }
    void push(size_t q, char basis, uint8_t outcome, bool det) {
        qubits.push_back(q);
        bases.push_back(basis);
        outcomes.push_back(outcome);
        deterministic.push_back(det);
    }
    std::string to_json() const;
};

// Pure m-qubit stabilizer state held as m independent commuting signed
// generators (phases 0 or 2 only).
class StabilizerState {
   public:
    explicit StabilizerState(size_t m);  // |0...0>
    static StabilizerState zero_state(size_t m) { return StabilizerState(m); }
    static StabilizerState plus_state(size_t m);
    // Graph state: generator g_v = X_v prod_{u ~ v} Z_u, all signs +.
    // Throws on non-symmetric or nonzero-diagonal adjacency.
    static StabilizerState from_graph(const BitMat& adjacency);
    // Validates and adopts the given generator list.
    static StabilizerState from_generators(size_t m, std::vector<PauliString> generators);

    size_t num_qubits() const { return m_; }
    const std::vector<PauliString>& generators() const { return gens_; }

    void apply_clifford_inplace(const CliffordTableau& t);
    void apply_gate_inplace(const Gate& g);
    void apply_pauli_inplace(const PauliString& p);  // signs only

    // Measures the canonical (positive) operator of p; phase of p ignored.
    // Returns outcome bit (0 -> +1) and whether it was deterministic.
    std::pair<uint8_t, bool> measure_pauli(const PauliString& p, Rng& rng);
    // Forces the outcome bit; returns false (and leaves the state valid but
    // unspecified) when the projection is empty.
    bool postselect_pauli(const PauliString& p, uint8_t outcome);

    std::pair<uint8_t, bool> measure_single(size_t qubit, char basis, Rng& rng);

    MeasurementRecord measure_multi(const std::vector<size_t>& qubits,
                                    const std::vector<char>& bases, Rng& rng);

    // Returns false when some forced outcome contradicts a deterministic
    // sign ("the projection is empty").
    bool postselect(const std::vector<size_t>& qubits, const std::vector<char>& bases,
                    const std::vector<uint8_t>& outcomes);

    StabKind is_stabilizer(const PauliString& p) const;

    // Debug invariant check: generators commute, are independent, and no
    // generator carries an imaginary phase.
    bool invariants_ok() const;

    // m, then one generator per line in Pauli text form.
    std::string str() const;

   private:
    size_t m_;
    std::vector<PauliString> gens_;
};

StabilizerState apply_clifford(const StabilizerState& s, const CliffordTableau& t);

// Lemma F.1 sampler: r * c_block xor z for uniform r is uniform over the
// support when z is a support element and c_block the tableau's C block.
BitVec support_sample(const BitVec& z, const BitMat& c_block, Rng& rng);

// Dense statevector of a stabilizer state (test oracle, m <= 12).
DenseState to_dense(const StabilizerState& s);

// States equal modulo a Pauli correction: same stabilizer group up to signs.
bool states_equal_mod_pauli(const StabilizerState& a, const StabilizerState& b);

}  // namespace cliffsim

#endif
