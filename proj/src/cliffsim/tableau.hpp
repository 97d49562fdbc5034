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

#ifndef CLIFFSIM_TABLEAU_HPP
#define CLIFFSIM_TABLEAU_HPP

#include <string>
#include <vector>

#include "cliffsim/pauli.hpp"

namespace cliffsim {

enum class GateKind { H, RZ, RZ_DAG, X, Y, Z, CNOT, CZ, SWAP };

struct Gate {
    GateKind kind;
    size_t a;
    size_t b;  // second qubit for two-qubit gates, ignored otherwise

    static Gate h(size_t q) { return {GateKind::H, q, 0}; }
    static Gate rz(size_t q) { return {GateKind::RZ, q, 0}; }
    static Gate rz_dag(size_t q) { return {GateKind::RZ_DAG, q, 0}; }
    static Gate x(size_t q) { return {GateKind::X, q, 0}; }
    static Gate y(size_t q) { return {GateKind::Y, q, 0}; }
    static Gate z(size_t q) { return {GateKind::Z, q, 0}; }
    static Gate cnot(size_t c, size_t t) { return {GateKind::CNOT, c, t}; }
    static Gate cz(size_t a, size_t b) { return {GateKind::CZ, a, b}; }
    static Gate swap(size_t a, size_t b) { return {GateKind::SWAP, a, b}; }
};

// Signed symplectic tableau of an m-qubit Clifford operation. Row i of the
// [A|B] half records the image of X_i under conjugation, row i of [C|D] the
// image of Z_i; generator ordering is X_0..X_{m-1}, Z_0..Z_{m-1}. Signs are
// maintained exactly (each image has phase 0 or 2).
class CliffordTableau {
   public:
    explicit CliffordTableau(size_t m);  // identity

    static CliffordTableau identity(size_t m) { return CliffordTableau(m); }
    static CliffordTableau from_gates(size_t m, const std::vector<Gate>& gates);
    // GF(2) blocks with all signs +. Throws if not symplectic.
    static CliffordTableau from_blocks(const BitMat& a, const BitMat& b, const BitMat& c,
                                       const BitMat& d);
    static CliffordTableau random(size_t m, Rng& rng);

    size_t num_qubits() const { return m_; }

    const PauliString& x_image(size_t q) const { return rows_[q]; }
    const PauliString& z_image(size_t q) const { return rows_[m_ + q]; }

    // In-place left composition: *this becomes gate o *this.
    void apply_gate_inplace(const Gate& g);
    void apply_gates_inplace(const std::vector<Gate>& gates);

    // Exact image of p under conjugation, phase included.
    PauliString conjugate(const PauliString& p) const;

    // Full 2m x 2m GF(2) matrix [[A,B],[C,D]].
    BitMat matrix() const;
    BitMat block_a() const;
    BitMat block_b() const;
    BitMat block_c() const;
    BitMat block_d() const;

    bool is_symplectic() const;

    bool operator==(const CliffordTableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const CliffordTableau& o) const { return !(*this == o); }

    // m, then 2m rows of 2m bits hex-packed, then 2m sign bits.
    std::string str() const;
    static std::optional<CliffordTableau> parse(const std::string& text);

   private:
    friend CliffordTableau compose(const CliffordTableau& t1, const CliffordTableau& t2);
    friend CliffordTableau inverse(const CliffordTableau& t);

    size_t m_;
    std::vector<PauliString> rows_;  // X images then Z images
};

CliffordTableau apply_gate(const CliffordTableau& t, const Gate& g);
// Tableau of t2 o t1 (t1 applied first).
CliffordTableau compose(const CliffordTableau& t1, const CliffordTableau& t2);
PauliString conjugate(const CliffordTableau& t, const PauliString& p);
// True iff the GF(2) parts agree, i.e. the operations are equal in C_m / P_m.
bool equal_mod_pauli(const CliffordTableau& t1, const CliffordTableau& t2);
CliffordTableau inverse(const CliffordTableau& t);

}  // namespace cliffsim

#endif
