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

#ifndef CLIFFSIM_HM_GROUP_HPP
#define CLIFFSIM_HM_GROUP_HPP

#include <vector>

#include "cliffsim/tableau.hpp"

namespace cliffsim {

// Element of H_m = <CZ, Rz>_m / P_m in canonical decomposition: a symmetric
// m x m GF(2) matrix whose off-diagonal entry (i,j) flags CZ(i,j) and whose
// diagonal entry (i,i) flags Rz(i). The group is abelian and every element
// is an involution.
class HmElement {
   public:
    HmElement() = default;
    explicit HmElement(size_t m) : sym_(m, m) {}
    explicit HmElement(BitMat sym);

    static HmElement identity(size_t m) { return HmElement(m); }
    static HmElement random(size_t m, Rng& rng) { return HmElement(BitMat::random_symmetric(m, rng)); }

    size_t num_qubits() const { return sym_.rows(); }
    const BitMat& sym() const { return sym_; }
    bool is_identity() const;

    bool cz(size_t i, size_t j) const { return sym_.get(i, j); }
    bool rz(size_t i) const { return sym_.get(i, i); }
    void set_cz(size_t i, size_t j, bool v);
    void set_rz(size_t i, bool v) { sym_.set(i, i, v); }

    std::vector<Gate> to_gates() const;
    CliffordTableau to_tableau() const { return CliffordTableau::from_gates(num_qubits(), to_gates()); }

    bool operator==(const HmElement& o) const { return sym_ == o.sym_; }
    bool operator!=(const HmElement& o) const { return !(*this == o); }

   private:
    BitMat sym_;
};

// Entrywise GF(2) sum of canonical matrices; valid modulo Paulis because
// squares of CZ and Rz vanish there.
HmElement hm_mul(const HmElement& a, const HmElement& b);
inline HmElement hm_inverse(const HmElement& a) { return a; }

// One-hot CNOT letter (or the identity) on m wires.
struct CnotLetter {
    int32_t control = -1;
    int32_t target = -1;

    static CnotLetter id() { return {}; }
    static CnotLetter cnot(int32_t c, int32_t t) { return {c, t}; }
    bool is_identity() const { return control < 0; }
    bool operator==(const CnotLetter& o) const { return control == o.control && target == o.target; }
};

// Validates indices; identity always valid.
bool cnot_letter_valid(const CnotLetter& g, size_t m);

// Column-convention GF(2) action: CNOT(c -> t) maps x_t ^= x_c.
BitMat cnot_letter_matrix(const CnotLetter& g, size_t m);

// Image of h under conjugation by the CNOT letter, computed by the local
// rewrite rules (substituting x_t -> x_t + x_c in the quadratic form).
HmElement conj_by_cnot(const HmElement& h, const CnotLetter& g);

// Uniform element of H_3^(+): the index-2 subgroup of H_3 with even total
// gate count, embedded on the first three of m qubits. Requires m >= 3.
HmElement sample_h3_even(size_t m, Rng& rng);

// All 32 elements of H_3^(+) on m qubits.
std::vector<HmElement> enumerate_h3_even(size_t m);

// Letter of G_m in normal form g * h with g a CNOT letter and h in H_m.
struct GmLetter {
    CnotLetter g;
    HmElement h;

    static GmLetter from_cnot(CnotLetter c, size_t m) { return {c, HmElement::identity(m)}; }
    static GmLetter from_hm(HmElement h) { return {CnotLetter::id(), std::move(h)}; }
    size_t num_qubits() const { return h.num_qubits(); }
    std::vector<Gate> to_gates() const;
    CliffordTableau to_tableau() const;
};

// Product of letters when at most one carries a CNOT part; products of two
// CNOT-bearing letters leave the letter normal form and throw.
GmLetter gm_mul(const GmLetter& a, const GmLetter& b);
GmLetter gm_inverse(const GmLetter& a);

}  // namespace cliffsim

#endif
