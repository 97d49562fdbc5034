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

#include "cliffsim/hm_group.hpp"

#include <stdexcept>

namespace cliffsim {

HmElement::HmElement(BitMat sym) : sym_(std::move(sym)) {
    if (!sym_.is_symmetric()) throw std::invalid_argument("HmElement: matrix must be symmetric");
}

bool HmElement::is_identity() const {
    for (size_t i = 0; i < sym_.rows(); i++)
        if (sym_.row(i).any()) return false;
    return true;
}

void HmElement::set_cz(size_t i, size_t j, bool v) {
    if (i == j) throw std::invalid_argument("set_cz: needs distinct qubits");
    sym_.set(i, j, v);
    sym_.set(j, i, v);
}

std::vector<Gate> HmElement::to_gates() const {
    std::vector<Gate> gates;
    size_t m = num_qubits();
    for (size_t i = 0; i < m; i++)
        for (size_t j = i + 1; j < m; j++)
            if (sym_.get(i, j)) gates.push_back(Gate::cz(i, j));
    for (size_t i = 0; i < m; i++)
        if (sym_.get(i, i)) gates.push_back(Gate::rz(i));
    return gates;
}

HmElement hm_mul(const HmElement& a, const HmElement& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("hm_mul: dimension mismatch");
    return HmElement(a.sym() + b.sym());
}

bool cnot_letter_valid(const CnotLetter& g, size_t m) {
    if (g.is_identity()) return g.target < 0;
    return g.control >= 0 && g.target >= 0 && size_t(g.control) < m && size_t(g.target) < m &&
           g.control != g.target;
}

BitMat cnot_letter_matrix(const CnotLetter& g, size_t m) {
    if (!cnot_letter_valid(g, m)) throw std::invalid_argument("cnot_letter_matrix: bad letter");
    BitMat out = BitMat::identity(m);
    if (!g.is_identity()) out.set(size_t(g.target), size_t(g.control), true);
    return out;
}

HmElement conj_by_cnot(const HmElement& h, const CnotLetter& g) {
    size_t m = h.num_qubits();
    if (!cnot_letter_valid(g, m)) throw std::out_of_range("conj_by_cnot: bad letter");
    if (g.is_identity()) return h;
    size_t a = size_t(g.control), b = size_t(g.target);
    // Substituting x_b -> x_b + x_a in the phase polynomial: cross terms
    // x_u x_b spawn x_u x_a, the Rz term at b spawns Rz(a) and CZ(a,b); pure
    // Pauli-Z byproducts vanish modulo P_m.
    BitMat sym = h.sym();
    for (size_t u = 0; u < m; u++) {
        if (u == a || u == b) continue;
        if (sym.get(u, b)) {
            sym.flip(u, a);
            sym.flip(a, u);
        }
    }
    if (sym.get(b, b)) {
        sym.flip(a, b);
        sym.flip(b, a);
        sym.flip(a, a);
    }
    return HmElement(sym);
}

HmElement sample_h3_even(size_t m, Rng& rng) {
    if (m < 3) throw std::invalid_argument("sample_h3_even: need m >= 3");
    HmElement h(m);
    // Six free bits on the first three qubits; the last is the parity fix.
    bool bits[6];
    int parity = 0;
    for (int k = 0; k < 5; k++) {
        bits[k] = rng.next_bit();
        parity ^= bits[k];
    }
    bits[5] = parity;
    h.set_rz(0, bits[0]);
    h.set_rz(1, bits[1]);
    h.set_rz(2, bits[2]);
    h.set_cz(0, 1, bits[3]);
    h.set_cz(0, 2, bits[4]);
    h.set_cz(1, 2, bits[5]);
    return h;
}

std::vector<HmElement> enumerate_h3_even(size_t m) {
    if (m < 3) throw std::invalid_argument("enumerate_h3_even: need m >= 3");
    std::vector<HmElement> out;
    for (uint32_t bits = 0; bits < 64; bits++) {
        if (std::popcount(bits) & 1) continue;
        HmElement h(m);
        h.set_rz(0, bits & 1);
        h.set_rz(1, (bits >> 1) & 1);
        h.set_rz(2, (bits >> 2) & 1);
        h.set_cz(0, 1, (bits >> 3) & 1);
        h.set_cz(0, 2, (bits >> 4) & 1);
        h.set_cz(1, 2, (bits >> 5) & 1);
        out.push_back(h);
    }
    return out;
}

std::vector<Gate> GmLetter::to_gates() const {
    std::vector<Gate> gates;
    if (!g.is_identity()) gates.push_back(Gate::cnot(size_t(g.control), size_t(g.target)));
    // g * h applies h first.
    std::vector<Gate> hg = h.to_gates();
    hg.insert(hg.end(), gates.begin(), gates.end());
    return hg;
}

CliffordTableau GmLetter::to_tableau() const {
    return CliffordTableau::from_gates(num_qubits(), to_gates());
}

GmLetter gm_mul(const GmLetter& a, const GmLetter& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("gm_mul: dimension mismatch");
    // (g_a h_a)(g_b h_b) = (g_a g_b)(g_b . h_a)(h_b); stays in normal form
    // when at most one CNOT part is present or the two letters cancel.
    CnotLetter g;
    if (a.g.is_identity()) {
        g = b.g;
    } else if (b.g.is_identity() ) {
        g = a.g;
    } else if (a.g == b.g) {
        g = CnotLetter::id();  // CNOT letters are involutions
    } else {
        throw std::invalid_argument("gm_mul: product of two CNOT letters leaves normal form");
    }
    HmElement ha = conj_by_cnot(a.h, b.g);
    return GmLetter{g, hm_mul(ha, b.h)};
}

GmLetter gm_inverse(const GmLetter& a) {
    // (g h)^-1 = h g = g (g . h); both g and h are involutions.
    return GmLetter{a.g, conj_by_cnot(a.h, a.g)};
}

}  // namespace cliffsim
