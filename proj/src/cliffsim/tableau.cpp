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

#include "cliffsim/tableau.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffsim {

namespace {

// Conjugation of one row by a generating gate, in the i^k X^x Z^z
// convention. Phase increments come from reordering X and Z factors on the
// touched qubits; they were derived from the generator images and are
// exercised exhaustively against the dense oracle in the tests.
void conj_row(PauliString& p, const Gate& g) {
    BitVec x = p.x_bits();
    BitVec z = p.z_bits();
    uint8_t phase = p.phase();
    auto bump = [&](uint8_t k) { phase = (phase + k) & 3; };
    switch (g.kind) {
        case GateKind::H: {
            bool xa = x.get(g.a), za = z.get(g.a);
            bump(xa && za ? 2 : 0);  // Z^x X^z reorder
            x.set(g.a, za);
            z.set(g.a, xa);
            break;
        }
        case GateKind::RZ: {
            bool xa = x.get(g.a);
            bump(xa ? 1 : 0);  // X -> iXZ
            z.set(g.a, z.get(g.a) ^ xa);
            break;
        }
        case GateKind::RZ_DAG: {
            bool xa = x.get(g.a);
            bump(xa ? 3 : 0);  // X -> -iXZ
            z.set(g.a, z.get(g.a) ^ xa);
            break;
        }
        case GateKind::X:
            bump(z.get(g.a) ? 2 : 0);
            break;
        case GateKind::Y:
            bump((x.get(g.a) ^ z.get(g.a)) ? 2 : 0);
            break;
        case GateKind::Z:
            bump(x.get(g.a) ? 2 : 0);
            break;
        case GateKind::CNOT: {
            x.set(g.b, x.get(g.b) ^ x.get(g.a));
            z.set(g.a, z.get(g.a) ^ z.get(g.b));
            break;
        }
        case GateKind::CZ: {
            bool xa = x.get(g.a), xb = x.get(g.b);
            bump(xa && xb ? 2 : 0);  // Z_b^{x_a} X_b^{x_b} reorder
            z.set(g.a, z.get(g.a) ^ xb);
            z.set(g.b, z.get(g.b) ^ xa);
            break;
        }
        case GateKind::SWAP: {
            bool xa = x.get(g.a), za = z.get(g.a);
            bool xb = x.get(g.b), zb = z.get(g.b);
            x.set(g.a, xb);
            z.set(g.a, zb);
            x.set(g.b, xa);
            z.set(g.b, za);
            break;
        }
    }
    p = PauliString(std::move(x), std::move(z), phase);
}

void check_gate(size_t m, const Gate& g) {
    bool two = g.kind == GateKind::CNOT || g.kind == GateKind::CZ || g.kind == GateKind::SWAP;
    if (g.a >= m || (two && g.b >= m)) throw std::out_of_range("gate qubit index out of range");
    if (two && g.a == g.b) throw std::invalid_argument("two-qubit gate needs distinct qubits");
}

}  // namespace

CliffordTableau::CliffordTableau(size_t m) : m_(m) {
    rows_.reserve(2 * m);
    for (size_t q = 0; q < m; q++) rows_.push_back(PauliString::single(m, q, 'X'));
    for (size_t q = 0; q < m; q++) rows_.push_back(PauliString::single(m, q, 'Z'));
}

CliffordTableau CliffordTableau::from_gates(size_t m, const std::vector<Gate>& gates) {
    CliffordTableau t(m);
    t.apply_gates_inplace(gates);
    return t;
}

CliffordTableau CliffordTableau::from_blocks(const BitMat& a, const BitMat& b, const BitMat& c,
                                             const BitMat& d) {
    size_t m = a.rows();
    if (b.rows() != m || c.rows() != m || d.rows() != m || a.cols() != m || b.cols() != m ||
        c.cols() != m || d.cols() != m)
        throw std::invalid_argument("from_blocks: blocks must be square and equal-sized");
    CliffordTableau t(m);
    for (size_t i = 0; i < m; i++) {
        BitVec x(m), z(m);
        for (size_t j = 0; j < m; j++) {
            x.set(j, a.get(i, j));
            z.set(j, b.get(i, j));
        }
        t.rows_[i] = PauliString(x, z, 0);
        t.rows_[i].set_phase(t.rows_[i].y_count() & 3);  // +Hermitian rows
        BitVec x2(m), z2(m);
        for (size_t j = 0; j < m; j++) {
            x2.set(j, c.get(i, j));
            z2.set(j, d.get(i, j));
        }
        t.rows_[m + i] = PauliString(x2, z2, 0);
        t.rows_[m + i].set_phase(t.rows_[m + i].y_count() & 3);
    }
    if (!t.is_symplectic()) throw std::invalid_argument("from_blocks: not symplectic");
    return t;
}

CliffordTableau CliffordTableau::random(size_t m, Rng& rng) {
    CliffordTableau t(m);
    size_t steps = 5 * m * m + 10;
    for (size_t i = 0; i < steps; i++) {
        switch (rng.next_below(4)) {
            case 0: t.apply_gate_inplace(Gate::h(rng.next_below(m))); break;
            case 1: t.apply_gate_inplace(Gate::rz(rng.next_below(m))); break;
            case 2: {
                if (m < 2) break;
                size_t a = rng.next_below(m), b = rng.next_below(m - 1);
                if (b >= a) b++;
                t.apply_gate_inplace(Gate::cnot(a, b));
                break;
            }
            default: {
                if (m < 2) break;
                size_t a = rng.next_below(m), b = rng.next_below(m - 1);
                if (b >= a) b++;
                t.apply_gate_inplace(Gate::cz(a, b));
                break;
            }
        }
    }
    return t;
}

void CliffordTableau::apply_gate_inplace(const Gate& g) {
    check_gate(m_, g);
    for (auto& row : rows_) conj_row(row, g);
}

void CliffordTableau::apply_gates_inplace(const std::vector<Gate>& gates) {
    for (const Gate& g : gates) apply_gate_inplace(g);
}

PauliString CliffordTableau::conjugate(const PauliString& p) const {
    if (p.num_qubits() != m_) throw std::invalid_argument("conjugate: dimension mismatch");
    // p = i^k X^x Z^z, so the image is i^k times the ordered product of the
    // stored generator images.
    PauliString acc(m_);
    acc.set_phase(p.phase());
    for (size_t q = 0; q < m_; q++)
        if (p.x_bits().get(q)) acc = pauli_mul(acc, rows_[q]);
    for (size_t q = 0; q < m_; q++)
        if (p.z_bits().get(q)) acc = pauli_mul(acc, rows_[m_ + q]);
    return acc;
}

BitMat CliffordTableau::matrix() const {
    BitMat m(2 * m_, 2 * m_);
    for (size_t i = 0; i < 2 * m_; i++) {
        for (size_t j = 0; j < m_; j++) {
            m.set(i, j, rows_[i].x_bits().get(j));
            m.set(i, m_ + j, rows_[i].z_bits().get(j));
        }
    }
    return m;
}

namespace {
BitMat extract_block(const CliffordTableau& t, bool z_rows, bool z_bits) {
    size_t m = t.num_qubits();
    BitMat out(m, m);
    for (size_t i = 0; i < m; i++) {
        const PauliString& row = z_rows ? t.z_image(i) : t.x_image(i);
        const BitVec& bits = z_bits ? row.z_bits() : row.x_bits();
        for (size_t j = 0; j < m; j++) out.set(i, j, bits.get(j));
    }
    return out;
}
}  // namespace

BitMat CliffordTableau::block_a() const { return extract_block(*this, false, false); }
BitMat CliffordTableau::block_b() const { return extract_block(*this, false, true); }
BitMat CliffordTableau::block_c() const { return extract_block(*this, true, false); }
BitMat CliffordTableau::block_d() const { return extract_block(*this, true, true); }

bool CliffordTableau::is_symplectic() const {
    for (size_t i = 0; i < 2 * m_; i++) {
        if ((rows_[i].phase() - rows_[i].y_count()) & 1) return false;  // must be +-Hermitian
        for (size_t j = i; j < 2 * m_; j++) {
            bool want_anticommute = (j == i + m_);
            if (commutes(rows_[i], rows_[j]) == want_anticommute) return false;
        }
    }
    return true;
}

std::string CliffordTableau::str() const {
    std::ostringstream out;
    out << m_ << "\n";
    BitMat full = matrix();
    for (size_t i = 0; i < 2 * m_; i++) {
        for (size_t j = 0; j < 2 * m_; j += 4) {
            int nib = 0;
            for (size_t k = 0; k < 4 && j + k < 2 * m_; k++)
                if (full.get(i, j + k)) nib |= 1 << k;
            out << "0123456789abcdef"[nib];
        }
        out << "\n";
    }
    for (size_t i = 0; i < 2 * m_; i++) out << (rows_[i].sign_bit() ? '1' : '0');
    out << "\n";
    return out.str();
}

std::optional<CliffordTableau> CliffordTableau::parse(const std::string& text) {
    std::istringstream in(text);
    size_t m;
    if (!(in >> m)) return std::nullopt;
    CliffordTableau t(m);
    for (size_t i = 0; i < 2 * m; i++) {
        std::string row;
        if (!(in >> row)) return std::nullopt;
        BitVec x(m), z(m);
        for (size_t j = 0; j < 2 * m; j++) {
            size_t pos = j / 4;
            if (pos >= row.size()) return std::nullopt;
            char c = row[pos];
            int nib = c <= '9' ? c - '0' : c - 'a' + 10;
            bool bit = (nib >> (j % 4)) & 1;
            if (j < m) {
                x.set(j, bit);
            } else {
                z.set(j - m, bit);
            }
        }
        t.rows_[i] = PauliString(x, z, 0);
        t.rows_[i].set_phase(t.rows_[i].y_count() & 3);  // +Hermitian
    }
    std::string signs;
    if (!(in >> signs) || signs.size() != 2 * m) return std::nullopt;
    for (size_t i = 0; i < 2 * m; i++)
        if (signs[i] == '1') t.rows_[i].set_phase((t.rows_[i].phase() + 2) & 3);
    if (!t.is_symplectic()) return std::nullopt;
    return t;
}

CliffordTableau apply_gate(const CliffordTableau& t, const Gate& g) {
    CliffordTableau out = t;
    out.apply_gate_inplace(g);
    return out;
}

CliffordTableau compose(const CliffordTableau& t1, const CliffordTableau& t2) {
    if (t1.num_qubits() != t2.num_qubits())
        throw std::invalid_argument("compose: dimension mismatch");
    size_t m = t1.num_qubits();
    CliffordTableau result(m);
    for (size_t q = 0; q < m; q++) {
        result.rows_[q] = t2.conjugate(t1.x_image(q));
        result.rows_[m + q] = t2.conjugate(t1.z_image(q));
    }
    return result;
}

PauliString conjugate(const CliffordTableau& t, const PauliString& p) { return t.conjugate(p); }

bool equal_mod_pauli(const CliffordTableau& t1, const CliffordTableau& t2) {
    if (t1.num_qubits() != t2.num_qubits())
        throw std::invalid_argument("equal_mod_pauli: dimension mismatch");
    for (size_t q = 0; q < t1.num_qubits(); q++) {
        if (t1.x_image(q).x_bits() != t2.x_image(q).x_bits()) return false;
        if (t1.x_image(q).z_bits() != t2.x_image(q).z_bits()) return false;
        if (t1.z_image(q).x_bits() != t2.z_image(q).x_bits()) return false;
        if (t1.z_image(q).z_bits() != t2.z_image(q).z_bits()) return false;
    }
    return true;
}

CliffordTableau inverse(const CliffordTableau& t) {
    size_t m = t.num_qubits();
    // GF(2) inverse of a symplectic matrix is Omega * M^T * Omega.
    BitMat at = t.block_a().transposed();
    BitMat bt = t.block_b().transposed();
    BitMat ct = t.block_c().transposed();
    BitMat dt = t.block_d().transposed();
    CliffordTableau inv = CliffordTableau::from_blocks(dt, bt, ct, at);
    // Fix signs: for each generator E, the GF(2)-inverse row Q satisfies
    // t(Q) = +-E; flipping Q's stored sign by that epsilon makes the
    // composition exactly the identity.
    for (size_t q = 0; q < 2 * m; q++) {
        PauliString& row = inv.rows_[q];
        PauliString image = t.conjugate(row);
        if (image.phase() != 0) row.set_phase(row.phase() ^ image.phase());
    }
    return inv;
}

}  // namespace cliffsim
