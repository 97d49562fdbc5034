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

#include "cliffsim/clifford2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cliffsim {

namespace {

// Standard 4x4 GF(2) product of row-major packed matrices: (PQ)[r] is the
// xor of Q's rows selected by P's row r.
uint16_t mat16_mul(uint16_t p, uint16_t q) {
    uint16_t out = 0;
    for (int r = 0; r < 4; r++) {
        uint16_t row = 0;
        uint16_t prow = (p >> (4 * r)) & 0xf;
        for (int k = 0; k < 4; k++)
            if ((prow >> k) & 1) row ^= (q >> (4 * k)) & 0xf;
        out |= row << (4 * r);
    }
    return out;
}

uint16_t mat16_transpose(uint16_t p) {
    uint16_t out = 0;
    for (int r = 0; r < 4; r++)
        for (int c = 0; c < 4; c++)
            if ((p >> (4 * r + c)) & 1) out |= uint16_t(1) << (4 * c + r);
    return out;
}

// Omega * M^T * Omega with Omega = [[0,I],[I,0]] swaps the 2x2 block
// quadrants of M^T; this is the symplectic inverse.
uint16_t mat16_symplectic_inverse(uint16_t p) {
    uint16_t t = mat16_transpose(p);
    // Swap rows 0,1 <-> 2,3 and columns 0,1 <-> 2,3.
    uint16_t rowswapped = uint16_t((t >> 8) | (t << 8));
    uint16_t out = 0;
    for (int r = 0; r < 4; r++) {
        uint16_t row = (rowswapped >> (4 * r)) & 0xf;
        uint16_t newrow = uint16_t(((row >> 2) | (row << 2)) & 0xf);
        out |= newrow << (4 * r);
    }
    return out;
}

PauliString canon2(const char* letters) { return PauliString::from_letters(letters).canonical_rep(); }

}  // namespace

bool S6Perm::is_valid() const {
    uint8_t seen = 0;
    for (uint8_t v : image) {
        if (v >= 6) return false;
        seen |= uint8_t(1 << v);
    }
    return seen == 0x3f;
}

bool S6Perm::is_even() const {
    int inversions = 0;
    for (int i = 0; i < 6; i++)
        for (int j = i + 1; j < 6; j++)
            if (image[i] > image[j]) inversions++;
    return (inversions & 1) == 0;
}

S6Perm S6Perm::inverse() const {
    S6Perm out{};
    for (uint8_t i = 0; i < 6; i++) out.image[image[i]] = i;
    return out;
}

uint16_t S6Perm::rank() const {
    uint16_t r = 0;
    for (int i = 0; i < 6; i++) {
        int smaller = 0;
        for (int j = i + 1; j < 6; j++)
            if (image[j] < image[i]) smaller++;
        static const int kFact[6] = {120, 24, 6, 2, 1, 1};
        r += uint16_t(smaller * kFact[i]);
    }
    return r;
}

S6Perm S6Perm::from_rank(uint16_t r) {
    std::array<uint8_t, 6> pool = {0, 1, 2, 3, 4, 5};
    S6Perm out{};
    static const int kFact[6] = {120, 24, 6, 2, 1, 1};
    for (int i = 0; i < 6; i++) {
        int idx = r / kFact[i];
        r = uint16_t(r % kFact[i]);
        out.image[i] = pool[idx];
        for (int j = idx; j < 5 - i; j++) pool[j] = pool[j + 1];
    }
    return out;
}

S6Perm s6_compose(const S6Perm& p, const S6Perm& q) {
    S6Perm out{};
    for (uint8_t i = 0; i < 6; i++) out.image[i] = p.image[q.image[i]];
    return out;
}

const Clifford2& Clifford2::instance() {
    static const Clifford2 table;
    return table;
}

C2Coset Clifford2::from_tableau(const CliffordTableau& t) {
    if (t.num_qubits() != 2) throw std::invalid_argument("C2Coset: need a 2-qubit tableau");
    uint16_t key = 0;
    BitMat m = t.matrix();
    for (int r = 0; r < 4; r++)
        for (int c = 0; c < 4; c++)
            if (m.get(r, c)) key |= uint16_t(1) << (4 * r + c);
    return C2Coset{key};
}

C2Coset Clifford2::from_gates(const std::vector<Gate>& gates) {
    return from_tableau(CliffordTableau::from_gates(2, gates));
}

CliffordTableau Clifford2::to_tableau(C2Coset u) {
    BitMat a(2, 2), b(2, 2), c(2, 2), d(2, 2);
    for (int r = 0; r < 4; r++) {
        for (int col = 0; col < 4; col++) {
            bool bit = (u.key >> (4 * r + col)) & 1;
            BitMat& block = r < 2 ? (col < 2 ? a : b) : (col < 2 ? c : d);
            block.set(r % 2, col % 2, bit);
        }
    }
    return CliffordTableau::from_blocks(a, b, c, d);
}

C2Coset Clifford2::mul(C2Coset u, C2Coset v) {
    // Operator product u*v applies v first; tableau matrices compose as
    // M_v * M_u in the row-vector convention.
    return C2Coset{mat16_mul(v.key, u.key)};
}

C2Coset Clifford2::inverse(C2Coset u) { return C2Coset{mat16_symplectic_inverse(u.key)}; }

PauliString Clifford2::conj_canonical(C2Coset u, const PauliString& p) {
    if (p.num_qubits() != 2) throw std::invalid_argument("conj_canonical: need 2 qubits");
    uint16_t v = 0;
    if (p.x_bits().get(0)) v |= 1;
    if (p.x_bits().get(1)) v |= 2;
    if (p.z_bits().get(0)) v |= 4;
    if (p.z_bits().get(1)) v |= 8;
    uint16_t out = 0;
    for (int k = 0; k < 4; k++)
        if ((v >> k) & 1) out ^= (u.key >> (4 * k)) & 0xf;
    BitVec x(2), z(2);
    x.set(0, out & 1);
    x.set(1, (out >> 1) & 1);
    z.set(0, (out >> 2) & 1);
    z.set(1, (out >> 3) & 1);
    return PauliString(x, z, 0);
}

Clifford2::Clifford2() {
    // Closure of the generating gates, mod Pauli.
    std::vector<C2Coset> gens = {
        from_gates({Gate::h(0)}),       from_gates({Gate::h(1)}),
        from_gates({Gate::rz(0)}),      from_gates({Gate::rz(1)}),
        from_gates({Gate::cnot(0, 1)}), from_gates({Gate::cz(0, 1)}),
        from_gates({Gate::swap(0, 1)}),
    };
    std::set<uint16_t> seen = {identity().key};
    std::vector<C2Coset> frontier = {identity()};
    while (!frontier.empty()) {
        C2Coset u = frontier.back();
        frontier.pop_back();
        for (C2Coset g : gens) {
            C2Coset next = mul(g, u);
            if (seen.insert(next.key).second) frontier.push_back(next);
        }
    }
    cosets_.reserve(seen.size());
    for (uint16_t key : seen) cosets_.push_back(C2Coset{key});
    std::sort(cosets_.begin(), cosets_.end());
    key_to_index_.assign(1 << 16, -1);
    for (size_t i = 0; i < cosets_.size(); i++) key_to_index_[cosets_[i].key] = int32_t(i);

    m_sets_ = {{
        {canon2("XI"), canon2("YI"), canon2("ZX"), canon2("ZY"), canon2("ZZ")},
        {canon2("XI"), canon2("ZI"), canon2("YX"), canon2("YY"), canon2("YZ")},
        {canon2("YI"), canon2("ZI"), canon2("XX"), canon2("XY"), canon2("XZ")},
        {canon2("IX"), canon2("IY"), canon2("XZ"), canon2("YZ"), canon2("ZZ")},
        {canon2("IX"), canon2("IZ"), canon2("XY"), canon2("YY"), canon2("ZY")},
        {canon2("IY"), canon2("IZ"), canon2("XX"), canon2("YX"), canon2("ZX")},
    }};
    for (auto& mset : m_sets_) std::sort(mset.begin(), mset.end());

    s6_of_index_.assign(cosets_.size(), 0);
    index_of_perm_.assign(720, -1);
    for (size_t i = 0; i < cosets_.size(); i++) {
        S6Perm p = to_s6(cosets_[i]);
        s6_of_index_[i] = p.rank();
        index_of_perm_[p.rank()] = int32_t(i);
    }
    for (C2Coset u : cosets_)
        if (is_even(u)) even_.push_back(u);
}

size_t Clifford2::index_of(C2Coset u) const {
    int32_t idx = key_to_index_[u.key];
    if (idx < 0) throw std::invalid_argument("index_of: not a symplectic coset key");
    return size_t(idx);
}

S6Perm Clifford2::to_s6(C2Coset u) const {
    S6Perm out{};
    for (int i = 0; i < 6; i++) {
        std::array<PauliString, 5> image;
        for (int k = 0; k < 5; k++) image[k] = conj_canonical(u, m_sets_[i][k]);
        std::sort(image.begin(), image.end());
        int target = -1;
        for (int j = 0; j < 6; j++) {
            if (image == m_sets_[j]) {
                target = j;
                break;
            }
        }
        if (target < 0) throw std::logic_error("to_s6: conjugation does not permute the M-sets");
        out.image[i] = uint8_t(target);
    }
    if (!out.is_valid()) throw std::logic_error("to_s6: image is not a permutation");
    return out;
}

C2Coset Clifford2::from_s6(const S6Perm& p) const {
    if (!p.is_valid()) throw std::invalid_argument("from_s6: not a permutation");
    int32_t idx = index_of_perm_[p.rank()];
    if (idx < 0) throw std::logic_error("from_s6: permutation missing from enumeration");
    return cosets_[size_t(idx)];
}

C2Coset Clifford2::random_coset(Rng& rng) const { return cosets_[rng.next_below(cosets_.size())]; }

C2Coset Clifford2::random_even(Rng& rng) const { return even_[rng.next_below(even_.size())]; }

std::vector<C2Coset> Clifford2::random_even_word(size_t n, C2Coset target, Rng& rng) const {
    if (n < 2) throw std::invalid_argument("random_even_word: need n >= 2");
    if (!is_even(target)) throw std::invalid_argument("random_even_word: target must be even");
    std::vector<C2Coset> word(n);
    C2Coset prefix = identity();
    for (size_t i = 0; i + 1 < n; i++) {
        word[i] = random_even(rng);
        prefix = mul(prefix, word[i]);
    }
    word[n - 1] = mul(inverse(prefix), target);
    return word;
}

C2Coset c2_word_product(const std::vector<C2Coset>& word) {
    C2Coset acc = Clifford2::identity();
    for (C2Coset u : word) acc = Clifford2::mul(acc, u);
    return acc;
}

namespace {

uint8_t mat4_mul(uint8_t p, uint8_t q) {
    uint8_t out = 0;
    for (int r = 0; r < 2; r++) {
        uint8_t row = 0;
        uint8_t prow = (p >> (2 * r)) & 0x3;
        for (int k = 0; k < 2; k++)
            if ((prow >> k) & 1) row ^= (q >> (2 * k)) & 0x3;
        out |= row << (2 * r);
    }
    return out;
}

}  // namespace

const Clifford1& Clifford1::instance() {
    static const Clifford1 table;
    return table;
}

Clifford1::Clifford1() {
    key_to_index_.fill(-1);
    std::set<uint8_t> seen = {identity().key};
    std::vector<C1Coset> frontier = {identity()};
    while (!frontier.empty()) {
        C1Coset u = frontier.back();
        frontier.pop_back();
        for (const Gate& g : {Gate::h(0), Gate::rz(0)}) {
            C1Coset next = mul(from_gates({g}), u);
            if (seen.insert(next.key).second) frontier.push_back(next);
        }
    }
    for (uint8_t key : seen) cosets_.push_back(C1Coset{key});
    std::sort(cosets_.begin(), cosets_.end());
    for (size_t i = 0; i < cosets_.size(); i++) key_to_index_[cosets_[i].key] = int8_t(i);
}

size_t Clifford1::index_of(C1Coset u) const {
    int8_t idx = key_to_index_[u.key & 0xf];
    if (idx < 0) throw std::invalid_argument("Clifford1::index_of: bad key");
    return size_t(idx);
}

C1Coset Clifford1::from_tableau(const CliffordTableau& t) {
    if (t.num_qubits() != 1) throw std::invalid_argument("C1Coset: need a 1-qubit tableau");
    uint8_t key = 0;
    if (t.x_image(0).x_bits().get(0)) key |= 1;
    if (t.x_image(0).z_bits().get(0)) key |= 2;
    if (t.z_image(0).x_bits().get(0)) key |= 4;
    if (t.z_image(0).z_bits().get(0)) key |= 8;
    return C1Coset{key};
}

C1Coset Clifford1::from_gates(const std::vector<Gate>& gates) {
    return from_tableau(CliffordTableau::from_gates(1, gates));
}

CliffordTableau Clifford1::to_tableau(C1Coset u) {
    BitMat a(1, 1), b(1, 1), c(1, 1), d(1, 1);
    a.set(0, 0, u.key & 1);
    b.set(0, 0, (u.key >> 1) & 1);
    c.set(0, 0, (u.key >> 2) & 1);
    d.set(0, 0, (u.key >> 3) & 1);
    return CliffordTableau::from_blocks(a, b, c, d);
}

C1Coset Clifford1::mul(C1Coset u, C1Coset v) { return C1Coset{mat4_mul(v.key, u.key)}; }

C1Coset Clifford1::inverse(C1Coset u) {
    // 2x2 symplectic inverse: swap the diagonal blocks (scalars here).
    uint8_t a = u.key & 1, b = (u.key >> 1) & 1, c = (u.key >> 2) & 1, d = (u.key >> 3) & 1;
    return C1Coset{uint8_t(d | (b << 1) | (c << 2) | (a << 3))};
}

PauliString Clifford1::conj_canonical(C1Coset u, const PauliString& p) {
    if (p.num_qubits() != 1) throw std::invalid_argument("conj_canonical: need 1 qubit");
    uint8_t v = (p.x_bits().get(0) ? 1 : 0) | (p.z_bits().get(0) ? 2 : 0);
    uint8_t out = 0;
    for (int k = 0; k < 2; k++)
        if ((v >> k) & 1) out ^= (u.key >> (2 * k)) & 0x3;
    BitVec x(1), z(1);
    x.set(0, out & 1);
    z.set(0, (out >> 1) & 1);
    return PauliString(x, z, 0);
}

C1Coset c1_word_product(const std::vector<C1Coset>& word) {
    C1Coset acc = Clifford1::identity();
    for (C1Coset u : word) acc = Clifford1::mul(acc, u);
    return acc;
}

}  // namespace cliffsim
