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

#ifndef CLIFFSIM_CLIFFORD2_HPP
#define CLIFFSIM_CLIFFORD2_HPP

#include <array>
#include <vector>

#include "cliffsim/tableau.hpp"

namespace cliffsim {

// Permutation of {0..5}.
struct S6Perm {
    std::array<uint8_t, 6> image;

    static S6Perm identity() { return {{0, 1, 2, 3, 4, 5}}; }
    uint8_t operator()(uint8_t i) const { return image[i]; }
    bool is_valid() const;
    bool is_even() const;
    S6Perm inverse() const;
    // Index in 0..719 (Lehmer code); stable enumeration of S6.
    uint16_t rank() const;
    static S6Perm from_rank(uint16_t r);
    bool operator==(const S6Perm& o) const { return image == o.image; }
};

// (p o q)(i) = p(q(i)).
S6Perm s6_compose(const S6Perm& p, const S6Perm& q);

// Two-qubit Clifford operation modulo Paulis: the 4x4 GF(2) symplectic
// matrix packed row-major into 16 bits. Row order X0, X1, Z0, Z1; column
// order x0, x1, z0, z1.
struct C2Coset {
    uint16_t key = 0x8421;  // identity

    bool operator==(const C2Coset& o) const { return key == o.key; }
    bool operator!=(const C2Coset& o) const { return key != o.key; }
    bool operator<(const C2Coset& o) const { return key < o.key; }
};

// The shared enumeration table of C_2 / P_2; built once, then read-only.
class Clifford2 {
   public:
    static const Clifford2& instance();

    // All 720 cosets, sorted by key.
    const std::vector<C2Coset>& cosets() const { return cosets_; }
    size_t index_of(C2Coset u) const;

    static C2Coset identity() { return C2Coset{}; }
    static C2Coset from_tableau(const CliffordTableau& t);
    static C2Coset from_gates(const std::vector<Gate>& gates);
    // Sign-free tableau representative.
    static CliffordTableau to_tableau(C2Coset u);

    // Operator product u * v (v applied first).
    static C2Coset mul(C2Coset u, C2Coset v);
    static C2Coset inverse(C2Coset u);
    // Image of a canonical two-qubit Pauli under conjugation, mod phase.
    static PauliString conj_canonical(C2Coset u, const PauliString& p);

    S6Perm to_s6(C2Coset u) const;
    C2Coset from_s6(const S6Perm& p) const;
    bool is_even(C2Coset u) const { return to_s6(u).is_even(); }

    // The maximal pairwise anti-commuting five-element Pauli sets M_1..M_6,
    // each as canonical strings sorted by bit pattern.
    const std::array<std::array<PauliString, 5>, 6>& m_sets() const { return m_sets_; }

    C2Coset random_coset(Rng& rng) const;
    C2Coset random_even(Rng& rng) const;

    // n cosets, all even, with ordered operator product w[0]*w[1]*...*w[n-1]
    // equal to target: first n-1 uniform even, last the forced completion.
    // Throws if target is odd or n < 2.
    std::vector<C2Coset> random_even_word(size_t n, C2Coset target, Rng& rng) const;

   private:
    Clifford2();

    std::vector<C2Coset> cosets_;
    std::vector<C2Coset> even_;
    std::vector<int32_t> key_to_index_;
    std::vector<uint16_t> s6_of_index_;   // perm rank per coset index
    std::vector<int32_t> index_of_perm_;  // coset index per perm rank
    std::array<std::array<PauliString, 5>, 6> m_sets_;
};

// Product of a coset word in operator order (last letter applied first).
C2Coset c2_word_product(const std::vector<C2Coset>& word);

// Single-qubit Clifford operation modulo Paulis: the 2x2 GF(2) matrix packed
// into 4 bits (row-major, rows X then Z, columns x then z).
struct C1Coset {
    uint8_t key = 0x9;  // identity

    bool operator==(const C1Coset& o) const { return key == o.key; }
    bool operator!=(const C1Coset& o) const { return key != o.key; }
    bool operator<(const C1Coset& o) const { return key < o.key; }
};

// The six-element table of C_1 / P_1.
class Clifford1 {
   public:
    static const Clifford1& instance();

    const std::vector<C1Coset>& cosets() const { return cosets_; }
    size_t index_of(C1Coset u) const;

    static C1Coset identity() { return C1Coset{}; }
    static C1Coset from_tableau(const CliffordTableau& t);
    static C1Coset from_gates(const std::vector<Gate>& gates);
    static CliffordTableau to_tableau(C1Coset u);

    static C1Coset mul(C1Coset u, C1Coset v);  // u * v, v applied first
    static C1Coset inverse(C1Coset u);
    static PauliString conj_canonical(C1Coset u, const PauliString& p);

    C1Coset random_coset(Rng& rng) const { return cosets_[rng.next_below(cosets_.size())]; }

   private:
    Clifford1();
    std::vector<C1Coset> cosets_;
    std::array<int8_t, 16> key_to_index_;
};

C1Coset c1_word_product(const std::vector<C1Coset>& word);

}  // namespace cliffsim

#endif
