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

#ifndef CLIFFSIM_PAULI_HPP
#define CLIFFSIM_PAULI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "cliffsim/gf2.hpp"

namespace cliffsim {

// Element of the m-qubit Pauli group.
//
// The stored operator is i^phase * X^x * Z^z (all X factors left of all Z
// factors). A qubit carries letter X, Y, Z or I according to its (x, z) bits
// being (1,0), (1,1), (0,1) or (0,0); the literal Pauli matrix Y equals
// i*X*Z, so "+Y" is stored as x = z = 1 with phase 1. In general the literal
// string with letters read off the bits equals i^y * X^x * Z^z where y is
// the number of Y letters, an offset handled once here and nowhere else.
// m = 0 is permitted; the element is then just a phase.
class PauliString {
   public:
    PauliString() : PauliString(0) {}
    explicit PauliString(size_t m) : x_(m), z_(m), phase_(0) {}
    PauliString(BitVec x, BitVec z, uint8_t phase);

    static PauliString identity(size_t m) { return PauliString(m); }
    // Single-letter string, equal to the literal matrix: single(m, q, 'Y')
    // stores phase 1.
    static PauliString single(size_t m, size_t q, char letter);
    // Literal string from letters, e.g. from_letters("XYI").
    static PauliString from_letters(const std::string& letters);

    size_t num_qubits() const { return x_.size(); }
    const BitVec& x_bits() const { return x_; }
    const BitVec& z_bits() const { return z_; }
    uint8_t phase() const { return phase_; }
    void set_phase(uint8_t p) { phase_ = p & 3; }

    char letter(size_t q) const;
    // Overwrites the letter at q, keeping the stored operator equal to the
    // literal string built so far (adjusts the Y phase offset).
    void set_letter(size_t q, char letter);

    bool is_identity_string() const { return !x_.any() && !z_.any(); }

    // Number of Y letters, i.e. the i-offset between literal and XZ form.
    uint32_t y_count() const;

    // Same bits, phase forced to 0; the coset representative mod phases.
    PauliString canonical_rep() const {
        PauliString p = *this;
        p.phase_ = 0;
        return p;
    }
    // The Hermitian literal operator +L for these bits (phase = y_count).
    PauliString positive_rep() const {
        PauliString p = *this;
        p.phase_ = p.y_count() & 3;
        return p;
    }
    // For +-Hermitian elements: 0 if +L, 1 if -L. Throws on imaginary phase.
    uint8_t sign_bit() const;

    bool operator==(const PauliString& o) const {
        return phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
    }
    bool operator!=(const PauliString& o) const { return !(*this == o); }
    bool operator<(const PauliString& o) const;
    bool same_string(const PauliString& o) const { return x_ == o.x_ && z_ == o.z_; }

    // Textual form: optional leading "+", "-", "+i", "-i", then one letter
    // per qubit, qubit 0 leftmost. E.g. "-iXZY".
    std::string str() const;
    static std::optional<PauliString> parse(const std::string& text);

    friend PauliString pauli_mul(const PauliString& a, const PauliString& b);
    friend bool commutes(const PauliString& a, const PauliString& b);

   private:
    BitVec x_, z_;
    uint8_t phase_;  // exponent of i, mod 4
};

// Exact group product a*b with full phase tracking.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

// True iff a and b commute; phase-independent.
bool commutes(const PauliString& a, const PauliString& b);

inline PauliString canonical_rep(const PauliString& a) { return a.canonical_rep(); }

}  // namespace cliffsim

#endif
