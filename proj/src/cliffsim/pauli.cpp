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

#include "cliffsim/pauli.hpp"

#include <stdexcept>

namespace cliffsim {

PauliString::PauliString(BitVec x, BitVec z, uint8_t phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {
    if (x_.size() != z_.size()) throw std::invalid_argument("PauliString: x/z length mismatch");
}

PauliString PauliString::single(size_t m, size_t q, char letter) {
    PauliString p(m);
    p.set_letter(q, letter);
    return p;
}

PauliString PauliString::from_letters(const std::string& letters) {
    PauliString p(letters.size());
    for (size_t q = 0; q < letters.size(); q++) p.set_letter(q, letters[q]);
    return p;
}

char PauliString::letter(size_t q) const {
    bool x = x_.get(q), z = z_.get(q);
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

void PauliString::set_letter(size_t q, char letter) {
    if (x_.get(q) && z_.get(q)) phase_ = (phase_ + 3) & 3;  // remove old Y offset
    switch (letter) {
        case 'I': x_.set(q, false); z_.set(q, false); break;
        case 'X': x_.set(q, true); z_.set(q, false); break;
        case 'Y': x_.set(q, true); z_.set(q, true); phase_ = (phase_ + 1) & 3; break;
        case 'Z': x_.set(q, false); z_.set(q, true); break;
        default: throw std::invalid_argument("PauliString: bad letter");
    }
}

uint32_t PauliString::y_count() const {
    uint32_t y = 0;
    for (size_t k = 0; k < x_.words().size(); k++)
        y += std::popcount(x_.words()[k] & z_.words()[k]);
    return y;
}

uint8_t PauliString::sign_bit() const {
    uint8_t diff = (phase_ - y_count()) & 3;
    if (diff & 1) throw std::logic_error("PauliString: imaginary phase has no sign bit");
    return diff >> 1;
}

bool PauliString::operator<(const PauliString& o) const {
    if (x_ != o.x_) return x_ < o.x_;
    if (z_ != o.z_) return z_ < o.z_;
    return phase_ < o.phase_;
}

std::string PauliString::str() const {
    static const char* kPhase[4] = {"+", "+i", "-", "-i"};
    std::string s = kPhase[(phase_ - y_count()) & 3];
    for (size_t q = 0; q < num_qubits(); q++) s += letter(q);
    return s;
}

std::optional<PauliString> PauliString::parse(const std::string& text) {
    size_t i = 0;
    uint8_t phase = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') phase = 2;
        i++;
        if (i < text.size() && text[i] == 'i') {
            phase = (phase + 1) & 3;
            i++;
        }
    }
    PauliString p(text.size() - i);
    for (size_t q = 0; i < text.size(); q++, i++) {
        char c = text[i];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') return std::nullopt;
        p.set_letter(q, c);
    }
    p.set_phase((p.phase() + phase) & 3);
    return p;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("pauli_mul: dimension mismatch");
    PauliString out(a.num_qubits());
    // (i^k1 X^a1 Z^b1)(i^k2 X^a2 Z^b2): commuting Z^b1 past X^a2 costs
    // (-1)^<b1,a2>.
    uint32_t cross = 0;
    size_t words = a.x_.words().size();
    for (size_t k = 0; k < words; k++) {
        cross += std::popcount(a.z_.words()[k] & b.x_.words()[k]);
        out.x_.words()[k] = a.x_.words()[k] ^ b.x_.words()[k];
        out.z_.words()[k] = a.z_.words()[k] ^ b.z_.words()[k];
    }
    out.phase_ = (a.phase_ + b.phase_ + 2 * (cross & 1)) & 3;
    return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("commutes: dimension mismatch");
    return !(a.x_.dot(b.z_) ^ a.z_.dot(b.x_));
}

}  // namespace cliffsim
