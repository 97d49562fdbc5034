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

#include "cliffsim/randomize.hpp"

#include <stdexcept>

#include "cliffsim/contextuality.hpp"

namespace cliffsim {

Perm3 Perm3::from_rank(size_t r) {
    std::array<uint8_t, 3> pool = {0, 1, 2};
    Perm3 out;
    static const size_t kFact[3] = {2, 1, 1};
    for (int i = 0; i < 3; i++) {
        size_t idx = r / kFact[i];
        r %= kFact[i];
        out.image[i] = pool[idx];
        for (size_t j = idx; j + 1 < pool.size() - size_t(i); j++) pool[j] = pool[j + 1];
    }
    return out;
}

size_t Perm3::rank() const {
    size_t r = 0;
    static const size_t kFact[3] = {2, 1, 1};
    for (int i = 0; i < 3; i++) {
        size_t smaller = 0;
        for (int j = i + 1; j < 3; j++)
            if (image[j] < image[i]) smaller++;
        r += smaller * kFact[i];
    }
    return r;
}

Perm3 Perm3::inverse() const {
    Perm3 out;
    for (uint8_t i = 0; i < 3; i++) out.image[image[i]] = i;
    return out;
}

Perm3 perm3_mul(const Perm3& a, const Perm3& b) {
    Perm3 out;
    for (uint8_t i = 0; i < 3; i++) out.image[i] = a.image[b.image[i]];
    return out;
}

Perm3 random_perm3(Rng& rng) { return Perm3::from_rank(rng.next_below(6)); }

C2Coset sample_plus_stabilizing_coset(Rng& rng) {
    BitMat a = BitMat::random_invertible(2, rng);
    BitMat s = BitMat::random_symmetric(2, rng);
    BitMat a_inv_t = a.inverse()->transposed();
    BitMat b = s * a_inv_t;
    CliffordTableau t = CliffordTableau::from_blocks(a, b, BitMat(2, 2), a_inv_t);
    C2Coset v = Clifford2::from_tableau(t);
    // Move from the |00> frame to the |++> frame.
    C2Coset hh = Clifford2::from_gates({Gate::h(0), Gate::h(1)});
    return Clifford2::mul(Clifford2::mul(hh, v), hh);
}

namespace {

std::vector<C2Coset> append_plus_stabilizer(const std::vector<C2Coset>& word, Rng& rng) {
    if (word.empty()) throw std::invalid_argument("algorithm_c: empty word");
    std::vector<C2Coset> out = word;
    out.back() = Clifford2::mul(out.back(), sample_plus_stabilizing_coset(rng));
    return out;
}

C2Coset sample_c2(Rng& rng) { return Clifford2::instance().random_coset(rng); }

}  // namespace

PauliString algorithm_c_nc1(
    const std::function<PauliString(const std::vector<C2Coset>&, Rng&)>& inner_a,
    const std::vector<C2Coset>& word, Rng& rng) {
    std::vector<C2Coset> appended = append_plus_stabilizer(word, rng);
    return algorithm_b<C2Coset, PauliString>(
        appended, [](C2Coset a, C2Coset b) { return Clifford2::mul(a, b); },
        [](C2Coset a) { return Clifford2::inverse(a); }, sample_c2, sample_c2,
        [](C2Coset u, const PauliString& p) { return Clifford2::conj_canonical(u, p); }, inner_a,
        rng);
}

PauliLine conjugate_line(C2Coset u, const PauliLine& line) {
    PauliLine out;
    for (int k = 0; k < 3; k++) out.paulis[k] = Clifford2::conj_canonical(u, line.paulis[k]);
    std::sort(out.paulis.begin(), out.paulis.end());
    PauliString acc = PauliString::identity(2);
    for (const auto& p : out.paulis) acc = pauli_mul(acc, p.positive_rep());
    out.sign = acc.sign_bit() ? -1 : 1;
    return out;
}

PauliLine algorithm_c_nc1_line(
    const std::function<PauliLine(const std::vector<C2Coset>&, Rng&)>& inner_a,
    const std::vector<C2Coset>& word, Rng& rng) {
    std::vector<C2Coset> appended = append_plus_stabilizer(word, rng);
    return algorithm_b<C2Coset, PauliLine>(
        appended, [](C2Coset a, C2Coset b) { return Clifford2::mul(a, b); },
        [](C2Coset a) { return Clifford2::inverse(a); }, sample_c2, sample_c2,
        [](C2Coset u, const PauliLine& line) { return conjugate_line(u, line); }, inner_a, rng);
}

PauliString algorithm_c_parityl(
    const std::function<PauliString(const std::vector<GmLetter>&, Rng&)>& inner_a,
    const std::vector<CnotLetter>& cnot_word, const HmElement& f, size_t m, Rng& rng) {
    for (const auto& g : cnot_word)
        if (!cnot_letter_valid(g, m))
            throw std::invalid_argument("algorithm_c_parityl: bad CNOT letter");
    std::vector<GmLetter> word;
    word.reserve(2 * cnot_word.size() + 1);
    for (const auto& g : cnot_word) word.push_back(GmLetter::from_cnot(g, m));
    word.push_back(GmLetter::from_hm(f));
    for (auto it = cnot_word.rbegin(); it != cnot_word.rend(); ++it)
        word.push_back(GmLetter::from_cnot(*it, m));
    auto sample_h = [m](Rng& r) { return GmLetter::from_hm(HmElement::random(m, r)); };
    auto sample_f = [m](Rng& r) { return GmLetter::from_hm(sample_h3_even(m, r)); };
    auto action = [](const GmLetter& u, const PauliString& p) {
        return u.to_tableau().conjugate(p).canonical_rep();
    };
    return algorithm_b<GmLetter, PauliString>(word, gm_mul, gm_inverse, sample_h, sample_f, action,
                                              inner_a, rng);
}

}  // namespace cliffsim
