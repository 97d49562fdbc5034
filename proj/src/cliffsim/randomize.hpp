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

#ifndef CLIFFSIM_RANDOMIZE_HPP
#define CLIFFSIM_RANDOMIZE_HPP

#include <array>
#include <functional>

#include "cliffsim/clifford2.hpp"
#include "cliffsim/contextuality.hpp"
#include "cliffsim/hm_group.hpp"

namespace cliffsim {

// Kilian randomization over a normal subgroup H of G: returns a uniformly
// random word with the same product and the same per-letter H-cosets,
//   (g_1 h_1, h_1^-1 g_2 h_2, ..., h_{n-1}^-1 g_n).
// The group interface is abstract: mul(a, b) is the operator product,
// inv(h) inverts subgroup elements, sample_h draws uniform elements of H.
// Serves the C2/P2, S3 and G_m/H_m instantiations alike.
template <typename Elem, typename Mul, typename Inv, typename SampleH>
std::vector<Elem> kilian(const std::vector<Elem>& word, Mul mul, Inv inv, SampleH sample_h,
                         Rng& rng) {
    if (word.empty()) throw std::invalid_argument("kilian: empty word rejected");
    size_t n = word.size();
    std::vector<Elem> out = word;
    if (n == 1) return out;
    Elem prev_h = sample_h(rng);
    out[0] = mul(word[0], prev_h);
    for (size_t i = 1; i + 1 < n; i++) {
        Elem h = sample_h(rng);
        out[i] = mul(inv(prev_h), mul(word[i], h));
        prev_h = h;
    }
    out[n - 1] = mul(inv(prev_h), word[n - 1]);
    return out;
}

// Permutation of {0,1,2}; the S3 instantiation used by the Kilian
// uniformity checks.
struct Perm3 {
    std::array<uint8_t, 3> image = {0, 1, 2};

    static Perm3 identity() { return {}; }
    static Perm3 from_rank(size_t r);
    size_t rank() const;
    Perm3 inverse() const;
    bool operator==(const Perm3& o) const { return image == o.image; }
};

Perm3 perm3_mul(const Perm3& a, const Perm3& b);  // (a o b)(i) = a(b(i))
Perm3 random_perm3(Rng& rng);

// Theorem-style self-reduction: samples f in F, Kilian-randomizes
// (f g_1, g_2, ..., g_n) over H, and returns f^-1 . A(randomized word).
// `action` is the group action on the result set S.
template <typename Elem, typename Out, typename Mul, typename Inv, typename SampleH,
          typename SampleF, typename Action, typename Inner>
Out algorithm_b(const std::vector<Elem>& word, Mul mul, Inv inv, SampleH sample_h,
                SampleF sample_f, Action action, Inner inner_a, Rng& rng) {
    if (word.empty()) throw std::invalid_argument("algorithm_b: empty word rejected");
    Elem f = sample_f(rng);
    std::vector<Elem> shifted = word;
    shifted[0] = mul(f, word[0]);
    std::vector<Elem> randomized = kilian(shifted, mul, inv, sample_h, rng);
    Out raw = inner_a(randomized, rng);
    return action(inv(f), raw);
}

// Uniformly random two-qubit Clifford coset fixing |++> modulo Paulis:
// sampled in the |00> frame as blocks [[A, SA^-T], [0, A^-T]] with A
// invertible and S symmetric, then conjugated by H (x) H.
C2Coset sample_plus_stabilizing_coset(Rng& rng);

// Algorithm C for the two-qubit extraction: appends a random |++> stabilizer
// to the word's last letter, then runs algorithm B with G = H = F = C2/P2
// acting on canonical Paulis by conjugation.
PauliString algorithm_c_nc1(
    const std::function<PauliString(const std::vector<C2Coset>&, Rng&)>& inner_a,
    const std::vector<C2Coset>& word, Rng& rng);

// Same wrapper returning a Pauli line (error-tolerant variant).
PauliLine algorithm_c_nc1_line(
    const std::function<PauliLine(const std::vector<C2Coset>&, Rng&)>& inner_a,
    const std::vector<C2Coset>& word, Rng& rng);

// Conjugate a line member-wise (set-level group action used above).
PauliLine conjugate_line(C2Coset u, const PauliLine& line);

// Algorithm C for the wide extraction: runs algorithm B with F = H_3^(+),
// H = H_m, G = G_m on the palindromic word (g_1..g_n, f, g_n..g_1). The
// letters of `cnot_word` must be self-inverse CNOT letters.
PauliString algorithm_c_parityl(
    const std::function<PauliString(const std::vector<GmLetter>&, Rng&)>& inner_a,
    const std::vector<CnotLetter>& cnot_word, const HmElement& f, size_t m, Rng& rng);

}  // namespace cliffsim

#endif
