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

#ifndef CLIFFSIM_HARDNESS_HPP
#define CLIFFSIM_HARDNESS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "cliffsim/clifford2.hpp"
#include "cliffsim/hm_group.hpp"

namespace cliffsim {

// Word of one-hot CNOT letters (identity allowed) on m wires. The product
// is word[0] * word[1] * ... * word[n-1] as column-convention GF(2)
// matrices, i.e. the last letter acts on vectors first.
struct CnotWord {
    size_t m = 0;
    std::vector<CnotLetter> letters;

    bool valid() const;
    // Header (kind, n, m, seed) then one letter per line: "c t" or "id".
    std::string to_text(const std::string& kind, uint64_t seed) const;
    static std::optional<CnotWord> from_text(const std::string& text, std::string* kind_out = nullptr);
};

// Full GF(2) product of the word; ground truth for extraction experiments.
BitMat reference_solver(const CnotWord& w);

// Layered DAG with n+1 layers of m nodes; adjacency[k](u, v) = 1 iff there
// is an edge from node u of layer k to node v of layer k+1.
struct LayeredDag {
    size_t m = 0;
    std::vector<BitMat> adjacency;

    size_t layers() const { return adjacency.size() + 1; }
    static LayeredDag random(size_t m, size_t n, Rng& rng);
};

// Parity of the number of source-to-target paths, source in the first layer
// and target in the last.
uint8_t ldag_path_parity(const LayeredDag& d, size_t source, size_t target);

// Exhaustive path enumeration (test oracle); throws beyond the path cap.
uint64_t ldag_count_paths(const LayeredDag& d, size_t source, size_t target,
                          uint64_t cap = 100000000);

// Builds the unit upper-triangular block matrix of the DAG, decomposes it
// into CNOT letters, and reverses the sequence so the word realizes its
// inverse; the top-right entry of the product equals
// ldag_path_parity(d, 0, m-1).
CnotWord ldag_to_cnotword(const LayeredDag& d);

// Word decomposition of an arbitrary unit upper-triangular matrix.
CnotWord unit_upper_triangular_to_word(const BitMat& a);

// The fixed three-cycle on wires 0,1,2 (0 -> 1 -> 2 -> 0) of m wires.
BitMat three_cycle_matrix(size_t m);
// A fixed CNOT word for the three-cycle.
std::vector<CnotLetter> three_cycle_word(size_t m);

// Cycle-promise construction: emits a word on w.m + 3 wires whose product is
// the three-cycle on the first three wires iff the top-right entry of w's
// product is 1, and the identity otherwise. Input wires are shifted up by 3.
CnotWord cnotword_to_cycle_promise(const CnotWord& w);

enum class CyclePromiseKind { Identity, C3 };

// Random instance with the declared product: a random word folded with its
// own inverse, optionally composed with the fixed three-cycle factorization,
// padded with identity letters to length n. Requires m >= 3.
CnotWord gen_promise_instance(CyclePromiseKind kind, size_t n, size_t m, Rng& rng);

enum class S6PromiseKind { II, HH };

// Even two-qubit coset word with product II or H (x) H.
std::vector<C2Coset> gen_s6_promise_instance(S6PromiseKind kind, size_t n, Rng& rng);

}  // namespace cliffsim

#endif
