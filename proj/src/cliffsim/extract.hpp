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

#ifndef CLIFFSIM_EXTRACT_HPP
#define CLIFFSIM_EXTRACT_HPP

#include "cliffsim/protocol.hpp"
#include "cliffsim/randomize.hpp"

namespace cliffsim {

struct ExtractionStats {
    size_t sessions = 0;       // round-1 oracle calls
    size_t round2_queries = 0; // rewound round-2 oracle calls
};

enum class NC1Verdict { II, HH, Unknown };
enum class ParityLVerdict { Identity, C3 };

// Narrow-problem extraction: collects randomized non-stabilizers until the
// twelve non-stabilizers of one candidate state have all been seen;
// certain verdicts only, otherwise Unknown. Runs at most
// confidence * ceil(log2(n)) algorithm-C calls.
NC1Verdict extract_nc1(const ProverFactory& factory, const std::vector<C2Coset>& word,
                       size_t confidence, uint64_t seed, ExtractionStats* stats = nullptr);

// Error-tolerant variant: majority-voted Pauli-line statistics identify the
// all-stabilizer line even under a round-2 fault rate epsilon < 2/75.
NC1Verdict extract_nc1_tolerant(const ProverFactory& factory, const std::vector<C2Coset>& word,
                                double epsilon, uint64_t seed, ExtractionStats* stats = nullptr,
                                size_t samples_override = 0);

// Wide-problem extraction with one-sided error: never answers Identity on a
// three-cycle instance; step 2 draws `confidence` samples.
ParityLVerdict extract_parityl(const ProverFactory& factory, const CnotWord& word,
                               size_t confidence, uint64_t seed,
                               ExtractionStats* stats = nullptr);

// Line-problem extraction: the product state of the two halves, modulo
// Pauli, reported as the stabilizer letter per side ('X' for a |+> class).
struct Ac0Result {
    char left = '?';
    char right = '?';
    bool known = false;
};
Ac0Result extract_ac0mod6(const ProverFactory& factory, const std::vector<C1Coset>& left_word,
                          const std::vector<C1Coset>& right_word, size_t confidence, uint64_t seed,
                          ExtractionStats* stats = nullptr);

// Reference answer for the line problem (tableau oracle).
Ac0Result ac0_reference(const std::vector<C1Coset>& left_word,
                        const std::vector<C1Coset>& right_word);

// The quantum permutation tableau of the fixed three-cycle (qubit q -> q+1
// mod 3 on the first three of m qubits).
CliffordTableau three_cycle_tableau(size_t m);

// First element of H_3^(+) whose twisted conjugate maps p to a stabilizer
// of |+...+>; exists for every p in the pentagram orbit (the table-driven
// step-2 distinguisher).
HmElement parityl_distinguisher(const PauliString& p);

}  // namespace cliffsim

#endif
