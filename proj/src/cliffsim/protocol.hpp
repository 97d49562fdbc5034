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

#ifndef CLIFFSIM_PROTOCOL_HPP
#define CLIFFSIM_PROTOCOL_HPP

#include <memory>

#include "cliffsim/contextuality.hpp"
#include "cliffsim/hardness.hpp"
#include "cliffsim/layout.hpp"

namespace cliffsim {

enum class ProblemKind { Narrow, Line, Wide };

// A two-round interactive instance. Narrow and Wide use a single columnar
// layout whose columns split into round-1 and round-2 regions (the round-2
// region ends with the output column, which is also measured in round 2).
// Line uses two one-row half layouts joined output-to-output by one edge;
// round 2 applies a two-qubit Clifford to the middles and measures X.
struct ProblemInstance {
    ProblemKind kind = ProblemKind::Narrow;
    MeasurementLayout layout;        // narrow / wide
    MeasurementLayout left, right;   // line halves

    size_t round1_qubits() const;
    size_t round2_qubits() const;
};

// Basis matrix for one round: column-major bit vectors, entry (row, col)
// = 1 for a Y measurement. For the line kind, round 1 carries the left then
// the right half's columns and round 2 carries the middle Clifford.
struct Challenge {
    std::vector<BitVec> bases;
    std::optional<C2Coset> line_c2;
};

struct Transcript {
    Challenge round1;
    std::vector<uint8_t> outcomes1;
    Challenge round2;
    std::vector<uint8_t> outcomes2;
    bool has_round2 = false;
};

// One interactive session. round2 may only be called after round1. Classical
// provers support snapshotting (the basis of the rewind oracle); a prover
// modelling a genuine quantum device refuses it.
class ProverHandle {
   public:
    virtual ~ProverHandle() = default;
    virtual std::vector<uint8_t> round1(const Challenge& challenge) = 0;
    virtual std::vector<uint8_t> round2(const Challenge& challenge) = 0;
    virtual bool supports_snapshot() const = 0;
    virtual std::unique_ptr<ProverHandle> snapshot() const = 0;
};

using ProverFactory = std::function<std::unique_ptr<ProverHandle>(const ProblemInstance&, uint64_t seed)>;

// Stabilizer-simulation prover answering from the true conditional quantum
// distribution. Being a classical simulation, its state is copyable.
std::unique_ptr<ProverHandle> honest_prover(const ProblemInstance& instance, uint64_t seed);

// Same sampling rule, but snapshot() throws: models the physical device the
// protocol is about, which cannot be rewound.
std::unique_ptr<ProverHandle> honest_device_prover(const ProblemInstance& instance, uint64_t seed);

// Deterministic transcript-valid prover: answers the lexicographically
// smallest outcome string with nonzero probability.
std::unique_ptr<ProverHandle> lazy_adversarial_prover(const ProblemInstance& instance);

// Corrupts each round-2 answer with probability epsilon by flipping a
// random nonempty subset of its bits.
std::unique_ptr<ProverHandle> faulty_prover(std::unique_ptr<ProverHandle> inner, double epsilon,
                                            uint64_t seed);

// Lemma-F.3 wrapper: pre-draws r and shifts every reported outcome by
// (r (A + diag(b)))_v so that full transcripts are distributed exactly as
// the honest quantum distribution. Narrow/Wide only (X/Y challenges).
std::unique_ptr<ProverHandle> samp_from_rel(const ProblemInstance& instance,
                                            std::unique_ptr<ProverHandle> inner, uint64_t seed);

// True iff the reported outcomes have nonzero probability under the
// challenge, checked by postselection; a transcript without round 2
// verifies the first round alone.
bool verify_transcript(const ProblemInstance& instance, const Transcript& transcript);

// Snapshot-and-replay wrapper around a prover.
class RewindOracle {
   public:
    explicit RewindOracle(std::unique_ptr<ProverHandle> prover);

    std::vector<uint8_t> round1(const Challenge& challenge);
    // Replays round 2 from the committed post-round-1 state; callable any
    // number of times with distinct challenges. Throws before round1.
    std::vector<uint8_t> rewind(const Challenge& round2_challenge);

   private:
    std::unique_ptr<ProverHandle> prover_;
    std::unique_ptr<ProverHandle> committed_;
    bool round1_done_ = false;
};

// --- Instance builders -----------------------------------------------------

// Narrow instance for a C2 word of length n: brickwork layout with one
// challenge block; round 1 covers 2 x (8n+1) qubits, round 2 the 2 x 9
// tail. The default round-1 challenge is the compiled pattern.
ProblemInstance narrow_instance(const std::vector<C2Coset>& word);
Challenge narrow_round1_challenge(const ProblemInstance& instance);
// Round-2 challenge applying basis-change u and reading Z outcomes off the
// X-measured outputs (the block realizes (H (x) H) u).
Challenge narrow_round2_challenge_for(C2Coset u);
// Round-2 challenge driving the magic-square program for row/column
// `program` (0..5).
Challenge narrow_round2_challenge(size_t program);

// Line instance: left and right words of single-qubit cosets.
ProblemInstance line_instance(const std::vector<C1Coset>& left_word,
                              const std::vector<C1Coset>& right_word);
Challenge line_round1_challenge(const ProblemInstance& instance);
Challenge line_round2_challenge(size_t program);

// Wide instance for a G_m letter word, with the pentagram measurement tail
// on the first three rows.
ProblemInstance wide_instance(size_t m, const std::vector<GmLetter>& word);
Challenge wide_round1_challenge(const ProblemInstance& instance);
// Round-2 challenge measuring pentagram line `line_index` (0..4).
Challenge wide_round2_challenge(const ProblemInstance& instance, size_t line_index);

// --- Round-2 decoding -------------------------------------------------------

// Decoded logical measurement: the canonical Pauli measured on the
// committed residual state and its outcome (0 -> +1). The unknown round-1
// byproduct flips outcomes only through fixed signs that cancel in every
// contextuality argument.
struct DecodedOutcome {
    PauliString pauli;
    uint8_t outcome;
};

// Narrow/Line: decoded outcomes of the logical operators X0, X1 and X0X1 on
// the output register, i.e. the three Paulis of whatever triple the round-2
// challenge measures.
std::array<DecodedOutcome, 3> decode_region_triple(const ProblemInstance& instance,
                                                   const Challenge& round2,
                                                   const std::vector<uint8_t>& outcomes2);

// Narrow/Line: outcomes for the three Paulis of magic-square program
// `program`, aligned with the square's row/column order.
std::array<DecodedOutcome, 3> decode_square_program(const ProblemInstance& instance,
                                                    size_t program,
                                                    const std::vector<uint8_t>& outcomes2);

// Wide: outcomes for the four nodes of pentagram line `line_index`, aligned
// with Pentagram::standard().lines[line_index].
std::array<DecodedOutcome, 4> decode_pentagram_line(const ProblemInstance& instance,
                                                    size_t line_index,
                                                    const std::vector<uint8_t>& outcomes2);

}  // namespace cliffsim

#endif
