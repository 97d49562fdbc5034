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

#include "cliffsim/protocol.hpp"

#include <stdexcept>

namespace cliffsim {

namespace {

constexpr size_t kWideTailSlots = 5;  // block groups, pairs (0,1,0,1,0)
constexpr size_t kWideTailCols = 8 * kWideTailSlots;

size_t tail_pair_of_slot(size_t slot) { return slot % 2; }

// Gate list of one column under challenge basis bits.
std::vector<Gate> column_gates_with(const MeasurementLayout& layout, size_t col,
                                    const BitVec& basis) {
    std::vector<Gate> gates;
    for (auto [a, b] : layout.cols[col].vert_edges) gates.push_back(Gate::cz(a, b));
    for (size_t r = 0; r < layout.rows; r++)
        if (basis.get(r)) gates.push_back(Gate::rz_dag(r));
    for (size_t r = 0; r < layout.rows; r++) gates.push_back(Gate::h(r));
    return gates;
}

// Sweeps columns [begin, end) of the layout on the running state with
// challenge bases; outcome bits supplied by `next_bit`.
template <typename NextBit>
void sweep_region(const MeasurementLayout& layout, size_t begin, size_t end,
                  const std::vector<BitVec>& bases, StabilizerState& state, NextBit next_bit) {
    for (size_t c = begin; c < end; c++) {
        const BitVec& basis = bases[c - begin];
        for (auto [a, b] : layout.cols[c].vert_edges) state.apply_gate_inplace(Gate::cz(a, b));
        for (size_t r = 0; r < layout.rows; r++) {
            uint8_t s = next_bit();
            if (basis.get(r)) state.apply_gate_inplace(Gate::rz_dag(r));
            state.apply_gate_inplace(Gate::h(r));
            if (s) state.apply_pauli_inplace(PauliString::single(layout.rows, r, 'X'));
        }
    }
}

void check_bases(const std::vector<BitVec>& bases, size_t cols, size_t rows, const char* what) {
    if (bases.size() != cols) throw std::invalid_argument(std::string(what) + ": wrong column count");
    for (const auto& b : bases)
        if (b.size() != rows) throw std::invalid_argument(std::string(what) + ": wrong row count");
}

// Joint two-qubit state CZ(left (x) right) from two single-qubit states.
StabilizerState join_middles(const StabilizerState& left, const StabilizerState& right) {
    PauliString gl(2), gr(2);
    gl.set_letter(0, left.generators()[0].letter(0));
    if (left.generators()[0].sign_bit()) gl.set_phase((gl.phase() + 2) & 3);
    gr.set_letter(1, right.generators()[0].letter(0));
    if (right.generators()[0].sign_bit()) gr.set_phase((gr.phase() + 2) & 3);
    StabilizerState joint = StabilizerState::from_generators(2, {gl, gr});
    joint.apply_gate_inplace(Gate::cz(0, 1));
    return joint;
}

// --- Honest prover -----------------------------------------------------------

class HonestProver final : public ProverHandle {
   public:
    HonestProver(const ProblemInstance& instance, uint64_t seed, bool allow_snapshot)
        : instance_(instance), rng_(seed), allow_snapshot_(allow_snapshot) {}

    std::vector<uint8_t> round1(const Challenge& challenge) override {
        if (stage_ != 0) throw std::logic_error("round1 called twice");
        stage_ = 1;
        std::vector<uint8_t> out;
        auto coin = [this, &out]() {
            uint8_t s = rng_.next_bit() ? 1 : 0;
            out.push_back(s);
            return s;
        };
        if (instance_.kind == ProblemKind::Line) {
            size_t lcols = instance_.left.num_cols() - 1;
            size_t rcols = instance_.right.num_cols() - 1;
            check_bases(challenge.bases, lcols + rcols, 1, "line round1");
            left_ = StabilizerState::plus_state(1);
            right_ = StabilizerState::plus_state(1);
            std::vector<BitVec> lb(challenge.bases.begin(), challenge.bases.begin() + lcols);
            std::vector<BitVec> rb(challenge.bases.begin() + lcols, challenge.bases.end());
            sweep_region(instance_.left, 0, lcols, lb, left_, coin);
            sweep_region(instance_.right, 0, rcols, rb, right_, coin);
        } else {
            const MeasurementLayout& layout = instance_.layout;
            check_bases(challenge.bases, layout.round1_cols, layout.rows, "round1");
            state_ = StabilizerState::plus_state(layout.rows);
            sweep_region(layout, 0, layout.round1_cols, challenge.bases, state_, coin);
        }
        return out;
    }

    std::vector<uint8_t> round2(const Challenge& challenge) override {
        if (stage_ != 1) throw std::logic_error("round2 before round1");
        stage_ = 2;
        std::vector<uint8_t> out;
        if (instance_.kind == ProblemKind::Line) {
            if (!challenge.line_c2) throw std::invalid_argument("line round2: missing Clifford");
            StabilizerState joint = join_middles(left_, right_);
            joint.apply_clifford_inplace(Clifford2::to_tableau(*challenge.line_c2));
            auto rec = joint.measure_multi({0, 1}, {'X', 'X'}, rng_);
            out = rec.outcomes;
        } else {
            const MeasurementLayout& layout = instance_.layout;
            size_t r1 = layout.round1_cols;
            check_bases(challenge.bases, layout.num_cols() - r1, layout.rows, "round2");
            auto coin = [this, &out]() {
                uint8_t s = rng_.next_bit() ? 1 : 0;
                out.push_back(s);
                return s;
            };
            sweep_region(layout, r1, layout.num_cols() - 1, challenge.bases, state_, coin);
            const BitVec& outbits = challenge.bases.back();
            std::vector<size_t> qubits(layout.rows);
            std::vector<char> bases(layout.rows);
            for (size_t r = 0; r < layout.rows; r++) {
                qubits[r] = r;
                bases[r] = outbits.get(r) ? 'Y' : 'X';
            }
            auto rec = state_.measure_multi(qubits, bases, rng_);
            out.insert(out.end(), rec.outcomes.begin(), rec.outcomes.end());
        }
        return out;
    }

    bool supports_snapshot() const override { return allow_snapshot_; }

    std::unique_ptr<ProverHandle> snapshot() const override {
        if (!allow_snapshot_)
            throw std::logic_error("quantum device prover cannot be rewound (no cloning)");
        return std::make_unique<HonestProver>(*this);
    }

   private:
    ProblemInstance instance_;
    Rng rng_;
    bool allow_snapshot_;
    int stage_ = 0;
    StabilizerState state_{0};
    StabilizerState left_{0}, right_{0};
};

// --- Lazy adversarial prover -------------------------------------------------

class LazyProver final : public ProverHandle {
   public:
    explicit LazyProver(const ProblemInstance& instance) : instance_(instance) {}

    std::vector<uint8_t> round1(const Challenge& challenge) override {
        if (stage_ != 0) throw std::logic_error("round1 called twice");
        stage_ = 1;
        std::vector<uint8_t> out;
        auto zero = [&out]() {
            out.push_back(0);
            return uint8_t{0};
        };
        if (instance_.kind == ProblemKind::Line) {
            size_t lcols = instance_.left.num_cols() - 1;
            size_t rcols = instance_.right.num_cols() - 1;
            check_bases(challenge.bases, lcols + rcols, 1, "line round1");
            left_ = StabilizerState::plus_state(1);
            right_ = StabilizerState::plus_state(1);
            std::vector<BitVec> lb(challenge.bases.begin(), challenge.bases.begin() + lcols);
            std::vector<BitVec> rb(challenge.bases.begin() + lcols, challenge.bases.end());
            sweep_region(instance_.left, 0, lcols, lb, left_, zero);
            sweep_region(instance_.right, 0, rcols, rb, right_, zero);
        } else {
            const MeasurementLayout& layout = instance_.layout;
            check_bases(challenge.bases, layout.round1_cols, layout.rows, "round1");
            state_ = StabilizerState::plus_state(layout.rows);
            sweep_region(layout, 0, layout.round1_cols, challenge.bases, state_, zero);
        }
        return out;
    }

    std::vector<uint8_t> round2(const Challenge& challenge) override {
        if (stage_ != 1) throw std::logic_error("round2 before round1");
        stage_ = 2;
        std::vector<uint8_t> out;
        auto greedy_measure = [&out](StabilizerState& state, size_t q, char basis) {
            PauliString p(state.num_qubits());
            p.set_letter(q, basis);
            StabKind kind = state.is_stabilizer(p);
            uint8_t bit = kind == StabKind::Minus ? 1 : 0;
            state.postselect_pauli(p, bit);
            out.push_back(bit);
        };
        if (instance_.kind == ProblemKind::Line) {
            if (!challenge.line_c2) throw std::invalid_argument("line round2: missing Clifford");
            StabilizerState joint = join_middles(left_, right_);
            joint.apply_clifford_inplace(Clifford2::to_tableau(*challenge.line_c2));
            greedy_measure(joint, 0, 'X');
            greedy_measure(joint, 1, 'X');
        } else {
            const MeasurementLayout& layout = instance_.layout;
            size_t r1 = layout.round1_cols;
            check_bases(challenge.bases, layout.num_cols() - r1, layout.rows, "round2");
            auto zero = [&out]() {
                out.push_back(0);
                return uint8_t{0};
            };
            sweep_region(layout, r1, layout.num_cols() - 1, challenge.bases, state_, zero);
            const BitVec& outbits = challenge.bases.back();
            for (size_t r = 0; r < layout.rows; r++)
                greedy_measure(state_, r, outbits.get(r) ? 'Y' : 'X');
        }
        return out;
    }

    bool supports_snapshot() const override { return true; }
    std::unique_ptr<ProverHandle> snapshot() const override {
        return std::make_unique<LazyProver>(*this);
    }

   private:
    ProblemInstance instance_;
    int stage_ = 0;
    StabilizerState state_{0};
    StabilizerState left_{0}, right_{0};
};

// --- Faulty wrapper ----------------------------------------------------------

class FaultyProver final : public ProverHandle {
   public:
    FaultyProver(std::shared_ptr<ProverHandle> inner, double epsilon, uint64_t seed)
        : inner_kept_(std::move(inner)), epsilon_(epsilon), rng_(seed) {}

    std::vector<uint8_t> round1(const Challenge& challenge) override {
        return inner_kept_->round1(challenge);
    }

    std::vector<uint8_t> round2(const Challenge& challenge) override {
        std::vector<uint8_t> out = inner_kept_->round2(challenge);
        if (rng_.next_double() < epsilon_ && !out.empty()) {
            bool flipped = false;
            for (auto& bit : out) {
                if (rng_.next_bit()) {
                    bit ^= 1;
                    flipped = true;
                }
            }
            if (!flipped) out[rng_.next_below(out.size())] ^= 1;
        }
        return out;
    }

    bool supports_snapshot() const override { return inner_kept_->supports_snapshot(); }
    std::unique_ptr<ProverHandle> snapshot() const override {
        auto inner_copy = inner_kept_->snapshot();
        // Each replay gets an independent corruption stream.
        return std::make_unique<FaultyProver>(std::shared_ptr<ProverHandle>(std::move(inner_copy)),
                                              epsilon_, rng_.split(++snap_counter_).next_u64());
    }

   private:
    std::shared_ptr<ProverHandle> inner_kept_;
    double epsilon_;
    mutable Rng rng_;
    mutable uint64_t snap_counter_ = 0;
};

// --- Relational-to-sampling wrapper (Lemma F.3) --------------------------------

class SampFromRelProver final : public ProverHandle {
   public:
    SampFromRelProver(const ProblemInstance& instance, std::shared_ptr<ProverHandle> inner,
                      BitVec r)
        : instance_(instance), inner_(std::move(inner)), r_(std::move(r)) {
        if (instance_.kind == ProblemKind::Line)
            throw std::invalid_argument("samp_from_rel: line round 2 is not an X/Y challenge");
    }

    std::vector<uint8_t> round1(const Challenge& challenge) override {
        std::vector<uint8_t> out = inner_->round1(challenge);
        shift_region(out, 0, instance_.layout.round1_cols, challenge.bases);
        return out;
    }

    std::vector<uint8_t> round2(const Challenge& challenge) override {
        std::vector<uint8_t> out = inner_->round2(challenge);
        shift_region(out, instance_.layout.round1_cols, instance_.layout.num_cols(),
                     challenge.bases);
        return out;
    }

    bool supports_snapshot() const override { return inner_->supports_snapshot(); }
    std::unique_ptr<ProverHandle> snapshot() const override {
        return std::make_unique<SampFromRelProver>(
            instance_, std::shared_ptr<ProverHandle>(inner_->snapshot()), r_);
    }

   private:
    // Outcome shift (r (A + diag(b)))_v: the sum of r over the vertex's
    // graph neighbours plus r_v when measured in the Y basis.
    void shift_region(std::vector<uint8_t>& out, size_t col_begin, size_t col_end,
                      const std::vector<BitVec>& bases) {
        const MeasurementLayout& layout = instance_.layout;
        size_t idx = 0;
        for (size_t c = col_begin; c < col_end; c++) {
            for (size_t r = 0; r < layout.rows; r++, idx++) {
                if (idx >= out.size()) throw std::invalid_argument("samp_from_rel: short answer");
                uint8_t shift = 0;
                if (c > 0) shift ^= r_.get(layout.vid(r, c - 1));
                if (c + 1 < layout.num_cols()) shift ^= r_.get(layout.vid(r, c + 1));
                for (auto [a, b] : layout.cols[c].vert_edges) {
                    if (a == r) shift ^= r_.get(layout.vid(b, c));
                    if (b == r) shift ^= r_.get(layout.vid(a, c));
                }
                if (bases[c - col_begin].get(r)) shift ^= r_.get(layout.vid(r, c));
                out[idx] ^= shift;
            }
        }
    }

    ProblemInstance instance_;
    std::shared_ptr<ProverHandle> inner_;
    BitVec r_;
};

}  // namespace

size_t ProblemInstance::round1_qubits() const {
    if (kind == ProblemKind::Line)
        return (left.num_cols() - 1) + (right.num_cols() - 1);
    return layout.rows * layout.round1_cols;
}

size_t ProblemInstance::round2_qubits() const {
    if (kind == ProblemKind::Line) return 2;
    return layout.rows * (layout.num_cols() - layout.round1_cols);
}

std::unique_ptr<ProverHandle> honest_prover(const ProblemInstance& instance, uint64_t seed) {
    return std::make_unique<HonestProver>(instance, seed, true);
}

std::unique_ptr<ProverHandle> honest_device_prover(const ProblemInstance& instance, uint64_t seed) {
    return std::make_unique<HonestProver>(instance, seed, false);
}

std::unique_ptr<ProverHandle> lazy_adversarial_prover(const ProblemInstance& instance) {
    return std::make_unique<LazyProver>(instance);
}

std::unique_ptr<ProverHandle> faulty_prover(std::unique_ptr<ProverHandle> inner, double epsilon,
                                            uint64_t seed) {
    if (epsilon < 0 || epsilon >= 1) throw std::invalid_argument("faulty_prover: bad rate");
    return std::make_unique<FaultyProver>(std::shared_ptr<ProverHandle>(std::move(inner)), epsilon,
                                          seed);
}

std::unique_ptr<ProverHandle> samp_from_rel(const ProblemInstance& instance,
                                            std::unique_ptr<ProverHandle> inner, uint64_t seed) {
    Rng rng(seed);
    BitVec r = BitVec::random(instance.layout.num_vertices(), rng);
    return std::make_unique<SampFromRelProver>(instance,
                                               std::shared_ptr<ProverHandle>(std::move(inner)), r);
}

bool verify_transcript(const ProblemInstance& instance, const Transcript& transcript) {
    if (instance.kind == ProblemKind::Line) {
        size_t lcols = instance.left.num_cols() - 1;
        size_t rcols = instance.right.num_cols() - 1;
        if (transcript.outcomes1.size() != lcols + rcols)
            throw std::invalid_argument("verify_transcript: malformed round-1 outcomes");
        size_t idx = 0;
        auto forced = [&transcript, &idx]() { return transcript.outcomes1[idx++]; };
        StabilizerState left = StabilizerState::plus_state(1);
        StabilizerState right = StabilizerState::plus_state(1);
        std::vector<BitVec> lb(transcript.round1.bases.begin(),
                               transcript.round1.bases.begin() + lcols);
        std::vector<BitVec> rb(transcript.round1.bases.begin() + lcols,
                               transcript.round1.bases.end());
        sweep_region(instance.left, 0, lcols, lb, left, forced);
        sweep_region(instance.right, 0, rcols, rb, right, forced);
        if (!transcript.has_round2) return true;
        if (!transcript.round2.line_c2 || transcript.outcomes2.size() != 2)
            throw std::invalid_argument("verify_transcript: malformed round 2");
        StabilizerState joint = join_middles(left, right);
        joint.apply_clifford_inplace(Clifford2::to_tableau(*transcript.round2.line_c2));
        return joint.postselect({0, 1}, {'X', 'X'}, transcript.outcomes2);
    }
    const MeasurementLayout& layout = instance.layout;
    size_t r1 = layout.round1_cols;
    check_bases(transcript.round1.bases, r1, layout.rows, "verify round1");
    if (transcript.outcomes1.size() != layout.rows * r1)
        throw std::invalid_argument("verify_transcript: malformed round-1 outcomes");
    StabilizerState state = StabilizerState::plus_state(layout.rows);
    size_t idx = 0;
    auto forced1 = [&transcript, &idx]() { return transcript.outcomes1[idx++]; };
    sweep_region(layout, 0, r1, transcript.round1.bases, state, forced1);
    if (!transcript.has_round2) return true;
    check_bases(transcript.round2.bases, layout.num_cols() - r1, layout.rows, "verify round2");
    if (transcript.outcomes2.size() != layout.rows * (layout.num_cols() - r1))
        throw std::invalid_argument("verify_transcript: malformed round-2 outcomes");
    size_t idx2 = 0;
    auto forced2 = [&transcript, &idx2]() { return transcript.outcomes2[idx2++]; };
    sweep_region(layout, r1, layout.num_cols() - 1, transcript.round2.bases, state, forced2);
    const BitVec& outbits = transcript.round2.bases.back();
    for (size_t r = 0; r < layout.rows; r++) {
        PauliString p(layout.rows);
        p.set_letter(r, outbits.get(r) ? 'Y' : 'X');
        if (!state.postselect_pauli(p, transcript.outcomes2[idx2++])) return false;
    }
    return true;
}

RewindOracle::RewindOracle(std::unique_ptr<ProverHandle> prover) : prover_(std::move(prover)) {}

std::vector<uint8_t> RewindOracle::round1(const Challenge& challenge) {
    if (round1_done_) throw std::logic_error("RewindOracle: round1 already committed");
    std::vector<uint8_t> out = prover_->round1(challenge);
    committed_ = prover_->snapshot();
    round1_done_ = true;
    return out;
}

std::vector<uint8_t> RewindOracle::rewind(const Challenge& round2_challenge) {
    if (!round1_done_) throw std::logic_error("RewindOracle: rewind before round 1");
    std::unique_ptr<ProverHandle> replay = committed_->snapshot();
    return replay->round2(round2_challenge);
}

// --- Instance builders -------------------------------------------------------

ProblemInstance narrow_instance(const std::vector<C2Coset>& word) {
    if (word.empty()) throw std::invalid_argument("narrow_instance: empty word");
    // The challenge block is the outermost letter; its bits are overridden
    // by round-2 challenges (the graph does not depend on them).
    std::vector<C2Coset> letters;
    letters.push_back(Clifford2::identity());
    letters.insert(letters.end(), word.begin(), word.end());
    ProblemInstance instance;
    instance.kind = ProblemKind::Narrow;
    instance.layout = brickwork_gadget(letters);
    instance.layout.round1_cols = 1 + 8 * word.size();
    return instance;
}

Challenge narrow_round1_challenge(const ProblemInstance& instance) {
    Challenge ch;
    for (size_t c = 0; c < instance.layout.round1_cols; c++)
        ch.bases.push_back(instance.layout.cols[c].basis);
    return ch;
}

Challenge narrow_round2_challenge_for(C2Coset u) {
    C2Coset hh = Clifford2::from_gates({Gate::h(0), Gate::h(1)});
    uint16_t bits = brickwork_block_bits(Clifford2::mul(hh, u));
    Challenge ch;
    for (int c = 0; c < 8; c++) {
        BitVec col(2);
        col.set(0, (bits >> (2 * c)) & 1);
        col.set(1, (bits >> (2 * c + 1)) & 1);
        ch.bases.push_back(col);
    }
    ch.bases.push_back(BitVec(2));  // output column, X
    return ch;
}

Challenge narrow_round2_challenge(size_t program) {
    return narrow_round2_challenge_for(row_col_measurement_program(program));
}

ProblemInstance line_instance(const std::vector<C1Coset>& left_word,
                              const std::vector<C1Coset>& right_word) {
    ProblemInstance instance;
    instance.kind = ProblemKind::Line;
    instance.left = line_gadget(left_word);
    instance.right = line_gadget(right_word);
    return instance;
}

Challenge line_round1_challenge(const ProblemInstance& instance) {
    Challenge ch;
    for (size_t c = 0; c + 1 < instance.left.num_cols(); c++)
        ch.bases.push_back(instance.left.cols[c].basis);
    for (size_t c = 0; c + 1 < instance.right.num_cols(); c++)
        ch.bases.push_back(instance.right.cols[c].basis);
    return ch;
}

Challenge line_round2_challenge(size_t program) {
    C2Coset hh = Clifford2::from_gates({Gate::h(0), Gate::h(1)});
    C2Coset cz = Clifford2::from_gates({Gate::cz(0, 1)});
    Challenge ch;
    // (H (x) H) u CZ: the CZ folds away the middle graph edge, the Hadamards
    // turn the X measurements into Z measurements of u applied to the state.
    ch.line_c2 = Clifford2::mul(Clifford2::mul(hh, row_col_measurement_program(program)), cz);
    return ch;
}

namespace {

// Completes three independent pairwise-commuting canonical 3-qubit Paulis
// to a full tableau whose Z images are those Paulis (signs +).
CliffordTableau complete_to_tableau(const std::array<PauliString, 3>& z_images) {
    size_t m = 3;
    auto sp_vec = [m](const PauliString& p) {
        // Symplectic pairing vector: <w, J p> with J swapping x/z halves.
        BitVec v(2 * m);
        for (size_t q = 0; q < m; q++) {
            v.set(q, p.z_bits().get(q));
            v.set(m + q, p.x_bits().get(q));
        }
        return v;
    };
    std::vector<PauliString> x_images;
    for (size_t k = 0; k < 3; k++) {
        // Constraints: anticommute with z_images[k], commute with the other
        // z images and with previously chosen x images.
        std::vector<std::pair<BitVec, bool>> constraints;
        for (size_t j = 0; j < 3; j++) constraints.push_back({sp_vec(z_images[j]), j == k});
        for (const auto& x : x_images) constraints.push_back({sp_vec(x), false});
        BitMat system(2 * m, constraints.size());
        BitVec rhs(constraints.size());
        for (size_t i = 0; i < constraints.size(); i++) {
            for (size_t bit = 0; bit < 2 * m; bit++)
                system.set(bit, i, constraints[i].first.get(bit));
            rhs.set(i, constraints[i].second);
        }
        auto sol = system.solve_left(rhs);
        if (!sol) throw std::logic_error("complete_to_tableau: no symplectic completion");
        BitVec x(m), z(m);
        for (size_t q = 0; q < m; q++) {
            x.set(q, sol->get(q));
            z.set(q, sol->get(m + q));
        }
        x_images.push_back(PauliString(x, z, 0).positive_rep());
    }
    BitMat a(m, m), b(m, m), c(m, m), d(m, m);
    for (size_t k = 0; k < m; k++) {
        for (size_t q = 0; q < m; q++) {
            a.set(k, q, x_images[k].x_bits().get(q));
            b.set(k, q, x_images[k].z_bits().get(q));
            c.set(k, q, z_images[k].x_bits().get(q));
            d.set(k, q, z_images[k].z_bits().get(q));
        }
    }
    return CliffordTableau::from_blocks(a, b, c, d);
}

// Tail slot cosets for pentagram line `line_index`: five blocks on pairs
// (0,1), (1,2), (0,1), (1,2), (0,1) realizing (H^3) V with V mapping the
// line's first three nodes to +-Z_0, +-Z_1, +-Z_2.
const std::array<C2Coset, kWideTailSlots>& tail_slots_for_line(size_t line_index) {
    static const std::array<std::array<C2Coset, kWideTailSlots>, 5> all = [] {
        std::array<std::array<C2Coset, kWideTailSlots>, 5> out;
        const Pentagram& pent = Pentagram::standard();
        for (size_t l = 0; l < 5; l++) {
            std::array<PauliString, 3> gens;
            for (int k = 0; k < 3; k++) gens[k] = pent.nodes[pent.lines[l][k]].canonical_rep();
            // V with V . gen_k = +-Z_k is the inverse of the completion
            // whose Z images are the gens.
            CliffordTableau v = inverse(complete_to_tableau(gens));
            CliffordTableau h3 = CliffordTableau::from_gates(3, {Gate::h(0), Gate::h(1), Gate::h(2)});
            CliffordTableau target = compose(v, h3);  // H^3 after V
            auto decomp = nn_pair_decompose(target);
            std::array<C2Coset, kWideTailSlots> slots;
            slots.fill(Clifford2::identity());
            size_t slot = decomp.empty() || decomp[0].first == 0 ? 0 : 1;
            for (const auto& [pair, coset] : decomp) {
                if (tail_pair_of_slot(slot) != size_t(pair))
                    throw std::logic_error("tail decomposition does not alternate");
                slots[slot++] = coset;
            }
            out[l] = slots;
        }
        return out;
    }();
    if (line_index >= 5) throw std::invalid_argument("tail_slots_for_line: index 0..4");
    return all[line_index];
}

}  // namespace

ProblemInstance wide_instance(size_t m, const std::vector<GmLetter>& word) {
    if (m < 3) throw std::invalid_argument("wide_instance: need m >= 3");
    ProblemInstance instance;
    instance.kind = ProblemKind::Wide;
    MeasurementLayout base = wide_cluster_gadget_letters(m, word);
    base.cols.pop_back();  // replace the output column with the tail
    base.round1_cols = base.cols.size();
    for (size_t slot = 0; slot < kWideTailSlots; slot++) {
        size_t top = tail_pair_of_slot(slot);  // pair 0 -> rows (0,1), pair 1 -> (1,2)
        for (int c = 0; c < 8; c++) {
            LayoutColumn col{BitVec(m), {}};
            if (c % 2 == 0) col.vert_edges.push_back({uint32_t(top), uint32_t(top + 1)});
            base.cols.push_back(std::move(col));
        }
    }
    base.cols.push_back(LayoutColumn{BitVec(m), {}});  // output column
    base.net = CliffordTableau(m);
    for (size_t c = 0; c + 1 < base.num_cols(); c++)
        base.net.apply_gates_inplace(base.column_gates(c));
    instance.layout = std::move(base);
    return instance;
}

Challenge wide_round1_challenge(const ProblemInstance& instance) {
    Challenge ch;
    for (size_t c = 0; c < instance.layout.round1_cols; c++)
        ch.bases.push_back(instance.layout.cols[c].basis);
    return ch;
}

Challenge wide_round2_challenge(const ProblemInstance& instance, size_t line_index) {
    const auto& slots = tail_slots_for_line(line_index);
    size_t m = instance.layout.rows;
    Challenge ch;
    for (size_t slot = 0; slot < kWideTailSlots; slot++) {
        size_t top = tail_pair_of_slot(slot);
        uint16_t bits = brickwork_block_bits(slots[slot]);
        for (int c = 0; c < 8; c++) {
            BitVec col(m);
            col.set(top, (bits >> (2 * c)) & 1);
            col.set(top + 1, (bits >> (2 * c + 1)) & 1);
            ch.bases.push_back(col);
        }
    }
    ch.bases.push_back(BitVec(m));  // output column, X
    return ch;
}

// --- Round-2 decoding ---------------------------------------------------------

namespace {

// Decodes the outcome of the canonical operator target_op (expressed on the
// output register) measured through the round-2 region: V_exact is the exact
// product of the region's column operations, flips[k] the accumulated
// byproduct anticommutation bit for output X_k, raw the output-column bits.
struct RegionDecoder {
    CliffordTableau v_inverse{0};
    std::vector<uint8_t> flips;       // per output row
    std::vector<uint8_t> raw;         // per output row

    DecodedOutcome decode(const PauliString& output_op) const {
        PauliString back = v_inverse.conjugate(output_op.positive_rep());
        uint8_t bit = back.sign_bit();
        for (size_t r = 0; r < raw.size(); r++) {
            // Outcome of the output operator is the product of the touched
            // X_r outcomes; Y letters never occur here (output_op is X-type).
            if (output_op.x_bits().get(r)) bit ^= uint8_t(raw[r] ^ flips[r]);
        }
        return DecodedOutcome{back.canonical_rep(), bit};
    }
};

// Builds the decoder for an X/Y-challenge region (narrow and wide kinds).
RegionDecoder build_region_decoder(const MeasurementLayout& layout, const Challenge& round2,
                                   const std::vector<uint8_t>& outcomes2) {
    size_t r1 = layout.round1_cols;
    size_t region_cols = layout.num_cols() - r1;
    check_bases(round2.bases, region_cols, layout.rows, "decode round2");
    if (outcomes2.size() != layout.rows * region_cols)
        throw std::invalid_argument("decode: wrong outcome count");
    RegionDecoder dec;
    // Suffix tableaux right to left over the measured region columns.
    CliffordTableau suffix = CliffordTableau::identity(layout.rows);
    dec.flips.assign(layout.rows, 0);
    for (size_t c = layout.num_cols() - 2; c + 1 > r1; c--) {
        // Byproducts of column c push through the ops of columns > c.
        for (size_t r = 0; r < layout.rows; r++) {
            PauliString f = suffix.conjugate(PauliString::single(layout.rows, r, 'X'));
            uint8_t s = outcomes2[(c - r1) * layout.rows + r];
            if (!s) continue;
            for (size_t k = 0; k < layout.rows; k++)
                dec.flips[k] ^= uint8_t(f.z_bits().get(k));
        }
        CliffordTableau op = CliffordTableau::from_gates(
            layout.rows, column_gates_with(layout, c, round2.bases[c - r1]));
        suffix = compose(op, suffix);
    }
    dec.v_inverse = inverse(suffix);
    dec.raw.assign(layout.rows, 0);
    for (size_t r = 0; r < layout.rows; r++)
        dec.raw[r] = outcomes2[(region_cols - 1) * layout.rows + r];
    return dec;
}

}  // namespace

std::array<DecodedOutcome, 3> decode_region_triple(const ProblemInstance& instance,
                                                   const Challenge& round2,
                                                   const std::vector<uint8_t>& outcomes2) {
    RegionDecoder dec;
    if (instance.kind == ProblemKind::Narrow) {
        dec = build_region_decoder(instance.layout, round2, outcomes2);
    } else if (instance.kind == ProblemKind::Line) {
        if (outcomes2.size() != 2) throw std::invalid_argument("decode: wrong outcome count");
        if (!round2.line_c2) throw std::invalid_argument("decode: missing line Clifford");
        // The committed state is CZ (left (x) right); the prover applied the
        // challenge Clifford on top of the implicit middle edge.
        CliffordTableau total = compose(CliffordTableau::from_gates(2, {Gate::cz(0, 1)}),
                                        Clifford2::to_tableau(*round2.line_c2));
        dec.v_inverse = inverse(total);
        dec.flips.assign(2, 0);
        dec.raw = outcomes2;
    } else {
        throw std::invalid_argument("decode_region_triple: wrong kind");
    }
    return {dec.decode(PauliString::from_letters("XI")), dec.decode(PauliString::from_letters("IX")),
            dec.decode(PauliString::from_letters("XX"))};
}

std::array<DecodedOutcome, 3> decode_square_program(const ProblemInstance& instance, size_t program,
                                                    const std::vector<uint8_t>& outcomes2) {
    const MagicSquare& sq = MagicSquare::standard();
    std::array<PauliString, 3> triple;
    for (int k = 0; k < 3; k++)
        triple[k] = program < 3 ? sq.grid[program][k] : sq.grid[k][program - 3];
    Challenge round2 = instance.kind == ProblemKind::Line ? line_round2_challenge(program)
                                                          : narrow_round2_challenge(program);
    std::array<DecodedOutcome, 3> decoded = decode_region_triple(instance, round2, outcomes2);
    // Align with the square triple order.
    std::array<DecodedOutcome, 3> out;
    std::array<bool, 3> used{};
    for (int k = 0; k < 3; k++) {
        bool placed = false;
        for (int j = 0; j < 3; j++) {
            if (!used[j] && decoded[j].pauli.same_string(triple[k])) {
                out[k] = decoded[j];
                used[j] = true;
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("decode_square_program: program measured the wrong triple");
    }
    return out;
}

std::array<DecodedOutcome, 4> decode_pentagram_line(const ProblemInstance& instance,
                                                    size_t line_index,
                                                    const std::vector<uint8_t>& outcomes2) {
    if (instance.kind != ProblemKind::Wide)
        throw std::invalid_argument("decode_pentagram_line: wrong kind");
    const Pentagram& pent = Pentagram::standard();
    size_t m = instance.layout.rows;
    RegionDecoder dec = build_region_decoder(instance.layout,
                                             wide_round2_challenge(instance, line_index), outcomes2);
    auto widen = [m](const PauliString& p3) {
        PauliString out(m);
        for (size_t q = 0; q < 3; q++) out.set_letter(q, p3.letter(q));
        return out;
    };
    std::array<DecodedOutcome, 4> decoded;
    PauliString x0(m), x1(m), x2(m), x012(m);
    x0.set_letter(0, 'X');
    x1.set_letter(1, 'X');
    x2.set_letter(2, 'X');
    x012.set_letter(0, 'X');
    x012.set_letter(1, 'X');
    x012.set_letter(2, 'X');
    std::array<DecodedOutcome, 4> raw_decoded = {dec.decode(x0), dec.decode(x1), dec.decode(x2),
                                                 dec.decode(x012)};
    // Align with the line's node order.
    std::array<bool, 4> used{};
    for (int k = 0; k < 4; k++) {
        PauliString node = widen(pent.nodes[pent.lines[line_index][k]]);
        bool placed = false;
        for (int j = 0; j < 4; j++) {
            if (!used[j] && raw_decoded[j].pauli.same_string(node)) {
                decoded[k] = raw_decoded[j];
                used[j] = true;
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("decode_pentagram_line: tail measured the wrong line");
    }
    return decoded;
}

}  // namespace cliffsim
