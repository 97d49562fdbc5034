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

#include "cliffsim/stabilizer.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffsim {

std::string MeasurementRecord::to_json() const {
    std::ostringstream out;
    auto list = [&out](auto&& emit, size_t n) {
        out << "[";
        for (size_t i = 0; i < n; i++) {
            if (i) out << ",";
            emit(i);
        }
        out << "]";
    };
    out << "{\"qubits\":";
    list([&](size_t i) { out << qubits[i]; }, qubits.size());
    out << ",\"bases\":";
    list([&](size_t i) { out << "\"" << bases[i] << "\""; }, bases.size());
    out << ",\"outcomes\":";
    list([&](size_t i) { out << int(outcomes[i]); }, outcomes.size());
    out << ",\"deterministic\":";
    list([&](size_t i) { out << (deterministic[i] ? "true" : "false"); }, deterministic.size());
    out << "}";
    return out.str();
}

StabilizerState::StabilizerState(size_t m) : m_(m) {
    gens_.reserve(m);
    for (size_t q = 0; q < m; q++) gens_.push_back(PauliString::single(m, q, 'Z'));
}

StabilizerState StabilizerState::plus_state(size_t m) {
    StabilizerState s(m);
    for (size_t q = 0; q < m; q++) s.gens_[q] = PauliString::single(m, q, 'X');
    return s;
}

StabilizerState StabilizerState::from_graph(const BitMat& adjacency) {
    if (adjacency.rows() != adjacency.cols() || !adjacency.is_symmetric())
        throw std::invalid_argument("from_graph: adjacency must be symmetric");
    if (!adjacency.is_zero_diagonal())
        throw std::invalid_argument("from_graph: adjacency must have zero diagonal");
    size_t m = adjacency.rows();
    StabilizerState s(m);
    for (size_t v = 0; v < m; v++) {
        BitVec x(m), z = adjacency.row(v);
        x.set(v, true);
        s.gens_[v] = PauliString(x, z, 0);
    }
    return s;
}

StabilizerState StabilizerState::from_generators(size_t m, std::vector<PauliString> generators) {
    if (generators.size() != m)
        throw std::invalid_argument("from_generators: need exactly m generators");
    StabilizerState s(m);
    s.gens_ = std::move(generators);
    if (!s.invariants_ok()) throw std::invalid_argument("from_generators: invalid generator set");
    return s;
}

void StabilizerState::apply_clifford_inplace(const CliffordTableau& t) {
    if (t.num_qubits() != m_) throw std::invalid_argument("apply_clifford: dimension mismatch");
    for (auto& g : gens_) g = t.conjugate(g);
}

void StabilizerState::apply_gate_inplace(const Gate& g) {
    // Reuses the tableau row-conjugation rules on each generator.
    CliffordTableau one(m_);
    one.apply_gate_inplace(g);
    for (auto& gen : gens_) gen = one.conjugate(gen);
}

void StabilizerState::apply_pauli_inplace(const PauliString& p) {
    for (auto& gen : gens_)
        if (!commutes(gen, p)) gen.set_phase(gen.phase() ^ 2);
}

std::pair<uint8_t, bool> StabilizerState::measure_pauli(const PauliString& p, Rng& rng) {
    PauliString target = p.positive_rep();
    size_t pivot = m_;
    for (size_t i = 0; i < m_; i++) {
        if (!commutes(gens_[i], target)) {
            pivot = i;
            break;
        }
    }
    if (pivot == m_) {
        StabKind kind = is_stabilizer(target);
        return {kind == StabKind::Minus ? uint8_t{1} : uint8_t{0}, true};
    }
    for (size_t i = pivot + 1; i < m_; i++)
        if (!commutes(gens_[i], target)) gens_[i] = pauli_mul(gens_[i], gens_[pivot]);
    uint8_t outcome = rng.next_bit() ? 1 : 0;
    gens_[pivot] = target;
    if (outcome) gens_[pivot].set_phase((target.phase() + 2) & 3);
    return {outcome, false};
}

bool StabilizerState::postselect_pauli(const PauliString& p, uint8_t outcome) {
    PauliString target = p.positive_rep();
    size_t pivot = m_;
    for (size_t i = 0; i < m_; i++) {
        if (!commutes(gens_[i], target)) {
            pivot = i;
            break;
        }
    }
    if (pivot == m_) {
        StabKind kind = is_stabilizer(target);
        uint8_t det = kind == StabKind::Minus ? 1 : 0;
        return det == outcome;
    }
    for (size_t i = pivot + 1; i < m_; i++)
        if (!commutes(gens_[i], target)) gens_[i] = pauli_mul(gens_[i], gens_[pivot]);
    gens_[pivot] = target;
    if (outcome) gens_[pivot].set_phase((target.phase() + 2) & 3);
    return true;
}

std::pair<uint8_t, bool> StabilizerState::measure_single(size_t qubit, char basis, Rng& rng) {
    if (qubit >= m_) throw std::out_of_range("measure_single: qubit out of range");
    if (basis == 'Y') {
        // Y realized as conjugate-by-Rz_dag, X-measure, conjugate back.
        apply_gate_inplace(Gate::rz_dag(qubit));
        auto result = measure_pauli(PauliString::single(m_, qubit, 'X'), rng);
        apply_gate_inplace(Gate::rz(qubit));
        return result;
    }
    return measure_pauli(PauliString::single(m_, qubit, basis), rng);
}

MeasurementRecord StabilizerState::measure_multi(const std::vector<size_t>& qubits,
                                                 const std::vector<char>& bases, Rng& rng) {
    if (qubits.size() != bases.size())
        throw std::invalid_argument("measure_multi: length mismatch");
    for (size_t i = 0; i < qubits.size(); i++)
        for (size_t j = i + 1; j < qubits.size(); j++)
            if (qubits[i] == qubits[j]) throw std::invalid_argument("measure_multi: duplicate qubit");
    MeasurementRecord rec;
    for (size_t i = 0; i < qubits.size(); i++) {
        auto [outcome, det] = measure_single(qubits[i], bases[i], rng);
        rec.push(qubits[i], bases[i], outcome, det);
    }
    return rec;
}

bool StabilizerState::postselect(const std::vector<size_t>& qubits, const std::vector<char>& bases,
                                 const std::vector<uint8_t>& outcomes) {
    if (qubits.size() != bases.size() || qubits.size() != outcomes.size())
        throw std::invalid_argument("postselect: length mismatch");
    for (size_t i = 0; i < qubits.size(); i++) {
        PauliString p(m_);
        p.set_letter(qubits[i], bases[i]);
        if (!postselect_pauli(p, outcomes[i])) return false;
    }
    return true;
}

StabKind StabilizerState::is_stabilizer(const PauliString& p) const {
    if (p.num_qubits() != m_) throw std::invalid_argument("is_stabilizer: dimension mismatch");
    BitMat rows(m_, 2 * m_);
    for (size_t i = 0; i < m_; i++) {
        for (size_t j = 0; j < m_; j++) {
            rows.set(i, j, gens_[i].x_bits().get(j));
            rows.set(i, m_ + j, gens_[i].z_bits().get(j));
        }
    }
    BitVec b(2 * m_);
    for (size_t j = 0; j < m_; j++) {
        b.set(j, p.x_bits().get(j));
        b.set(m_ + j, p.z_bits().get(j));
    }
    auto combo = rows.solve_left(b);
    if (!combo) return StabKind::NonStabilizer;
    PauliString acc(m_);
    for (size_t i = 0; i < m_; i++)
        if (combo->get(i)) acc = pauli_mul(acc, gens_[i]);
    uint8_t diff = (acc.phase() - p.positive_rep().phase()) & 3;
    return diff == 0 ? StabKind::Plus : StabKind::Minus;
}

bool StabilizerState::invariants_ok() const {
    BitMat rows(m_, 2 * m_);
    for (size_t i = 0; i < m_; i++) {
        if ((gens_[i].phase() - gens_[i].y_count()) & 1) return false;
        for (size_t j = i + 1; j < m_; j++)
            if (!commutes(gens_[i], gens_[j])) return false;
        for (size_t j = 0; j < m_; j++) {
            rows.set(i, j, gens_[i].x_bits().get(j));
            rows.set(i, m_ + j, gens_[i].z_bits().get(j));
        }
    }
    return rows.rank() == m_;
}

std::string StabilizerState::str() const {
    std::ostringstream out;
    out << m_ << "\n";
    for (const auto& g : gens_) out << g.str() << "\n";
    return out.str();
}

StabilizerState apply_clifford(const StabilizerState& s, const CliffordTableau& t) {
    StabilizerState out = s;
    out.apply_clifford_inplace(t);
    return out;
}

BitVec support_sample(const BitVec& z, const BitMat& c_block, Rng& rng) {
    if (c_block.rows() != z.size() || c_block.cols() != z.size())
        throw std::invalid_argument("support_sample: dimension mismatch");
    BitVec r = BitVec::random(z.size(), rng);
    BitVec out = c_block.mul_left(r);
    out ^= z;
    return out;
}

DenseState to_dense(const StabilizerState& s) {
    size_t m = s.num_qubits();
    for (size_t start = 0; start < (size_t{1} << m); start++) {
        // Seed with |start> and project onto the +1 eigenspace of each
        // generator; a zero result means the seed was orthogonal.
        DenseState cur(m);
        cur.mutable_amps().assign(size_t{1} << m, 0.0);
        cur.mutable_amps()[start] = 1.0;
        bool dead = false;
        for (const auto& g : s.generators()) {
            DenseState gpsi = cur;
            gpsi.apply_pauli(g);
            double norm2 = 0.0;
            auto& amps = cur.mutable_amps();
            for (size_t i = 0; i < amps.size(); i++) {
                amps[i] = 0.5 * (amps[i] + gpsi.amps()[i]);
                norm2 += std::norm(amps[i]);
            }
            if (norm2 < 1e-12) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        auto& amps = cur.mutable_amps();
        double norm2 = 0.0;
        for (auto& a : amps) norm2 += std::norm(a);
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& a : amps) a *= inv;
        return cur;
    }
    throw std::logic_error("to_dense: no support found (invalid stabilizer state)");
}

bool states_equal_mod_pauli(const StabilizerState& a, const StabilizerState& b) {
    if (a.num_qubits() != b.num_qubits()) return false;
    for (const auto& g : a.generators())
        if (b.is_stabilizer(g) == StabKind::NonStabilizer) return false;
    return true;
}

}  // namespace cliffsim
