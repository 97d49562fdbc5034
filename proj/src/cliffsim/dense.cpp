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

#include "cliffsim/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffsim {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

DenseState::DenseState(size_t m) : m_(m), a_(size_t{1} << m, 0.0) {
    if (m > kMaxQubits) throw std::invalid_argument("DenseState: qubit cap exceeded");
    a_[0] = 1.0;
}

DenseState DenseState::plus_state(size_t m) {
    DenseState s(m);
    for (size_t q = 0; q < m; q++) s.apply_h(q);
    return s;
}

void DenseState::apply_h(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < a_.size(); i++) {
        if (i & bit) continue;
        auto lo = a_[i], hi = a_[i | bit];
        a_[i] = (lo + hi) * kInvSqrt2;
        a_[i | bit] = (lo - hi) * kInvSqrt2;
    }
}

void DenseState::apply_rz(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < a_.size(); i++)
        if (i & bit) a_[i] *= kI;
}

void DenseState::apply_rz_dag(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < a_.size(); i++)
        if (i & bit) a_[i] *= -kI;
}

void DenseState::apply_x(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < a_.size(); i++)
        if (!(i & bit)) std::swap(a_[i], a_[i | bit]);
}

void DenseState::apply_y(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < a_.size(); i++) {
        if (i & bit) continue;
        auto lo = a_[i], hi = a_[i | bit];
        a_[i] = -kI * hi;
        a_[i | bit] = kI * lo;
    }
}

void DenseState::apply_z(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < a_.size(); i++)
        if (i & bit) a_[i] = -a_[i];
}

void DenseState::apply_cnot(size_t control, size_t target) {
    size_t cb = size_t{1} << control, tb = size_t{1} << target;
    for (size_t i = 0; i < a_.size(); i++)
        if ((i & cb) && !(i & tb)) std::swap(a_[i], a_[i | tb]);
}

void DenseState::apply_cz(size_t a, size_t b) {
    size_t ab = size_t{1} << a, bb = size_t{1} << b;
    for (size_t i = 0; i < a_.size(); i++)
        if ((i & ab) && (i & bb)) a_[i] = -a_[i];
}

void DenseState::apply_swap(size_t a, size_t b) {
    apply_cnot(a, b);
    apply_cnot(b, a);
    apply_cnot(a, b);
}

void DenseState::apply_pauli(const PauliString& p) {
    if (p.num_qubits() != m_) throw std::invalid_argument("apply_pauli: dimension mismatch");
    for (size_t q = 0; q < m_; q++) {
        switch (p.letter(q)) {
            case 'X': apply_x(q); break;
            case 'Y': apply_y(q); break;
            case 'Z': apply_z(q); break;
            default: break;
        }
    }
    // Stored operator is i^phase X^x Z^z = i^(phase - y_count) * literal.
    std::complex<double> ph = 1.0;
    for (int k = 0; k < int((p.phase() - p.y_count()) & 3); k++) ph *= kI;
    for (auto& amp : a_) amp *= ph;
}

std::complex<double> DenseState::expectation(const PauliString& p) const {
    DenseState t = *this;
    t.apply_pauli(p);
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < a_.size(); i++) acc += std::conj(a_[i]) * t.a_[i];
    return acc;
}

std::vector<double> DenseState::measurement_distribution(const std::vector<size_t>& qubits,
                                                         const std::vector<char>& bases) const {
    if (qubits.size() != bases.size())
        throw std::invalid_argument("measurement_distribution: length mismatch");
    DenseState t = *this;
    // Rotate each measured qubit so its basis becomes Z.
    for (size_t k = 0; k < qubits.size(); k++) {
        size_t q = qubits[k];
        switch (bases[k]) {
            case 'X': t.apply_h(q); break;
            case 'Y': t.apply_rz_dag(q); t.apply_h(q); break;
            case 'Z': break;
            default: throw std::invalid_argument("measurement_distribution: bad basis");
        }
    }
    std::vector<double> dist(size_t{1} << qubits.size(), 0.0);
    for (size_t i = 0; i < t.a_.size(); i++) {
        double pr = std::norm(t.a_[i]);
        if (pr == 0.0) continue;
        size_t outcome = 0;
        for (size_t k = 0; k < qubits.size(); k++)
            if (i & (size_t{1} << qubits[k])) outcome |= size_t{1} << k;
        dist[outcome] += pr;
    }
    return dist;
}

std::vector<uint64_t> DenseState::support(double tol) const {
    std::vector<uint64_t> out;
    for (size_t i = 0; i < a_.size(); i++)
        if (std::norm(a_[i]) > tol) out.push_back(i);
    return out;
}

bool DenseState::equal_up_to_phase(const DenseState& a, const DenseState& b, double tol) {
    if (a.m_ != b.m_) return false;
    std::complex<double> ip = 0.0;
    for (size_t i = 0; i < a.a_.size(); i++) ip += std::conj(a.a_[i]) * b.a_[i];
    return std::abs(std::abs(ip) - 1.0) < tol;
}

}  // namespace cliffsim
