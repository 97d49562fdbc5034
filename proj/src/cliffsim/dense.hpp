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

#ifndef CLIFFSIM_DENSE_HPP
#define CLIFFSIM_DENSE_HPP

#include <complex>
#include <vector>

#include "cliffsim/pauli.hpp"

namespace cliffsim {

// Exact statevector reference used by the test suites and verification
// commands. Deliberately unoptimized; capped at kMaxQubits qubits.
class DenseState {
   public:
    static constexpr size_t kMaxQubits = 12;

    explicit DenseState(size_t m);  // |0...0>
    static DenseState plus_state(size_t m);

    size_t num_qubits() const { return m_; }
    const std::vector<std::complex<double>>& amps() const { return a_; }
    std::vector<std::complex<double>>& mutable_amps() { return a_; }

    void apply_h(size_t q);
    void apply_rz(size_t q);      // diag(1, i)
    void apply_rz_dag(size_t q);  // diag(1, -i)
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cnot(size_t control, size_t target);
    void apply_cz(size_t a, size_t b);
    void apply_swap(size_t a, size_t b);
    void apply_pauli(const PauliString& p);

    // <psi| P |psi>; exact +-1 for stabilizers, 0 for non-stabilizers of
    // stabilizer states.
    std::complex<double> expectation(const PauliString& p) const;

    // Probability of each outcome bitstring (bit q of the index = outcome of
    // qubits[q]) when measuring the given qubits in the given bases
    // ('X','Y','Z'). Outcome bit 0 means eigenvalue +1.
    std::vector<double> measurement_distribution(const std::vector<size_t>& qubits,
                                                 const std::vector<char>& bases) const;

    // Indices of computational basis states with nonzero amplitude.
    std::vector<uint64_t> support(double tol = 1e-9) const;

    // |<a|b>| == 1 up to tolerance.
    static bool equal_up_to_phase(const DenseState& a, const DenseState& b, double tol = 1e-9);

   private:
    size_t m_;
    std::vector<std::complex<double>> a_;
};

}  // namespace cliffsim

#endif
