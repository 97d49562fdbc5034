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

#include <cmath>
#include <map>

#include "doctest.h"
#include "cliffsim/stats.hpp"

using namespace cliffsim;

namespace {

BitMat path_graph(size_t n) {
    BitMat adj(n, n);
    for (size_t i = 0; i + 1 < n; i++) {
        adj.set(i, i + 1, true);
        adj.set(i + 1, i, true);
    }
    return adj;
}

std::vector<Gate> random_gates(size_t m, size_t count, Rng& rng) {
    std::vector<Gate> gates;
    for (size_t i = 0; i < count; i++) {
        switch (rng.next_below(m >= 2 ? 4 : 2)) {
            case 0: gates.push_back(Gate::h(rng.next_below(m))); break;
            case 1: gates.push_back(Gate::rz(rng.next_below(m))); break;
            default: {
                size_t a = rng.next_below(m), b = rng.next_below(m - 1);
                if (b >= a) b++;
                gates.push_back(rng.next_bit() ? Gate::cnot(a, b) : Gate::cz(a, b));
            }
        }
    }
    return gates;
}

}  // namespace

TEST_CASE("from_graph: single vertex, edge, triangle") {
    StabilizerState v1 = StabilizerState::from_graph(BitMat(1, 1));
    CHECK(v1.generators()[0] == PauliString::from_letters("X"));

    StabilizerState edge = StabilizerState::from_graph(path_graph(2));
    CHECK(edge.generators()[0] == PauliString::from_letters("XZ"));
    CHECK(edge.generators()[1] == PauliString::from_letters("ZX"));
    // Same state as CZ |++> built through the tableau route.
    StabilizerState viacz = StabilizerState::plus_state(2);
    viacz.apply_gate_inplace(Gate::cz(0, 1));
    CHECK(to_dense(edge).amps() == to_dense(viacz).amps());

    BitMat tri(3, 3);
    for (size_t i = 0; i < 3; i++)
        for (size_t j = 0; j < 3; j++)
            if (i != j) tri.set(i, j, true);
    StabilizerState t = StabilizerState::from_graph(tri);
    CHECK(t.generators()[0] == PauliString::from_letters("XZZ"));
    CHECK(t.generators()[1] == PauliString::from_letters("ZXZ"));
    CHECK(t.generators()[2] == PauliString::from_letters("ZZX"));
    CHECK(t.invariants_ok());

    BitMat bad(2, 2);
    bad.set(0, 1, true);
    CHECK_THROWS(StabilizerState::from_graph(bad));
    BitMat diag(2, 2);
    diag.set(0, 0, true);
    CHECK_THROWS(StabilizerState::from_graph(diag));
}

TEST_CASE("apply_clifford: H maps |0> to |+>, random circuits match dense oracle") {
    StabilizerState s(1);
    s.apply_gate_inplace(Gate::h(0));
    CHECK(s.generators()[0] == PauliString::from_letters("X"));

    Rng rng(21);
    for (int trial = 0; trial < 40; trial++) {
        size_t m = 1 + rng.next_below(5);
        auto gates = random_gates(m, 2 + rng.next_below(30), rng);
        StabilizerState st(m);
        CliffordTableau t = CliffordTableau::from_gates(m, gates);
        st.apply_clifford_inplace(t);
        CHECK(st.invariants_ok());
        if (m <= 5) {
            DenseState want(m);
            for (const Gate& g : gates) {
                switch (g.kind) {
                    case GateKind::H: want.apply_h(g.a); break;
                    case GateKind::RZ: want.apply_rz(g.a); break;
                    case GateKind::CNOT: want.apply_cnot(g.a, g.b); break;
                    case GateKind::CZ: want.apply_cz(g.a, g.b); break;
                    default: break;
                }
            }
            CHECK(DenseState::equal_up_to_phase(to_dense(st), want));
        }
    }
}

TEST_CASE("measure_single: deterministic and random cases") {
    Rng rng(31);
    StabilizerState zero(1);
    auto [o, det] = zero.measure_single(0, 'Z', rng);
    CHECK(o == 0);
    CHECK(det);

    int ones = 0;
    for (int trial = 0; trial < 2000; trial++) {
        StabilizerState plus = StabilizerState::plus_state(1);
        auto [oz, detz] = plus.measure_single(0, 'Z', rng);
        CHECK_FALSE(detz);
        ones += oz;
    }
    CHECK(ones > 800);
    CHECK(ones < 1200);

    // X measurement of one end of an edge graph state, residual checked
    // against the dense oracle.
    for (uint64_t seed = 0; seed < 8; seed++) {
        Rng r(seed);
        StabilizerState edge = StabilizerState::from_graph(path_graph(2));
        auto [ox, detx] = edge.measure_single(0, 'X', r);
        CHECK_FALSE(detx);
        DenseState ref = to_dense(StabilizerState::from_graph(path_graph(2)));
        // Project qubit 0 onto the X eigenstate with outcome ox.
        DenseState proj = ref;
        DenseState flipped = ref;
        flipped.apply_x(0);
        auto& amps = proj.mutable_amps();
        double norm2 = 0;
        for (size_t i = 0; i < amps.size(); i++) {
            amps[i] = 0.5 * (amps[i] + (ox ? -1.0 : 1.0) * flipped.amps()[i]);
            norm2 += std::norm(amps[i]);
        }
        for (auto& a : amps) a /= std::sqrt(norm2);
        CHECK(DenseState::equal_up_to_phase(to_dense(edge), proj));
    }
}

TEST_CASE("measure_multi: deterministic Z outcomes on |0^m>") {
    Rng rng(41);
    StabilizerState s(4);
    auto rec = s.measure_multi({0, 1, 2, 3}, {'Z', 'Z', 'Z', 'Z'}, rng);
    for (size_t i = 0; i < 4; i++) {
        CHECK(rec.outcomes[i] == 0);
        CHECK(rec.deterministic[i]);
    }
}

TEST_CASE("measure_multi: Bell pair correlations") {
    for (uint64_t seed = 0; seed < 32; seed++) {
        Rng rng(seed);
        StabilizerState bell(2);
        bell.apply_gate_inplace(Gate::h(0));
        bell.apply_gate_inplace(Gate::cnot(0, 1));
        auto rec = bell.measure_multi({0, 1}, {'Z', 'Z'}, rng);
        CHECK_FALSE(rec.deterministic[0]);
        CHECK(rec.deterministic[1]);
        CHECK(rec.outcomes[0] == rec.outcomes[1]);
    }
}

TEST_CASE("measure_multi: X/Y pattern on 4-qubit line matches dense oracle distribution") {
    std::vector<size_t> qubits = {0, 1, 2, 3};
    std::vector<char> bases = {'X', 'Y', 'Y', 'X'};
    DenseState dense = to_dense(StabilizerState::from_graph(path_graph(4)));
    std::vector<double> want = dense.measurement_distribution(qubits, bases);
    std::vector<uint64_t> counts(16, 0);
    Rng rng(51);
    const int kSamples = 20000;
    for (int i = 0; i < kSamples; i++) {
        StabilizerState s = StabilizerState::from_graph(path_graph(4));
        auto rec = s.measure_multi(qubits, bases, rng);
        size_t idx = 0;
        for (size_t k = 0; k < 4; k++) idx |= size_t(rec.outcomes[k]) << k;
        counts[idx]++;
    }
    for (size_t i = 0; i < 16; i++)
        if (want[i] < 1e-12) CHECK(counts[i] == 0);
    CHECK(chi_square_gof(counts, want) > 0.001);
}

TEST_CASE("postselect basics and emptiness") {
    StabilizerState zero(1);
    CHECK(zero.postselect({0}, {'Z'}, {0}));
    StabilizerState zero2(1);
    CHECK_FALSE(zero2.postselect({0}, {'Z'}, {1}));

    StabilizerState bell(2);
    bell.apply_gate_inplace(Gate::h(0));
    bell.apply_gate_inplace(Gate::cnot(0, 1));
    StabilizerState b1 = bell;
    CHECK_FALSE(b1.postselect({0, 1}, {'Z', 'Z'}, {0, 1}));
    StabilizerState b2 = bell;
    CHECK(b2.postselect({0, 1}, {'Z', 'Z'}, {0, 0}));
    CHECK(b2.is_stabilizer(PauliString::from_letters("ZI")) == StabKind::Plus);
    CHECK(b2.is_stabilizer(PauliString::from_letters("IZ")) == StabKind::Plus);
}

TEST_CASE("measure_multi then postselect with the same outcomes agrees") {
    Rng rng(61);
    for (int trial = 0; trial < 50; trial++) {
        size_t m = 2 + rng.next_below(4);
        auto gates = random_gates(m, 10, rng);
        StabilizerState s(m);
        s.apply_clifford_inplace(CliffordTableau::from_gates(m, gates));
        StabilizerState copy = s;
        std::vector<size_t> qubits;
        std::vector<char> bases;
        for (size_t q = 0; q < m; q++) {
            if (rng.next_bit()) {
                qubits.push_back(q);
                bases.push_back("XYZ"[rng.next_below(3)]);
            }
        }
        auto rec = s.measure_multi(qubits, bases, rng);
        CHECK(copy.postselect(qubits, bases, rec.outcomes));
        CHECK(states_equal_mod_pauli(copy, s));
        for (const auto& g : copy.generators()) {
            StabKind want = g.sign_bit() ? StabKind::Minus : StabKind::Plus;
            CHECK(s.is_stabilizer(g) == want);
        }
    }
}

TEST_CASE("deterministic outcomes do not depend on the seed") {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Rng rng(seed);
        StabilizerState s(3);
        s.apply_gate_inplace(Gate::h(0));
        s.apply_gate_inplace(Gate::cnot(0, 1));
        auto rec = s.measure_multi({0, 1, 2}, {'Z', 'Z', 'Z'}, rng);
        CHECK(rec.outcomes[1] == rec.outcomes[0]);  // copy of the random bit
        CHECK(rec.outcomes[2] == 0);                // untouched |0>
        CHECK(rec.deterministic[2]);
    }
}

TEST_CASE("is_stabilizer: basics and dense cross-check") {
    StabilizerState zero(1);
    CHECK(zero.is_stabilizer(PauliString::from_letters("Z")) == StabKind::Plus);
    CHECK(zero.is_stabilizer(PauliString::from_letters("X")) == StabKind::NonStabilizer);

    Rng rng(71);
    for (int trial = 0; trial < 1000; trial++) {
        size_t m = 1 + rng.next_below(4);
        StabilizerState s(m);
        s.apply_clifford_inplace(CliffordTableau::random(m, rng));
        PauliString p(BitVec::random(m, rng), BitVec::random(m, rng), 0);
        StabKind kind = s.is_stabilizer(p);
        double e = to_dense(s).expectation(p.positive_rep()).real();
        if (kind == StabKind::Plus) CHECK(e == doctest::Approx(1.0));
        if (kind == StabKind::Minus) CHECK(e == doctest::Approx(-1.0));
        if (kind == StabKind::NonStabilizer) CHECK(e == doctest::Approx(0.0));
    }
}

TEST_CASE("support_sample: degenerate C blocks") {
    Rng rng(81);
    BitVec z(5);
    z.set(2, true);
    BitMat zero(5, 5);
    for (int i = 0; i < 20; i++) CHECK(support_sample(z, zero, rng) == z);

    std::map<std::string, int> seen;
    for (int i = 0; i < 4000; i++) seen[support_sample(z, BitMat::identity(5), rng).str()]++;
    CHECK(seen.size() == 32);  // affine bijection: all strings occur
}

TEST_CASE("support_sample: uniform over the dense-oracle support of a graph state") {
    // Tableau of the X/Y measurement circuit on a path graph: C = A + diag(b).
    size_t n = 4;
    BitMat adj = path_graph(n);
    BitVec b(n);
    b.set(1, true);
    b.set(2, true);
    BitMat c = adj;
    for (size_t i = 0; i < n; i++)
        if (b.get(i)) c.flip(i, i);

    DenseState state = to_dense(StabilizerState::from_graph(adj));
    std::vector<size_t> qubits = {0, 1, 2, 3};
    std::vector<char> bases = {'X', 'Y', 'Y', 'X'};
    std::vector<double> dist = state.measurement_distribution(qubits, bases);

    // A support element: take any outcome with positive probability.
    BitVec z(n);
    for (size_t idx = 0; idx < dist.size(); idx++) {
        if (dist[idx] > 1e-9) {
            for (size_t k = 0; k < n; k++) z.set(k, (idx >> k) & 1);
            break;
        }
    }
    Rng rng(91);
    std::vector<uint64_t> counts(16, 0);
    for (int i = 0; i < 10000; i++) {
        BitVec s = support_sample(z, c, rng);
        size_t idx = 0;
        for (size_t k = 0; k < n; k++) idx |= size_t(s.get(k)) << k;
        counts[idx]++;
    }
    for (size_t idx = 0; idx < 16; idx++)
        if (dist[idx] < 1e-12) CHECK(counts[idx] == 0);
    CHECK(chi_square_gof(counts, dist) > 0.001);
}

TEST_CASE("measurement record serializes to flat json") {
    MeasurementRecord rec;
    rec.push(3, 'X', 1, false);
    rec.push(5, 'Y', 0, true);
    CHECK(rec.to_json() ==
          "{\"qubits\":[3,5],\"bases\":[\"X\",\"Y\"],\"outcomes\":[1,0],"
          "\"deterministic\":[false,true]}");
}

TEST_CASE("state dump format") {
    StabilizerState s = StabilizerState::from_graph(path_graph(2));
    CHECK(s.str() == "2\n+XZ\n+ZX\n");
}
