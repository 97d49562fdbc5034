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

#include "cliffsim/pauli.hpp"

#include <array>
#include <complex>

#include "doctest.h"
#include "cliffsim/rng.hpp"

using namespace cliffsim;

namespace {

using Mat2 = std::array<std::complex<double>, 4>;

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat_scale(const Mat2& a, std::complex<double> s) {
    return {a[0] * s, a[1] * s, a[2] * s, a[3] * s};
}

bool mat_eq(const Mat2& a, const Mat2& b) {
    for (int i = 0; i < 4; i++)
        if (std::abs(a[i] - b[i]) > 1e-12) return false;
    return true;
}

const std::complex<double> kI{0, 1};
const Mat2 kIdent{1, 0, 0, 1};
const Mat2 kX{0, 1, 1, 0};
const Mat2 kY{0, -kI, kI, 0};
const Mat2 kZ{1, 0, 0, -1};

// Dense 2x2 oracle for a one-qubit PauliString.
Mat2 to_matrix(const PauliString& p) {
    REQUIRE(p.num_qubits() == 1);
    Mat2 m = kIdent;
    if (p.x_bits().get(0)) m = mat_mul(m, kX);
    if (p.z_bits().get(0)) m = mat_mul(m, kZ);
    std::complex<double> ph = 1;
    for (int k = 0; k < p.phase(); k++) ph *= kI;
    return mat_scale(m, ph);
}

PauliString one_qubit(bool x, bool z, uint8_t phase) {
    BitVec xv(1), zv(1);
    xv.set(0, x);
    zv.set(0, z);
    return PauliString(xv, zv, phase);
}

}  // namespace

TEST_CASE("pauli_mul: X * Y = iZ") {
    PauliString x = PauliString::from_letters("X");
    PauliString y = PauliString::from_letters("Y");
    PauliString prod = pauli_mul(x, y);
    PauliString iz = PauliString::from_letters("Z");
    iz.set_phase(1);
    CHECK(prod == iz);
    CHECK(prod.str() == "+iZ");
}

TEST_CASE("pauli_mul: identity is neutral") {
    Rng rng(7);
    for (int trial = 0; trial < 50; trial++) {
        size_t m = rng.next_below(5);
        PauliString p(BitVec::random(m, rng), BitVec::random(m, rng), uint8_t(rng.next_below(4)));
        PauliString id = PauliString::identity(m);
        CHECK(pauli_mul(id, p) == p);
        CHECK(pauli_mul(p, id) == p);
    }
}

TEST_CASE("pauli_mul: (XZ)^2 = -I") {
    PauliString xz = one_qubit(true, true, 0);
    PauliString sq = pauli_mul(xz, xz);
    CHECK(sq.phase() == 2);
    CHECK_FALSE(sq.x_bits().get(0));
    CHECK_FALSE(sq.z_bits().get(0));
}

TEST_CASE("pauli_mul: full 1-qubit table matches dense 2x2 oracle") {
    for (int a = 0; a < 16; a++) {
        for (int b = 0; b < 16; b++) {
            PauliString pa = one_qubit(a & 1, (a >> 1) & 1, uint8_t(a >> 2));
            PauliString pb = one_qubit(b & 1, (b >> 1) & 1, uint8_t(b >> 2));
            Mat2 want = mat_mul(to_matrix(pa), to_matrix(pb));
            CHECK(mat_eq(to_matrix(pauli_mul(pa, pb)), want));
        }
    }
}

TEST_CASE("pauli_mul: associativity, exhaustive for m = 1") {
    for (int a = 0; a < 16; a++)
        for (int b = 0; b < 16; b++)
            for (int c = 0; c < 16; c++) {
                PauliString pa = one_qubit(a & 1, (a >> 1) & 1, uint8_t(a >> 2));
                PauliString pb = one_qubit(b & 1, (b >> 1) & 1, uint8_t(b >> 2));
                PauliString pc = one_qubit(c & 1, (c >> 1) & 1, uint8_t(c >> 2));
                CHECK(pauli_mul(pauli_mul(pa, pb), pc) == pauli_mul(pa, pauli_mul(pb, pc)));
            }
}

TEST_CASE("pauli_mul: associativity on random triples") {
    Rng rng(11);
    for (int trial = 0; trial < 200; trial++) {
        size_t m = 1 + rng.next_below(80);
        PauliString a(BitVec::random(m, rng), BitVec::random(m, rng), uint8_t(rng.next_below(4)));
        PauliString b(BitVec::random(m, rng), BitVec::random(m, rng), uint8_t(rng.next_below(4)));
        PauliString c(BitVec::random(m, rng), BitVec::random(m, rng), uint8_t(rng.next_below(4)));
        CHECK(pauli_mul(pauli_mul(a, b), c) == pauli_mul(a, pauli_mul(b, c)));
    }
}

TEST_CASE("commutes: X vs Z anticommute, self-commutation") {
    PauliString x = PauliString::from_letters("X");
    PauliString z = PauliString::from_letters("Z");
    CHECK_FALSE(commutes(x, z));
    CHECK(commutes(x, x));
    CHECK(commutes(z, z));
}

TEST_CASE("commutes: XX vs ZZ commute") {
    CHECK(commutes(PauliString::from_letters("XX"), PauliString::from_letters("ZZ")));
}

TEST_CASE("commutes matches product phase relation, exhaustive m <= 2") {
    // a, b commute iff ab and ba agree; anticommute iff phases differ by 2.
    for (size_t m = 1; m <= 2; m++) {
        size_t n = size_t{1} << (2 * m);
        for (size_t a = 0; a < n * 4; a++) {
            for (size_t b = 0; b < n * 4; b++) {
                PauliString pa(m), pb(m);
                {
                    BitVec x(m), z(m);
                    for (size_t q = 0; q < m; q++) {
                        x.set(q, (a >> (2 * q)) & 1);
                        z.set(q, (a >> (2 * q + 1)) & 1);
                    }
                    pa = PauliString(x, z, uint8_t(a >> (2 * m)));
                }
                {
                    BitVec x(m), z(m);
                    for (size_t q = 0; q < m; q++) {
                        x.set(q, (b >> (2 * q)) & 1);
                        z.set(q, (b >> (2 * q + 1)) & 1);
                    }
                    pb = PauliString(x, z, uint8_t(b >> (2 * m)));
                }
                PauliString ab = pauli_mul(pa, pb);
                PauliString ba = pauli_mul(pb, pa);
                if (commutes(pa, pb)) {
                    CHECK(ab == ba);
                } else {
                    CHECK(((ab.phase() - ba.phase()) & 3) == 2);
                    CHECK(ab.same_string(ba));
                }
            }
        }
    }
}

TEST_CASE("canonical_rep erases phase and is idempotent") {
    PauliString minus_y = *PauliString::parse("-Y");
    CHECK(minus_y.phase() == 3);  // -Y = i^3 XZ
    PauliString rep = canonical_rep(minus_y);
    CHECK(rep.phase() == 0);
    CHECK(rep.same_string(minus_y));

    PauliString ixz = *PauliString::parse("+iXZ");
    PauliString rep2 = canonical_rep(ixz);
    CHECK(rep2.phase() == 0);

    Rng rng(3);
    for (int trial = 0; trial < 1000; trial++) {
        size_t m = rng.next_below(20);
        PauliString p(BitVec::random(m, rng), BitVec::random(m, rng), uint8_t(rng.next_below(4)));
        CHECK(canonical_rep(canonical_rep(p)) == canonical_rep(p));
    }
}

TEST_CASE("positive_rep is the Hermitian literal representative") {
    PauliString y = PauliString::from_letters("Y");
    CHECK(y.positive_rep() == y);
    CHECK(y.sign_bit() == 0);
    PauliString my = *PauliString::parse("-YXY");
    CHECK(my.sign_bit() == 1);
    CHECK(my.positive_rep() == *PauliString::parse("+YXY"));
}

TEST_CASE("text form round-trips") {
    for (const char* text : {"+XYZ", "-IZ", "+iY", "-iXZY", "+", "-i", "+IIII"}) {
        auto p = PauliString::parse(text);
        REQUIRE(p.has_value());
        CHECK(p->str() == text);
    }
    Rng rng(5);
    for (int trial = 0; trial < 200; trial++) {
        size_t m = rng.next_below(10);
        PauliString p(BitVec::random(m, rng), BitVec::random(m, rng), uint8_t(rng.next_below(4)));
        auto q = PauliString::parse(p.str());
        REQUIRE(q.has_value());
        CHECK(*q == p);
    }
    CHECK_FALSE(PauliString::parse("+XQ").has_value());
}

TEST_CASE("m = 0 strings are phases") {
    PauliString a = PauliString::identity(0);
    PauliString b(BitVec(0), BitVec(0), 3);
    CHECK(pauli_mul(a, b) == b);
    CHECK(pauli_mul(b, b).phase() == 2);
    CHECK(commutes(a, b));
}
