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

#include "cliffsim/gf2.hpp"

#include "doctest.h"

using namespace cliffsim;

TEST_CASE("BitMat inverse round-trips") {
    Rng rng(42);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng.next_below(20);
        BitMat m = BitMat::random_invertible(n, rng);
        auto inv = m.inverse();
        REQUIRE(inv.has_value());
        CHECK(m * *inv == BitMat::identity(n));
        CHECK(*inv * m == BitMat::identity(n));
    }
}

TEST_CASE("BitMat rank of identity and singular matrices") {
    CHECK(BitMat::identity(7).rank() == 7);
    BitMat zero(5, 5);
    CHECK(zero.rank() == 0);
    CHECK_FALSE(zero.inverse().has_value());
    BitMat rect(3, 6);
    rect.set(0, 1, true);
    rect.set(1, 1, true);
    rect.set(2, 4, true);
    CHECK(rect.rank() == 2);
}

TEST_CASE("solve_left finds solutions and detects inconsistency") {
    Rng rng(9);
    for (int trial = 0; trial < 100; trial++) {
        size_t rows = 1 + rng.next_below(12), cols = 1 + rng.next_below(12);
        BitMat m = BitMat::random(rows, cols, rng);
        BitVec x = BitVec::random(rows, rng);
        BitVec b = m.mul_left(x);
        auto sol = m.solve_left(b);
        REQUIRE(sol.has_value());
        CHECK(m.mul_left(*sol) == b);
    }
    // x * M = e_0 with M having empty first column is inconsistent.
    BitMat m(3, 3);
    m.set(0, 1, true);
    m.set(1, 2, true);
    BitVec b(3);
    b.set(0, true);
    CHECK_FALSE(m.solve_left(b).has_value());
}

TEST_CASE("random_symmetric is symmetric, random_invertible invertible") {
    Rng rng(1);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 1 + rng.next_below(10);
        CHECK(BitMat::random_symmetric(n, rng).is_symmetric());
        CHECK(BitMat::random_invertible(n, rng).rank() == n);
    }
}

TEST_CASE("BitVec dot and xor") {
    BitVec a(130), b(130);
    a.set(0, true);
    a.set(128, true);
    b.set(128, true);
    CHECK(a.dot(b));
    b.set(0, true);
    CHECK_FALSE(a.dot(b));
    a ^= b;
    CHECK_FALSE(a.any());
}
