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

#include "cliffsim/contextuality.hpp"

#include <set>

#include "doctest.h"
#include "cliffsim/stabilizer.hpp"

using namespace cliffsim;

namespace {

PauliString canon(const char* letters) {
    return PauliString::from_letters(letters).canonical_rep();
}

// Measures the three paulis of one row/column program on a copy of psi by
// applying the basis change and reading both qubits in Z.
std::array<int8_t, 3> measure_program(const StabilizerState& psi, C2Coset u,
                                      const std::array<PauliString, 3>& triple, Rng& rng) {
    CliffordTableau t = Clifford2::to_tableau(u);
    CliffordTableau tinv = inverse(t);
    StabilizerState s = psi;
    s.apply_clifford_inplace(t);
    auto [r0, d0] = s.measure_single(0, 'Z', rng);
    auto [r1, d1] = s.measure_single(1, 'Z', rng);
    std::array<uint8_t, 3> raw = {r0, r1, uint8_t(r0 ^ r1)};
    std::array<PauliString, 3> zs = {canon("ZI"), canon("IZ"), canon("ZZ")};
    std::array<int8_t, 3> out{};
    std::array<bool, 3> filled{};
    for (int k = 0; k < 3; k++) {
        // Which triple element does this Z pattern measure, and with what sign?
        PauliString back = tinv.conjugate(zs[k].positive_rep());
        int which = -1;
        for (int j = 0; j < 3; j++)
            if (back.same_string(triple[j])) which = j;
        REQUIRE(which >= 0);
        out[which] = (raw[k] ^ back.sign_bit()) ? -1 : 1;
        filled[which] = true;
    }
    REQUIRE((filled[0] && filled[1] && filled[2]));
    return out;
}

// Honest six-program magic-square tables for a state, one fresh copy each.
void honest_square_tables(const StabilizerState& psi, SquareOutcomes& rows, SquareOutcomes& cols,
                          Rng& rng) {
    const MagicSquare& sq = MagicSquare::standard();
    for (size_t i = 0; i < 3; i++) {
        std::array<PauliString, 3> row_triple = {sq.grid[i][0], sq.grid[i][1], sq.grid[i][2]};
        rows[i] = measure_program(psi, row_col_measurement_program(i), row_triple, rng);
        std::array<PauliString, 3> col_triple = {sq.grid[0][i], sq.grid[1][i], sq.grid[2][i]};
        cols[i] = measure_program(psi, row_col_measurement_program(3 + i), col_triple, rng);
    }
}

}  // namespace

TEST_CASE("fifteen Pauli lines with the stated structure") {
    const auto& lines = enumerate_pauli_lines();
    CHECK(lines.size() == 15);
    // Each canonical Pauli lies in exactly 3 lines.
    std::array<int, 16> counts{};
    for (const auto& line : lines)
        for (const auto& p : line.paulis) counts[canonical2_index(p)]++;
    for (size_t v = 1; v < 16; v++) CHECK(counts[v] == 3);
    // The disjoint five-line partition from the paper is present.
    std::vector<std::set<std::string>> partition = {
        {"+XI", "+IX", "+XX"}, {"+YI", "+IY", "+YY"}, {"+ZI", "+IZ", "+ZZ"},
        {"+XY", "+YZ", "+ZX"}, {"+YX", "+ZY", "+XZ"}};
    for (const auto& want : partition) {
        bool found = false;
        for (const auto& line : lines) {
            std::set<std::string> names;
            for (const auto& p : line.paulis) names.insert(p.positive_rep().str());
            if (names == want) found = true;
        }
        CHECK(found);
    }
    // {XX, YY, ZZ} has sign -1.
    for (const auto& line : lines)
        if (line.contains(canon("XX")) && line.contains(canon("YY"))) CHECK(line.sign == -1);
}

TEST_CASE("violated_lines: all-plus assignment violates exactly the three negative lines") {
    PauliAssignment nu{};
    for (size_t v = 1; v < 16; v++) nu[v] = 1;
    auto bad = violated_lines(nu);
    CHECK(bad.size() == 3);
    std::vector<std::set<std::string>> want = {
        {"+XX", "+YY", "+ZZ"}, {"+XY", "+YZ", "+ZX"}, {"+XZ", "+YX", "+ZY"}};
    for (const auto& line : bad) {
        std::set<std::string> names;
        for (const auto& p : line.paulis) names.insert(p.positive_rep().str());
        CHECK(std::find(want.begin(), want.end(), names) != want.end());
        CHECK(line.sign == -1);
    }
    PauliAssignment partial{};
    CHECK_THROWS(violated_lines(partial));
}

TEST_CASE("minimum violated lines over all assignments is 3") {
    size_t best = 15;
    for (uint32_t bits = 0; bits < (1u << 15); bits++) {
        PauliAssignment nu{};
        for (size_t v = 1; v < 16; v++) nu[v] = ((bits >> (v - 1)) & 1) ? -1 : 1;
        best = std::min(best, violated_lines(nu).size());
    }
    CHECK(best == 3);
}

TEST_CASE("stabilizer-induced assignments never violate an all-stabilizer line") {
    Rng rng(31);
    for (int trial = 0; trial < 50; trial++) {
        StabilizerState psi(2);
        psi.apply_clifford_inplace(CliffordTableau::random(2, rng));
        PauliAssignment nu{};
        for (size_t v = 1; v < 16; v++) {
            StabKind kind = psi.is_stabilizer(canonical2_from_index(v));
            if (kind == StabKind::Plus) nu[v] = 1;
            else if (kind == StabKind::Minus) nu[v] = -1;
            else nu[v] = rng.next_bit() ? 1 : -1;
        }
        for (const auto& line : violated_lines(nu)) {
            bool all_stab = true;
            for (const auto& p : line.paulis)
                all_stab = all_stab && psi.is_stabilizer(p) != StabKind::NonStabilizer;
            CHECK_FALSE(all_stab);
        }
    }
}

TEST_CASE("magic square structure") {
    CHECK(MagicSquare::standard().check_structure());
    Rng rng(5);
    for (int trial = 0; trial < 20; trial++)
        CHECK(MagicSquare::standard().conjugated(Clifford2::instance().random_coset(rng)).is_valid_context());
}

TEST_CASE("row/column measurement programs map triples to Z pairs") {
    const MagicSquare& sq = MagicSquare::standard();
    // Row 0 is the plain Bell basis change.
    CHECK(row_col_measurement_program(0) == Clifford2::from_gates({Gate::cnot(0, 1), Gate::h(0)}));
    for (size_t idx = 0; idx < 6; idx++) {
        C2Coset u = row_col_measurement_program(idx);
        std::set<std::string> images;
        for (int k = 0; k < 3; k++) {
            PauliString p = idx < 3 ? sq.grid[idx][k] : sq.grid[k][idx - 3];
            images.insert(Clifford2::conj_canonical(u, p).str());
        }
        CHECK(images == std::set<std::string>{"+ZI", "+IZ", "+ZZ"});
    }
}

TEST_CASE("line measurement programs work for all 15 lines") {
    for (const auto& line : enumerate_pauli_lines()) {
        C2Coset u = line_measurement_program(line);
        CHECK(Clifford2::conj_canonical(u, line.paulis[0]).same_string(canon("ZI")));
        CHECK(Clifford2::conj_canonical(u, line.paulis[1]).same_string(canon("IZ")));
        CHECK(Clifford2::conj_canonical(u, line.paulis[2]).same_string(canon("ZZ")));
    }
}

TEST_CASE("measuring |00> through the column-2 program gives the deterministic ZZ outcome") {
    Rng rng(6);
    const MagicSquare& sq = MagicSquare::standard();
    for (int rep = 0; rep < 20; rep++) {
        StabilizerState zero(2);
        std::array<PauliString, 3> triple = {sq.grid[0][2], sq.grid[1][2], sq.grid[2][2]};
        auto outcomes = measure_program(zero, row_col_measurement_program(5), triple, rng);
        // grid[0][2] = ZZ stabilizes |00> with +1.
        CHECK(outcomes[0] == 1);
    }
}

TEST_CASE("extract_nonstab_square: honest prover on |00> returns a non-stabilizer") {
    Rng rng(7);
    for (int trial = 0; trial < 1000; trial++) {
        StabilizerState zero(2);
        SquareOutcomes rows{}, cols{};
        honest_square_tables(zero, rows, cols, rng);
        PauliString p = extract_nonstab_square(MagicSquare::standard(), rows, cols);
        CHECK(zero.is_stabilizer(p) == StabKind::NonStabilizer);
        CHECK_FALSE(p.same_string(canon("ZI")));
        CHECK_FALSE(p.same_string(canon("IZ")));
        CHECK_FALSE(p.same_string(canon("ZZ")));
    }
}

TEST_CASE("extract_nonstab_square: engineered fixtures") {
    const MagicSquare& sq = MagicSquare::standard();
    // Exactly one disagreement at grid[2][2].
    SquareOutcomes rows = {{{1, 1, -1}, {1, 1, -1}, {1, 1, -1}}};
    SquareOutcomes cols = {{{1, 1, 1}, {1, 1, 1}, {-1, -1, 1}}};
    CHECK(extract_nonstab_square(sq, rows, cols).same_string(sq.grid[2][2]));

    // Disagreements confined to the first row {XX, YY, ZZ}.
    SquareOutcomes rows2 = {{{-1, -1, -1}, {-1, -1, -1}, {-1, -1, -1}}};
    SquareOutcomes cols2 = {{{1, -1, -1}, {1, -1, -1}, {1, -1, -1}}};
    PauliString got = extract_nonstab_square(sq, rows2, cols2);
    bool in_first_row = got.same_string(sq.grid[0][0]) || got.same_string(sq.grid[0][1]) ||
                        got.same_string(sq.grid[0][2]);
    CHECK(in_first_row);

    // Malformed: a row violating its own product constraint.
    SquareOutcomes badrows = rows;
    badrows[0] = {1, 1, 1};
    CHECK_THROWS_AS(extract_nonstab_square(sq, badrows, cols), MalformedProverError);
}

TEST_CASE("pentagram structure and contextuality") {
    const Pentagram& p = Pentagram::standard();
    CHECK(p.check_structure());
    CHECK_FALSE(p.has_satisfying_assignment());
    int negative = 0;
    for (int l = 0; l < 5; l++)
        if (p.line_signs[l] == -1) negative++;
    CHECK(negative == 1);
}

TEST_CASE("extract_nonstab_pentagram: honest prover on |+++>") {
    Rng rng(8);
    const Pentagram& pent = Pentagram::standard();
    for (int trial = 0; trial < 500; trial++) {
        PentagramOutcomes outcomes{};
        for (int l = 0; l < 5; l++) {
            StabilizerState plus = StabilizerState::plus_state(3);  // fresh copy per line
            for (int k = 0; k < 4; k++) {
                auto [o, det] = plus.measure_pauli(pent.nodes[pent.lines[l][k]], rng);
                outcomes[l][k] = o ? -1 : 1;
            }
        }
        PauliString got = extract_nonstab_pentagram(pent, outcomes);
        StabilizerState fresh = StabilizerState::plus_state(3);
        CHECK(fresh.is_stabilizer(got) == StabKind::NonStabilizer);
    }
}

TEST_CASE("extract_nonstab_pentagram: single-disagreement fixture and malformed input") {
    const Pentagram& pent = Pentagram::standard();
    // Build self-consistent tables from a global assignment, then repair one
    // line so exactly one node disagrees between its two lines.
    PentagramOutcomes outcomes{};
    for (int l = 0; l < 5; l++) {
        // Assign first three nodes +1 and force the fourth to match the sign.
        outcomes[l] = {1, 1, 1, pent.line_signs[l]};
    }
    // Node order puts each line's forced node last; disagreements happen where
    // a forced node appears unforced on its other line.
    PauliString got = extract_nonstab_pentagram(pent, outcomes);
    CHECK(pent.node_index(got).has_value());

    PentagramOutcomes bad{};
    for (int l = 0; l < 5; l++) bad[l] = {1, 1, 1, 1};
    CHECK_THROWS_AS(extract_nonstab_pentagram(pent, bad), MalformedProverError);
}

TEST_CASE("majority_line_extract: honest tables never return the stabilizer line") {
    Rng rng(9);
    const auto& lines = enumerate_pauli_lines();
    for (int trial = 0; trial < 200; trial++) {
        StabilizerState zero(2);  // stabilizer line {ZI, IZ, ZZ}
        LineOutcomeTables tables{};
        for (size_t k = 0; k < 15; k++) {
            StabilizerState copy = zero;
            for (int j = 0; j < 3; j++) {
                auto [o, det] = copy.measure_pauli(lines[k].paulis[j], rng);
                tables[k][j] = o ? -1 : 1;
            }
        }
        SUBCASE("") {}
        // Optionally corrupt a single outcome; one error cannot flip a
        // majority vote.
        if (trial % 2 == 1) {
            size_t k = rng.next_below(15), j = rng.next_below(3);
            tables[k][j] = int8_t(-tables[k][j]);
        }
        PauliLine got = majority_line_extract(tables, rng);
        bool is_stab_line = got.contains(canon("ZI")) && got.contains(canon("IZ"));
        CHECK_FALSE(is_stab_line);
    }
}

TEST_CASE("majority_line_extract: all-plus tables return a negative line") {
    Rng rng(10);
    LineOutcomeTables tables{};
    for (size_t k = 0; k < 15; k++) tables[k] = {1, 1, 1};
    for (int rep = 0; rep < 20; rep++) {
        PauliLine got = majority_line_extract(tables, rng);
        CHECK(got.sign == -1);
    }
}

TEST_CASE("every conjugated magic square intersects every Pauli line") {
    CHECK(square_line_intersection_check());
}
