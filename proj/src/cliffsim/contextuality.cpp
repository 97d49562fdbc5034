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

#include <algorithm>
#include <set>

namespace cliffsim {

namespace {

// Sign of the Hermitian product of commuting canonical Paulis: +1 if the
// product of positive representatives is +W, -1 if -W.
int8_t product_sign(const std::vector<PauliString>& ps) {
    PauliString acc = PauliString::identity(ps[0].num_qubits());
    for (const auto& p : ps) acc = pauli_mul(acc, p.positive_rep());
    return acc.sign_bit() ? -1 : 1;
}

PauliString canon(const char* letters) {
    return PauliString::from_letters(letters).canonical_rep();
}

}  // namespace

bool PauliLine::contains(const PauliString& p) const {
    for (const auto& q : paulis)
        if (q.same_string(p)) return true;
    return false;
}

size_t canonical2_index(const PauliString& p) {
    size_t v = 0;
    if (p.x_bits().get(0)) v |= 1;
    if (p.x_bits().get(1)) v |= 2;
    if (p.z_bits().get(0)) v |= 4;
    if (p.z_bits().get(1)) v |= 8;
    return v;
}

PauliString canonical2_from_index(size_t idx) {
    BitVec x(2), z(2);
    x.set(0, idx & 1);
    x.set(1, (idx >> 1) & 1);
    z.set(0, (idx >> 2) & 1);
    z.set(1, (idx >> 3) & 1);
    return PauliString(x, z, 0);
}

const std::vector<PauliLine>& enumerate_pauli_lines() {
    static const std::vector<PauliLine> lines = [] {
        std::vector<PauliLine> out;
        std::set<std::array<size_t, 3>> seen;
        for (size_t a = 1; a < 16; a++) {
            for (size_t b = a + 1; b < 16; b++) {
                PauliString pa = canonical2_from_index(a), pb = canonical2_from_index(b);
                if (!commutes(pa, pb)) continue;
                PauliString pc = pauli_mul(pa, pb).canonical_rep();
                size_t c = canonical2_index(pc);
                if (c == 0 || c == a || c == b) continue;
                std::array<size_t, 3> key = {a, b, c};
                std::sort(key.begin(), key.end());
                if (!seen.insert(key).second) continue;
                PauliLine line;
                line.paulis = {canonical2_from_index(key[0]), canonical2_from_index(key[1]),
                               canonical2_from_index(key[2])};
                line.sign = product_sign({line.paulis[0], line.paulis[1], line.paulis[2]});
                out.push_back(line);
            }
        }
        std::sort(out.begin(), out.end(), [](const PauliLine& x, const PauliLine& y) {
            return canonical2_index(x.paulis[0]) != canonical2_index(y.paulis[0])
                       ? canonical2_index(x.paulis[0]) < canonical2_index(y.paulis[0])
                       : canonical2_index(x.paulis[1]) < canonical2_index(y.paulis[1]);
        });
        return out;
    }();
    return lines;
}

std::vector<PauliLine> violated_lines(const PauliAssignment& assignment) {
    for (size_t v = 1; v < 16; v++)
        if (assignment[v] != 1 && assignment[v] != -1)
            throw std::invalid_argument("violated_lines: partial assignment");
    std::vector<PauliLine> out;
    for (const PauliLine& line : enumerate_pauli_lines()) {
        int prod = 1;
        for (const auto& p : line.paulis) prod *= assignment[canonical2_index(p)];
        if (prod != line.sign) out.push_back(line);
    }
    return out;
}

const MagicSquare& MagicSquare::standard() {
    static const MagicSquare square = [] {
        MagicSquare s;
        s.grid = {{{canon("XX"), canon("YY"), canon("ZZ")},
                   {canon("YZ"), canon("ZX"), canon("XY")},
                   {canon("ZY"), canon("XZ"), canon("YX")}}};
        return s;
    }();
    return square;
}

MagicSquare MagicSquare::conjugated(C2Coset u) const {
    MagicSquare out;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) out.grid[i][j] = Clifford2::conj_canonical(u, grid[i][j]);
    return out;
}

int8_t MagicSquare::row_sign(size_t i) const {
    return product_sign({grid[i][0], grid[i][1], grid[i][2]});
}

int8_t MagicSquare::col_sign(size_t j) const {
    return product_sign({grid[0][j], grid[1][j], grid[2][j]});
}

bool MagicSquare::check_structure() const {
    if (!is_valid_context()) return false;
    for (int i = 0; i < 3; i++)
        if (row_sign(i) != -1 || col_sign(i) != 1) return false;
    return true;
}

bool MagicSquare::is_valid_context() const {
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            if (!commutes(grid[i][j], grid[i][(j + 1) % 3])) return false;
            if (!commutes(grid[j][i], grid[(j + 1) % 3][i])) return false;
        }
    }
    int rows = row_sign(0) * row_sign(1) * row_sign(2);
    int cols = col_sign(0) * col_sign(1) * col_sign(2);
    return rows != cols;
}

PauliString extract_nonstab_square(const MagicSquare& square, const SquareOutcomes& row_outcomes,
                                   const SquareOutcomes& col_outcomes) {
    for (int i = 0; i < 3; i++) {
        int rp = row_outcomes[i][0] * row_outcomes[i][1] * row_outcomes[i][2];
        if (rp != square.row_sign(i)) throw MalformedProverError("row outcomes violate the row product");
        int cp = col_outcomes[i][0] * col_outcomes[i][1] * col_outcomes[i][2];
        if (cp != square.col_sign(i)) throw MalformedProverError("column outcomes violate the column product");
    }
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
            if (row_outcomes[i][j] != col_outcomes[j][i]) return square.grid[i][j];
    // Impossible for well-formed tables: full products differ (-1 vs +1).
    throw MalformedProverError("tables agree everywhere yet have different total products");
}

const Pentagram& Pentagram::standard() {
    static const Pentagram pent = [] {
        Pentagram p;
        p.nodes = {canon("YII"), canon("IYI"), canon("IIY"), canon("XII"), canon("IXI"),
                   canon("IIX"), canon("YYX"), canon("YXY"), canon("XYY"), canon("XXX")};
        auto idx = [&p](const char* letters) {
            PauliString target = canon(letters);
            for (uint8_t i = 0; i < 10; i++)
                if (p.nodes[i].same_string(target)) return i;
            throw std::logic_error("pentagram node missing");
        };
        p.lines = {{{idx("XII"), idx("IXI"), idx("IIX"), idx("XXX")},
                    {idx("XII"), idx("IYI"), idx("IIY"), idx("XYY")},
                    {idx("IXI"), idx("YII"), idx("IIY"), idx("YXY")},
                    {idx("IIX"), idx("YII"), idx("IYI"), idx("YYX")},
                    {idx("XXX"), idx("XYY"), idx("YXY"), idx("YYX")}}};
        for (int l = 0; l < 5; l++) {
            std::vector<PauliString> ps;
            for (uint8_t n : p.lines[l]) ps.push_back(p.nodes[n]);
            p.line_signs[l] = product_sign(ps);
        }
        return p;
    }();
    return pent;
}

bool Pentagram::check_structure() const {
    // Four pairwise-commuting operators per line multiplying to sign * III.
    int negative = 0;
    std::array<int, 10> incidence{};
    for (int l = 0; l < 5; l++) {
        for (int a = 0; a < 4; a++) {
            incidence[lines[l][a]]++;
            for (int b = a + 1; b < 4; b++)
                if (!commutes(nodes[lines[l][a]], nodes[lines[l][b]])) return false;
        }
        std::vector<PauliString> ps;
        for (uint8_t n : lines[l]) ps.push_back(nodes[n]);
        PauliString prod = PauliString::identity(3);
        for (const auto& p : ps) prod = pauli_mul(prod, p.positive_rep());
        if (!prod.is_identity_string()) return false;
        if (product_sign(ps) != line_signs[l]) return false;
        if (line_signs[l] == -1) negative++;
    }
    if (negative != 1) return false;
    for (int count : incidence)
        if (count != 2) return false;
    return true;
}

bool Pentagram::has_satisfying_assignment() const {
    for (uint32_t bits = 0; bits < (1u << 10); bits++) {
        bool ok = true;
        for (int l = 0; l < 5 && ok; l++) {
            int prod = 1;
            for (uint8_t n : lines[l]) prod *= ((bits >> n) & 1) ? -1 : 1;
            ok = prod == line_signs[l];
        }
        if (ok) return true;
    }
    return false;
}

std::optional<size_t> Pentagram::node_index(const PauliString& p) const {
    for (size_t i = 0; i < 10; i++)
        if (nodes[i].same_string(p)) return i;
    return std::nullopt;
}

PauliString extract_nonstab_pentagram(const Pentagram& pent, const PentagramOutcomes& outcomes) {
    for (int l = 0; l < 5; l++) {
        int prod = 1;
        for (int k = 0; k < 4; k++) {
            if (outcomes[l][k] != 1 && outcomes[l][k] != -1)
                throw MalformedProverError("pentagram outcome not +-1");
            prod *= outcomes[l][k];
        }
        if (prod != pent.line_signs[l])
            throw MalformedProverError("pentagram line outcomes violate the line sign");
    }
    // Per-node values per line; nodes live on exactly two lines.
    std::array<std::vector<int8_t>, 10> values;
    for (int l = 0; l < 5; l++)
        for (int k = 0; k < 4; k++) values[pent.lines[l][k]].push_back(outcomes[l][k]);
    for (size_t n = 0; n < 10; n++)
        if (values[n].size() == 2 && values[n][0] != values[n][1]) return pent.nodes[n];
    throw MalformedProverError("pentagram tables are consistent, contradicting contextuality");
}

PauliLine majority_line_extract(const LineOutcomeTables& line_outcomes, Rng& rng) {
    const auto& lines = enumerate_pauli_lines();
    PauliAssignment votes_plus{};
    PauliAssignment votes_total{};
    for (size_t k = 0; k < 15; k++) {
        for (size_t j = 0; j < 3; j++) {
            if (line_outcomes[k][j] != 1 && line_outcomes[k][j] != -1)
                throw std::invalid_argument("majority_line_extract: outcome not +-1");
            size_t idx = canonical2_index(lines[k].paulis[j]);
            votes_total[idx]++;
            if (line_outcomes[k][j] == 1) votes_plus[idx]++;
        }
    }
    PauliAssignment nu{};
    for (size_t v = 1; v < 16; v++) {
        if (votes_total[v] != 3) throw std::invalid_argument("majority_line_extract: incomplete coverage");
        nu[v] = votes_plus[v] >= 2 ? 1 : -1;
    }
    std::vector<PauliLine> bad = violated_lines(nu);
    return bad[rng.next_below(bad.size())];
}

bool square_line_intersection_check() {
    const Clifford2& c2 = Clifford2::instance();
    const auto& lines = enumerate_pauli_lines();
    for (C2Coset u : c2.cosets()) {
        MagicSquare sq = MagicSquare::standard().conjugated(u);
        for (const PauliLine& line : lines) {
            bool hit = false;
            for (int i = 0; i < 3 && !hit; i++)
                for (int j = 0; j < 3 && !hit; j++)
                    if (line.contains(sq.grid[i][j])) hit = true;
            if (!hit) return false;
        }
    }
    return true;
}

namespace {

// Does u map all three paulis into {ZI, IZ, ZZ} mod sign, in order?
bool maps_to_z_pairs_ordered(C2Coset u, const std::array<PauliString, 3>& triple) {
    static const std::array<PauliString, 3> targets = {canon("ZI"), canon("IZ"), canon("ZZ")};
    for (int k = 0; k < 3; k++)
        if (!Clifford2::conj_canonical(u, triple[k]).same_string(targets[k])) return false;
    return true;
}

// Does u map the triple onto {ZI, IZ, ZZ} as a set (mod sign)?
bool maps_to_z_pairs(C2Coset u, const std::array<PauliString, 3>& triple) {
    std::set<size_t> images;
    for (int k = 0; k < 3; k++)
        images.insert(canonical2_index(Clifford2::conj_canonical(u, triple[k])));
    std::set<size_t> want = {canonical2_index(canon("ZI")), canonical2_index(canon("IZ")),
                             canonical2_index(canon("ZZ"))};
    return images == want;
}

const std::vector<C2Coset>& one_qubit_cosets_on(size_t side) {
    static const std::array<std::vector<C2Coset>, 2> tables = [] {
        std::array<std::vector<C2Coset>, 2> out;
        for (size_t side = 0; side < 2; side++) {
            std::set<uint16_t> seen;
            std::vector<C2Coset> frontier = {Clifford2::identity()};
            seen.insert(Clifford2::identity().key);
            std::vector<C2Coset> all;
            while (!frontier.empty()) {
                C2Coset u = frontier.back();
                frontier.pop_back();
                all.push_back(u);
                for (const Gate& g : {Gate::h(side), Gate::rz(side)}) {
                    C2Coset next = Clifford2::mul(Clifford2::from_gates({g}), u);
                    if (seen.insert(next.key).second) frontier.push_back(next);
                }
            }
            out[side] = all;
        }
        return out;
    }();
    return tables[side];
}

}  // namespace

C2Coset row_col_measurement_program(size_t index) {
    if (index >= 6) throw std::invalid_argument("row_col_measurement_program: index 0..5");
    static const std::array<C2Coset, 6> programs = [] {
        const MagicSquare& sq = MagicSquare::standard();
        C2Coset bell = Clifford2::from_gates({Gate::cnot(0, 1), Gate::h(0)});
        std::array<C2Coset, 6> out;
        for (size_t idx = 0; idx < 6; idx++) {
            std::array<PauliString, 3> triple;
            for (int k = 0; k < 3; k++)
                triple[k] = idx < 3 ? sq.grid[idx][k] : sq.grid[k][idx - 3];
            bool found = false;
            // Single-qubit gate on one side, then the Bell basis change.
            for (size_t side = 0; side < 2 && !found; side++) {
                for (C2Coset v : one_qubit_cosets_on(side)) {
                    C2Coset u = Clifford2::mul(bell, v);
                    if (maps_to_z_pairs(u, triple)) {
                        out[idx] = u;
                        found = true;
                        break;
                    }
                }
            }
            if (!found) throw std::logic_error("row_col_measurement_program: no program found");
        }
        return out;
    }();
    return programs[index];
}

C2Coset line_measurement_program(const PauliLine& line) {
    for (C2Coset u : Clifford2::instance().cosets())
        if (maps_to_z_pairs_ordered(u, line.paulis)) return u;
    throw std::logic_error("line_measurement_program: no coset maps the line to Z pairs");
}

}  // namespace cliffsim
