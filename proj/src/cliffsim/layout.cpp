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

#include "cliffsim/layout.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cliffsim {

std::vector<Gate> MeasurementLayout::column_gates(size_t col) const {
    std::vector<Gate> gates;
    const LayoutColumn& c = cols[col];
    for (auto [a, b] : c.vert_edges) gates.push_back(Gate::cz(a, b));
    for (size_t r = 0; r < rows; r++)
        if (c.basis.get(r)) gates.push_back(Gate::rz_dag(r));
    for (size_t r = 0; r < rows; r++) gates.push_back(Gate::h(r));
    return gates;
}

BitMat MeasurementLayout::to_graph() const {
    BitMat adj(num_vertices(), num_vertices());
    for (size_t c = 0; c + 1 < num_cols(); c++) {
        for (size_t r = 0; r < rows; r++) {
            adj.set(vid(r, c), vid(r, c + 1), true);
            adj.set(vid(r, c + 1), vid(r, c), true);
        }
    }
    for (size_t c = 0; c < num_cols(); c++) {
        for (auto [a, b] : cols[c].vert_edges) {
            adj.set(vid(a, c), vid(b, c), true);
            adj.set(vid(b, c), vid(a, c), true);
        }
    }
    return adj;
}

bool MeasurementLayout::grid_embedding_ok() const {
    for (size_t c = 0; c < num_cols(); c++) {
        if (cols[c].basis.size() != rows) return false;
        for (auto [a, b] : cols[c].vert_edges)
            if (b != a + 1 || b >= rows) return false;
    }
    return round1_cols <= num_cols();
}

std::string MeasurementLayout::to_text() const {
    std::ostringstream out;
    out << "{\"rows\":" << rows << ",\"cols\":" << num_cols() << ",\"round1_cols\":" << round1_cols
        << ",\"inputs\":[";
    for (size_t r = 0; r < rows; r++) out << (r ? "," : "") << vid(r, 0);
    out << "],\"outputs\":[";
    for (size_t r = 0; r < rows; r++) out << (r ? "," : "") << vid(r, output_col());
    out << "],\"basis\":[";
    for (size_t c = 0; c < num_cols(); c++) {
        out << (c ? "," : "") << "\"";
        for (size_t r = 0; r < rows; r++) out << (cols[c].basis.get(r) ? 'Y' : 'X');
        out << "\"";
    }
    out << "],\"vert_edges\":[";
    bool first = true;
    for (size_t c = 0; c < num_cols(); c++) {
        for (auto [a, b] : cols[c].vert_edges) {
            out << (first ? "" : ",") << "[[" << a << "," << c << "],[" << b << "," << c << "]]";
            first = false;
        }
    }
    out << "]}";
    return out.str();
}

std::optional<MeasurementLayout> MeasurementLayout::from_text(const std::string& text) {
    // Minimal parser for the exact shape produced by to_text.
    auto find_num = [&text](const std::string& tag) -> std::optional<size_t> {
        size_t p = text.find("\"" + tag + "\":");
        if (p == std::string::npos) return std::nullopt;
        return std::stoull(text.substr(p + tag.size() + 3));
    };
    auto rows = find_num("rows");
    auto cols = find_num("cols");
    auto r1 = find_num("round1_cols");
    if (!rows || !cols || !r1) return std::nullopt;
    MeasurementLayout out;
    out.rows = *rows;
    out.cols.assign(*cols, LayoutColumn{BitVec(*rows), {}});
    out.round1_cols = *r1;
    size_t p = text.find("\"basis\":[");
    if (p == std::string::npos) return std::nullopt;
    p += 9;
    for (size_t c = 0; c < *cols; c++) {
        p = text.find('"', p);
        if (p == std::string::npos) return std::nullopt;
        for (size_t r = 0; r < *rows; r++) out.cols[c].basis.set(r, text[p + 1 + r] == 'Y');
        p = text.find('"', p + 1) + 1;
    }
    p = text.find("\"vert_edges\":[", p);
    if (p == std::string::npos) return std::nullopt;
    p += 14;
    while (p < text.size()) {
        while (p < text.size() && (text[p] == ',' || text[p] == ' ')) p++;
        if (p >= text.size() || text[p] == ']') break;
        size_t a, ca, b, cb;
        if (sscanf(text.c_str() + p, "[[%zu,%zu],[%zu,%zu]]", &a, &ca, &b, &cb) != 4)
            return std::nullopt;
        if (ca != cb || ca >= *cols) return std::nullopt;
        out.cols[ca].vert_edges.push_back({uint32_t(a), uint32_t(b)});
        // Advance past this entry's closing "]]".
        size_t inner = text.find("]]", p);
        if (inner == std::string::npos) return std::nullopt;
        p = inner + 2;
    }
    // Rebuild the net product.
    out.net = CliffordTableau(out.rows);
    for (size_t c = 0; c + 1 < out.num_cols(); c++)
        out.net.apply_gates_inplace(out.column_gates(c));
    if (!out.grid_embedding_ok()) return std::nullopt;
    return out;
}

namespace {

template <typename OutcomeFn>
SweepResult sweep(const MeasurementLayout& layout, OutcomeFn outcome_of,
                  const std::vector<BitVec>* basis_override) {
    SweepResult result{MeasurementRecord{}, StabilizerState::plus_state(layout.rows)};
    StabilizerState& state = result.residual;
    for (size_t c = 0; c + 1 < layout.num_cols(); c++) {
        const BitVec& basis = basis_override ? (*basis_override)[c] : layout.cols[c].basis;
        for (auto [a, b] : layout.cols[c].vert_edges) state.apply_gate_inplace(Gate::cz(a, b));
        for (size_t r = 0; r < layout.rows; r++) {
            bool y = basis.get(r);
            uint8_t s = outcome_of(layout.vid(r, c));
            if (y) state.apply_gate_inplace(Gate::rz_dag(r));
            state.apply_gate_inplace(Gate::h(r));
            if (s) state.apply_pauli_inplace(PauliString::single(layout.rows, r, 'X'));
            result.record.push(layout.vid(r, c), y ? 'Y' : 'X', s, false);
        }
    }
    return result;
}

}  // namespace

SweepResult run_layout(const MeasurementLayout& layout, Rng& rng) {
    // Every teleport step has a uniformly random outcome regardless of the
    // state, so honest sampling is a stream of fair coins.
    return sweep(layout, [&rng](size_t) { return rng.next_bit() ? uint8_t{1} : uint8_t{0}; },
                 nullptr);
}

StabilizerState sweep_forced(const MeasurementLayout& layout, const std::vector<uint8_t>& outcomes,
                             const std::vector<BitVec>* basis_override) {
    if (outcomes.size() < layout.num_measured())
        throw std::invalid_argument("sweep_forced: incomplete outcomes");
    SweepResult res =
        sweep(layout, [&outcomes](size_t v) { return outcomes[v]; }, basis_override);
    return std::move(res.residual);
}

PauliString pauli_frame(const MeasurementLayout& layout, const MeasurementRecord& outcomes) {
    std::vector<uint8_t> bits(layout.num_measured() + layout.rows, 0);
    std::vector<bool> seen(bits.size(), false);
    for (size_t k = 0; k < outcomes.size(); k++) {
        if (outcomes.qubits[k] >= bits.size()) throw std::invalid_argument("pauli_frame: bad vertex");
        bits[outcomes.qubits[k]] = outcomes.outcomes[k];
        seen[outcomes.qubits[k]] = true;
    }
    for (size_t v = 0; v < layout.num_measured(); v++)
        if (!seen[v]) throw std::invalid_argument("pauli_frame: incomplete outcomes");
    StabilizerState residual = sweep_forced(layout, bits);
    StabilizerState target = StabilizerState::plus_state(layout.rows);
    target.apply_clifford_inplace(layout.net);
    // residual = P * target exactly, so for each target generator g the sign
    // of g in residual tells whether P anticommutes with g. Solve for P.
    size_t m = layout.rows;
    BitMat system(2 * m, m);  // unknowns are P's (x | z) bits; row v = <., g_v>
    BitVec rhs(m);
    for (size_t i = 0; i < m; i++) {
        const PauliString& g = target.generators()[i];
        StabKind kind = residual.is_stabilizer(g);
        if (kind == StabKind::NonStabilizer)
            throw std::logic_error("pauli_frame: residual does not match the target modulo Pauli");
        rhs.set(i, (kind == StabKind::Minus) != (g.sign_bit() != 0));
        for (size_t q = 0; q < m; q++) {
            system.set(q, i, g.z_bits().get(q));       // P.x vs g.z
            system.set(m + q, i, g.x_bits().get(q));   // P.z vs g.x
        }
    }
    auto sol = system.solve_left(rhs);
    if (!sol) throw std::logic_error("pauli_frame: inconsistent sign system");
    BitVec x(m), z(m);
    for (size_t q = 0; q < m; q++) {
        x.set(q, sol->get(q));
        z.set(q, sol->get(m + q));
    }
    return PauliString(x, z, 0).positive_rep();
}

// --- Block tables ----------------------------------------------------------

namespace {

struct BrickworkTables {
    std::vector<int32_t> bits_of_key;  // coset key -> first 16-bit preimage
    std::vector<uint16_t> gate_of_bits;

    BrickworkTables() : bits_of_key(1 << 16, -1), gate_of_bits(1 << 16, 0) {
        // Incremental enumeration: gate(bits) composed column by column.
        for (uint32_t bits = 0; bits < (1u << 16); bits++) {
            CliffordTableau acc = CliffordTableau::identity(2);
            for (int c = 0; c < 8; c++) {
                std::vector<Gate> gates;
                if (c % 2 == 0) gates.push_back(Gate::cz(0, 1));
                if ((bits >> (2 * c)) & 1) gates.push_back(Gate::rz_dag(0));
                if ((bits >> (2 * c + 1)) & 1) gates.push_back(Gate::rz_dag(1));
                gates.push_back(Gate::h(0));
                gates.push_back(Gate::h(1));
                acc = compose(acc, CliffordTableau::from_gates(2, gates));
            }
            uint16_t key = Clifford2::from_tableau(acc).key;
            gate_of_bits[bits] = key;
            if (bits_of_key[key] < 0) bits_of_key[key] = int32_t(bits);
        }
        size_t covered = 0;
        for (C2Coset u : Clifford2::instance().cosets())
            if (bits_of_key[u.key] >= 0) covered++;
        if (covered != 720) throw std::logic_error("brickwork block table does not cover C2/P2");
    }

    static const BrickworkTables& instance() {
        static const BrickworkTables t;
        return t;
    }
};

struct LineTables {
    std::array<int8_t, 16> bits_of_key;
    std::array<uint8_t, 8> gate_of_bits;

    LineTables() {
        bits_of_key.fill(-1);
        for (uint8_t bits = 0; bits < 8; bits++) {
            CliffordTableau acc = CliffordTableau::identity(1);
            for (int c = 0; c < 3; c++) {
                std::vector<Gate> gates;
                if ((bits >> c) & 1) gates.push_back(Gate::rz_dag(0));
                gates.push_back(Gate::h(0));
                acc = compose(acc, CliffordTableau::from_gates(1, gates));
            }
            uint8_t key = Clifford1::from_tableau(acc).key;
            gate_of_bits[bits] = key;
            if (bits_of_key[key] < 0) bits_of_key[key] = int8_t(bits);
        }
        for (C1Coset u : Clifford1::instance().cosets())
            if (bits_of_key[u.key] < 0) throw std::logic_error("line block table does not cover C1/P1");
    }

    static const LineTables& instance() {
        static const LineTables t;
        return t;
    }
};

}  // namespace

uint16_t brickwork_block_bits(C2Coset target) {
    int32_t bits = BrickworkTables::instance().bits_of_key[target.key];
    if (bits < 0) throw std::invalid_argument("brickwork_block_bits: not a coset key");
    return uint16_t(bits);
}

C2Coset brickwork_block_gate(uint16_t bits) {
    return C2Coset{BrickworkTables::instance().gate_of_bits[bits]};
}

uint8_t line_block_bits(C1Coset target) {
    int8_t bits = LineTables::instance().bits_of_key[target.key & 0xf];
    if (bits < 0) throw std::invalid_argument("line_block_bits: not a coset key");
    return uint8_t(bits);
}

C1Coset line_block_gate(uint8_t bits) { return C1Coset{LineTables::instance().gate_of_bits[bits & 7]}; }

// --- Compilers -------------------------------------------------------------

namespace {

void finish_net(MeasurementLayout& layout) {
    layout.net = CliffordTableau(layout.rows);
    for (size_t c = 0; c + 1 < layout.num_cols(); c++)
        layout.net.apply_gates_inplace(layout.column_gates(c));
    layout.round1_cols = layout.num_cols() - 1;
}

void append_line_block(MeasurementLayout& layout, uint8_t bits) {
    for (int c = 0; c < 3; c++) {
        LayoutColumn col{BitVec(1), {}};
        col.basis.set(0, (bits >> c) & 1);
        layout.cols.push_back(std::move(col));
    }
}

void append_brickwork_block(MeasurementLayout& layout, size_t top_row, uint16_t bits) {
    // Blocks are always appended into fresh columns here (two-row layouts).
    for (int c = 0; c < 8; c++) {
        LayoutColumn col{BitVec(layout.rows), {}};
        if (c % 2 == 0) col.vert_edges.push_back({uint32_t(top_row), uint32_t(top_row + 1)});
        col.basis.set(top_row, (bits >> (2 * c)) & 1);
        col.basis.set(top_row + 1, (bits >> (2 * c + 1)) & 1);
        layout.cols.push_back(std::move(col));
    }
}

}  // namespace

MeasurementLayout line_gadget(const std::vector<C1Coset>& gates) {
    if (gates.empty()) throw std::invalid_argument("line_gadget: need at least one gate");
    MeasurementLayout layout;
    layout.rows = 1;
    layout.cols.push_back(LayoutColumn{BitVec(1), {}});  // input column, X
    C1Coset h = Clifford1::from_gates({Gate::h(0)});
    size_t n = gates.size();
    for (size_t p = 0; p < n; p++) {
        // Physical block p carries the (n-p)-th letter; the leftmost one
        // absorbs the input-column Hadamard.
        C1Coset target = gates[n - 1 - p];
        if (p == 0) target = Clifford1::mul(target, h);
        append_line_block(layout, line_block_bits(target));
    }
    layout.cols.push_back(LayoutColumn{BitVec(1), {}});  // output column
    finish_net(layout);
    return layout;
}

MeasurementLayout brickwork_gadget(const std::vector<C2Coset>& gates) {
    if (gates.empty()) throw std::invalid_argument("brickwork_gadget: need at least one gate");
    MeasurementLayout layout;
    layout.rows = 2;
    layout.cols.push_back(LayoutColumn{BitVec(2), {}});  // input column, X
    C2Coset hh = Clifford2::from_gates({Gate::h(0), Gate::h(1)});
    size_t n = gates.size();
    for (size_t p = 0; p < n; p++) {
        C2Coset target = gates[n - 1 - p];
        if (p == 0) target = Clifford2::mul(target, hh);
        append_brickwork_block(layout, 0, brickwork_block_bits(target));
    }
    layout.cols.push_back(LayoutColumn{BitVec(2), {}});  // output column
    finish_net(layout);
    return layout;
}

namespace {

// Even-odd transposition network performing the full reversal in m layers.
// meeting_of[{u, v}] = (layer, top row) for each wire pair.
struct ReversalPlan {
    // layer -> list of (top row); wires tracked separately per use.
    std::vector<std::vector<size_t>> layer_pairs;
    // For the unordered wire pair (u < v): layer index and whether u is the
    // top wire at the meeting (true in a forward reversal).
    std::vector<std::vector<std::pair<size_t, size_t>>> meeting;  // [u][v] = (layer, row)

    explicit ReversalPlan(size_t m) {
        layer_pairs.assign(m, {});
        meeting.assign(m, std::vector<std::pair<size_t, size_t>>(m, {SIZE_MAX, SIZE_MAX}));
        std::vector<size_t> wire_at(m);
        for (size_t r = 0; r < m; r++) wire_at[r] = r;
        for (size_t layer = 0; layer < m; layer++) {
            size_t start = layer % 2 == 0 ? 0 : 1;
            for (size_t r = start; r + 1 < m; r += 2) {
                layer_pairs[layer].push_back(r);
                size_t u = wire_at[r], v = wire_at[r + 1];
                size_t lo = std::min(u, v), hi = std::max(u, v);
                meeting[lo][hi] = {layer, r};
                std::swap(wire_at[r], wire_at[r + 1]);
            }
        }
        for (size_t r = 0; r < m; r++)
            if (wire_at[r] != m - 1 - r) throw std::logic_error("reversal network failed");
        for (size_t u = 0; u < m; u++)
            for (size_t v = u + 1; v < m; v++)
                if (meeting[u][v].first == SIZE_MAX)
                    throw std::logic_error("reversal network missed a pair");
    }
};

// Appends one reversal phase (m layers x 8 columns). toggles[layer][row] is
// the extra gate merged into the SWAP block whose top row is `row`.
void append_reversal(MeasurementLayout& layout, const ReversalPlan& plan,
                     const std::map<std::pair<size_t, size_t>, C2Coset>& toggles) {
    size_t m = layout.rows;
    C2Coset swap_coset = Clifford2::from_gates({Gate::swap(0, 1)});
    for (size_t layer = 0; layer < plan.layer_pairs.size(); layer++) {
        // Column base for this layer.
        size_t base = layout.cols.size();
        for (int c = 0; c < 8; c++) layout.cols.push_back(LayoutColumn{BitVec(m), {}});
        for (size_t top : plan.layer_pairs[layer]) {
            C2Coset gate = swap_coset;
            auto it = toggles.find({layer, top});
            if (it != toggles.end()) gate = Clifford2::mul(swap_coset, it->second);
            uint16_t bits = brickwork_block_bits(gate);
            for (int c = 0; c < 8; c++) {
                LayoutColumn& col = layout.cols[base + c];
                if (c % 2 == 0) col.vert_edges.push_back({uint32_t(top), uint32_t(top + 1)});
                col.basis.set(top, (bits >> (2 * c)) & 1);
                col.basis.set(top + 1, (bits >> (2 * c + 1)) & 1);
            }
        }
        // Unpaired rows pass through eight X columns (H^8 = identity).
    }
}

// Two columns realizing Rz on the flagged rows and identity elsewhere.
void append_rz_segment(MeasurementLayout& layout, const BitVec& rz_rows) {
    size_t m = layout.rows;
    LayoutColumn first{BitVec(m), {}};
    for (size_t r = 0; r < m; r++)
        if (rz_rows.get(r)) first.basis.set(r, true);  // (Y then X) = H HRz^-1 = Rz mod P
    layout.cols.push_back(std::move(first));
    layout.cols.push_back(LayoutColumn{BitVec(m), {}});
}

}  // namespace

MeasurementLayout wide_cluster_gadget_letters(size_t m, const std::vector<GmLetter>& word) {
    if (m < 2) throw std::invalid_argument("wide_cluster_gadget: need m >= 2");
    if (word.empty()) throw std::invalid_argument("wide_cluster_gadget: empty word");
    for (const auto& letter : word) {
        if (letter.num_qubits() != m) throw std::invalid_argument("wide_cluster_gadget: wrong width");
        if (!cnot_letter_valid(letter.g, m))
            throw std::invalid_argument("wide_cluster_gadget: malformed gate encoding");
    }
    ReversalPlan plan(m);
    MeasurementLayout layout;
    layout.rows = m;
    layout.cols.push_back(LayoutColumn{BitVec(m), {}});  // input column, X
    // Boot segment cancelling the input-column Hadamard layer: three columns
    // realizing H per row.
    uint8_t hbits = line_block_bits(Clifford1::from_gates({Gate::h(0)}));
    for (int c = 0; c < 3; c++) {
        LayoutColumn col{BitVec(m), {}};
        for (size_t r = 0; r < m; r++) col.basis.set(r, (hbits >> c) & 1);
        layout.cols.push_back(std::move(col));
    }
    C2Coset cnot01 = Clifford2::from_gates({Gate::cnot(0, 1)});
    C2Coset cz01 = Clifford2::from_gates({Gate::cz(0, 1)});
    // Letters placed right-to-left: the last letter's region is leftmost.
    for (size_t p = 0; p < word.size(); p++) {
        const GmLetter& letter = word[word.size() - 1 - p];
        // h part: Rz segment, then a double reversal carrying the CZ toggles.
        BitVec rz_rows(m);
        for (size_t r = 0; r < m; r++) rz_rows.set(r, letter.h.rz(r));
        append_rz_segment(layout, rz_rows);
        std::map<std::pair<size_t, size_t>, C2Coset> cz_toggles;
        for (size_t u = 0; u < m; u++)
            for (size_t v = u + 1; v < m; v++)
                if (letter.h.cz(u, v)) cz_toggles[plan.meeting[u][v]] = cz01;
        append_reversal(layout, plan, cz_toggles);
        append_reversal(layout, plan, {});
        // g part: double reversal; the CNOT rides in phase A when control <
        // target and in phase B otherwise. Phase B starts from the reversed
        // wire order, so its meetings are looked up through reversed
        // indices; in both cases the control wire is on top at the meeting.
        std::map<std::pair<size_t, size_t>, C2Coset> phase_a, phase_b;
        if (!letter.g.is_identity()) {
            size_t c = size_t(letter.g.control), t = size_t(letter.g.target);
            if (c < t) {
                phase_a[plan.meeting[c][t]] = cnot01;
            } else {
                phase_b[plan.meeting[m - 1 - c][m - 1 - t]] = cnot01;
            }
        }
        append_reversal(layout, plan, phase_a);
        append_reversal(layout, plan, phase_b);
    }
    layout.cols.push_back(LayoutColumn{BitVec(m), {}});  // output column
    finish_net(layout);
    return layout;
}

MeasurementLayout wide_cluster_gadget(size_t m, const std::vector<CnotLetter>& g,
                                      const std::vector<HmElement>& h) {
    if (g.size() != h.size()) throw std::invalid_argument("wide_cluster_gadget: length mismatch");
    std::vector<GmLetter> word;
    word.reserve(g.size());
    for (size_t i = 0; i < g.size(); i++) word.push_back(GmLetter{g[i], h[i]});
    return wide_cluster_gadget_letters(m, word);
}

MeasurementLayout compose_gadgets(const MeasurementLayout& a, const MeasurementLayout& b) {
    if (a.rows != b.rows) throw std::invalid_argument("compose_gadgets: width mismatch");
    MeasurementLayout out;
    out.rows = a.rows;
    out.cols = a.cols;  // a's output column becomes a measured X column
    // Drop b's input column: a's former output column now plays that role.
    out.cols.insert(out.cols.end(), b.cols.begin() + 1, b.cols.end());
    finish_net(out);
    return out;
}

std::vector<std::pair<int, C2Coset>> nn_pair_decompose(const CliffordTableau& target) {
    if (target.num_qubits() != 3) throw std::invalid_argument("nn_pair_decompose: need 3 qubits");
    auto key_of = [](const CliffordTableau& t) {
        uint64_t key = 0;
        BitMat m = t.matrix();
        for (size_t r = 0; r < 6; r++)
            for (size_t c = 0; c < 6; c++)
                if (m.get(r, c)) key |= uint64_t(1) << (6 * r + c);
        return key;
    };
    auto embed = [](C2Coset u, int pair) {
        CliffordTableau t2 = Clifford2::to_tableau(u);
        BitMat a(3, 3), b(3, 3), c(3, 3), d(3, 3);
        size_t off = size_t(pair);  // pair 0 -> qubits (0,1), pair 1 -> (1,2)
        for (size_t q = 0; q < 3; q++) {
            a.set(q, q, true);
            d.set(q, q, true);
        }
        for (size_t q = 0; q < 2; q++) {
            for (size_t j = 0; j < 2; j++) {
                a.set(q + off, j + off, t2.x_image(q).x_bits().get(j));
                b.set(q + off, j + off, t2.x_image(q).z_bits().get(j));
                c.set(q + off, j + off, t2.z_image(q).x_bits().get(j));
                d.set(q + off, j + off, t2.z_image(q).z_bits().get(j));
            }
            a.set(q + off, q + off, t2.x_image(q).x_bits().get(q));
            d.set(q + off, q + off, t2.z_image(q).z_bits().get(q));
        }
        return CliffordTableau::from_blocks(a, b, c, d);
    };
    const auto& cosets = Clifford2::instance().cosets();
    // Meet in the middle over alternating products s2(pair b) o s1(pair a).
    std::array<std::vector<CliffordTableau>, 2> emb, emb_inv;
    for (int pair = 0; pair < 2; pair++) {
        for (C2Coset u : cosets) {
            emb[pair].push_back(embed(u, pair));
            emb_inv[pair].push_back(embed(Clifford2::inverse(u), pair));
        }
    }
    for (int first_pair : {0, 1}) {
        int second_pair = 1 - first_pair;
        std::unordered_map<uint64_t, std::pair<uint16_t, uint16_t>> halves;
        halves.reserve(720 * 720);
        for (size_t i1 = 0; i1 < cosets.size(); i1++) {
            for (size_t i2 = 0; i2 < cosets.size(); i2++) {
                // s2 o s1 (s1 applied first).
                CliffordTableau prod = compose(emb[first_pair][i1], emb[second_pair][i2]);
                halves.emplace(key_of(prod), std::make_pair(cosets[i1].key, cosets[i2].key));
            }
        }
        // Length <= 2: the target itself may be a half.
        auto hit = halves.find(key_of(target));
        if (hit != halves.end()) {
            return {{first_pair, C2Coset{hit->second.first}},
                    {second_pair, C2Coset{hit->second.second}}};
        }
        // Length <= 4: target = (s4 o s3) o front, so
        // front = s3^-1 o s4^-1 o target.
        for (size_t i4 = 0; i4 < cosets.size(); i4++) {
            CliffordTableau partial = compose(target, emb_inv[second_pair][i4]);
            for (size_t i3 = 0; i3 < cosets.size(); i3++) {
                CliffordTableau front = compose(partial, emb_inv[first_pair][i3]);
                auto it = halves.find(key_of(front));
                if (it != halves.end()) {
                    return {{first_pair, C2Coset{it->second.first}},
                            {second_pair, C2Coset{it->second.second}},
                            {first_pair, cosets[i3]},
                            {second_pair, cosets[i4]}};
                }
            }
        }
    }
    throw std::logic_error("nn_pair_decompose: no alternating decomposition of length <= 4");
}

}  // namespace cliffsim
