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

#include "cliffsim/hardness.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffsim {

namespace {

// acc <- acc * letter, exploiting letter = I + E[target, control]:
// column `control` of acc picks up column `target`.
void fold_letter(BitMat& acc, const CnotLetter& g) {
    if (g.is_identity()) return;
    for (size_t r = 0; r < acc.rows(); r++)
        if (acc.get(r, size_t(g.target))) acc.flip(r, size_t(g.control));
}

CnotLetter flipped(const CnotLetter& g) {
    if (g.is_identity()) return g;
    return CnotLetter::cnot(g.target, g.control);
}

// Word of the transposed product: reverse the letters and flip each.
std::vector<CnotLetter> transpose_word(const std::vector<CnotLetter>& word) {
    std::vector<CnotLetter> out(word.rbegin(), word.rend());
    for (auto& g : out) g = flipped(g);
    return out;
}

std::vector<CnotLetter> reversed_word(const std::vector<CnotLetter>& word) {
    return std::vector<CnotLetter>(word.rbegin(), word.rend());
}

void append(std::vector<CnotLetter>& out, const std::vector<CnotLetter>& w) {
    out.insert(out.end(), w.begin(), w.end());
}

}  // namespace

bool CnotWord::valid() const {
    for (const auto& g : letters)
        if (!cnot_letter_valid(g, m)) return false;
    return true;
}

std::string CnotWord::to_text(const std::string& kind, uint64_t seed) const {
    std::ostringstream out;
    out << "kind " << kind << "\nn " << letters.size() << "\nm " << m << "\nseed " << seed << "\n";
    for (const auto& g : letters) {
        if (g.is_identity()) {
            out << "id\n";
        } else {
            out << g.control << " " << g.target << "\n";
        }
    }
    return out.str();
}

std::optional<CnotWord> CnotWord::from_text(const std::string& text, std::string* kind_out) {
    std::istringstream in(text);
    std::string tag, kind;
    size_t n = 0;
    uint64_t seed = 0;
    CnotWord w;
    if (!(in >> tag >> kind) || tag != "kind") return std::nullopt;
    if (!(in >> tag >> n) || tag != "n") return std::nullopt;
    if (!(in >> tag >> w.m) || tag != "m") return std::nullopt;
    if (!(in >> tag >> seed) || tag != "seed") return std::nullopt;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line == "id") {
            w.letters.push_back(CnotLetter::id());
            continue;
        }
        std::istringstream ls(line);
        int32_t c, t;
        if (!(ls >> c >> t)) return std::nullopt;
        w.letters.push_back(CnotLetter::cnot(c, t));
    }
    if (w.letters.size() != n || !w.valid()) return std::nullopt;
    if (kind_out) *kind_out = kind;
    return w;
}

BitMat reference_solver(const CnotWord& w) {
    if (!w.valid()) throw std::invalid_argument("reference_solver: invalid word");
    BitMat acc = BitMat::identity(w.m);
    for (const auto& g : w.letters) fold_letter(acc, g);
    return acc;
}

LayeredDag LayeredDag::random(size_t m, size_t n, Rng& rng) {
    LayeredDag d;
    d.m = m;
    for (size_t k = 0; k < n; k++) d.adjacency.push_back(BitMat::random(m, m, rng));
    return d;
}

uint8_t ldag_path_parity(const LayeredDag& d, size_t source, size_t target) {
    if (source >= d.m || target >= d.m) throw std::out_of_range("ldag_path_parity: bad node");
    BitMat acc = BitMat::identity(d.m);
    for (const auto& a : d.adjacency) acc = acc * a;
    return acc.get(source, target) ? 1 : 0;
}

uint64_t ldag_count_paths(const LayeredDag& d, size_t source, size_t target, uint64_t cap) {
    std::vector<uint64_t> counts(d.m, 0);
    counts[source] = 1;
    for (const auto& a : d.adjacency) {
        std::vector<uint64_t> next(d.m, 0);
        for (size_t u = 0; u < d.m; u++) {
            if (!counts[u]) continue;
            for (size_t v = 0; v < d.m; v++) {
                if (!a.get(u, v)) continue;
                next[v] += counts[u];
                if (next[v] > cap) throw std::runtime_error("ldag_count_paths: path cap exceeded");
            }
        }
        counts = std::move(next);
    }
    return counts[target];
}

CnotWord unit_upper_triangular_to_word(const BitMat& a) {
    size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("unit_upper_triangular_to_word: not square");
    for (size_t i = 0; i < n; i++) {
        if (!a.get(i, i)) throw std::invalid_argument("unit_upper_triangular_to_word: zero diagonal");
        for (size_t j = 0; j < i; j++)
            if (a.get(i, j)) throw std::invalid_argument("unit_upper_triangular_to_word: not upper triangular");
    }
    // A = prod_{i = n-1..1} prod_{j = i+1..n} CNOT(j, i)^{a_ij}, leftmost
    // factor first; CNOT(j, i) contributes the (i, j) entry.
    CnotWord w;
    w.m = n;
    for (size_t i = n - 1; i + 1 >= 2; i--) {
        for (size_t j = i + 1; j < n + 1; j++) {
            if (a.get(i - 1, j - 1)) w.letters.push_back(CnotLetter::cnot(int32_t(j - 1), int32_t(i - 1)));
        }
    }
    return w;
}

CnotWord ldag_to_cnotword(const LayeredDag& d) {
    size_t n = d.adjacency.size();
    size_t big = (n + 1) * d.m;
    BitMat block(big, big);
    for (size_t i = 0; i < big; i++) block.set(i, i, true);
    for (size_t k = 0; k < n; k++)
        for (size_t u = 0; u < d.m; u++)
            for (size_t v = 0; v < d.m; v++)
                if (d.adjacency[k].get(u, v)) block.set(k * d.m + u, (k + 1) * d.m + v, true);
    CnotWord w = unit_upper_triangular_to_word(block);
    // Reversing the sequence realizes the inverse; the top-right block of
    // the inverse is the transition product (signs vanish over GF(2)).
    w.letters = reversed_word(w.letters);
    return w;
}

BitMat three_cycle_matrix(size_t m) {
    if (m < 3) throw std::invalid_argument("three_cycle_matrix: need m >= 3");
    BitMat c = BitMat::identity(m);
    c.set(0, 0, false);
    c.set(1, 1, false);
    c.set(2, 2, false);
    c.set(1, 0, true);  // e0 -> e1
    c.set(2, 1, true);  // e1 -> e2
    c.set(0, 2, true);  // e2 -> e0
    return c;
}

std::vector<CnotLetter> three_cycle_word(size_t m) {
    if (m < 3) throw std::invalid_argument("three_cycle_word: need m >= 3");
    // swap(0,1) * swap(1,2), each swap as three CNOTs.
    return {CnotLetter::cnot(0, 1), CnotLetter::cnot(1, 0), CnotLetter::cnot(0, 1),
            CnotLetter::cnot(1, 2), CnotLetter::cnot(2, 1), CnotLetter::cnot(1, 2)};
}

namespace {

// Gadget word whose product is CNOT(top -> bot) iff the top-right entry of
// the shifted input word's product is 1, and the identity otherwise. All
// other wires are restored.
std::vector<CnotLetter> conditional_cnot_gadget(const std::vector<CnotLetter>& shifted,
                                                size_t first_wire, size_t last_wire, int32_t top,
                                                int32_t bot) {
    // Stage 1: B = K o A^-1 o K o A with K = CNOT(first A wire -> top)
    // plants the first row of A into the top wire's row.
    CnotLetter k1 = CnotLetter::cnot(int32_t(first_wire), top);
    std::vector<CnotLetter> b_word;
    b_word.push_back(k1);
    append(b_word, reversed_word(shifted));
    b_word.push_back(k1);
    append(b_word, shifted);
    // Stage 2 on B^T with K' = CNOT(last A wire -> bot) isolates the
    // top-right entry as a conditional CNOT(top -> bot).
    std::vector<CnotLetter> bt = transpose_word(b_word);
    CnotLetter k2 = CnotLetter::cnot(int32_t(last_wire), bot);
    std::vector<CnotLetter> out;
    out.push_back(k2);
    append(out, reversed_word(bt));
    out.push_back(k2);
    append(out, bt);
    return out;
}

}  // namespace

CnotWord cnotword_to_cycle_promise(const CnotWord& w) {
    if (!w.valid()) throw std::invalid_argument("cnotword_to_cycle_promise: invalid word");
    CnotWord out;
    out.m = w.m + 3;
    std::vector<CnotLetter> shifted;
    shifted.reserve(w.letters.size());
    for (const auto& g : w.letters) {
        if (g.is_identity()) {
            shifted.push_back(g);
        } else {
            shifted.push_back(CnotLetter::cnot(g.control + 3, g.target + 3));
        }
    }
    // One conditional-CNOT gadget per letter of the fixed three-cycle word;
    // with the condition bit set the copies multiply out to the cycle.
    for (const CnotLetter& step : three_cycle_word(out.m))
        append(out.letters, conditional_cnot_gadget(shifted, 3, out.m - 1, step.control, step.target));
    return out;
}

CnotWord gen_promise_instance(CyclePromiseKind kind, size_t n, size_t m, Rng& rng) {
    if (m < 3) throw std::invalid_argument("gen_promise_instance: need m >= 3");
    std::vector<CnotLetter> core;
    if (kind == CyclePromiseKind::C3) core = three_cycle_word(m);
    if (n < core.size()) throw std::invalid_argument("gen_promise_instance: n too small for the kind");
    size_t pairs = (n - core.size()) / 2;
    std::vector<CnotLetter> half;
    for (size_t i = 0; i < pairs; i++) {
        if (rng.next_below(4) == 0) {
            half.push_back(CnotLetter::id());
        } else {
            int32_t c = int32_t(rng.next_below(m));
            int32_t t = int32_t(rng.next_below(m - 1));
            if (t >= c) t++;
            half.push_back(CnotLetter::cnot(c, t));
        }
    }
    CnotWord w;
    w.m = m;
    append(w.letters, half);
    append(w.letters, reversed_word(half));  // cancels: letters are involutions
    append(w.letters, core);
    while (w.letters.size() < n) w.letters.push_back(CnotLetter::id());
    return w;
}

std::vector<C2Coset> gen_s6_promise_instance(S6PromiseKind kind, size_t n, Rng& rng) {
    C2Coset target = kind == S6PromiseKind::II
                         ? Clifford2::identity()
                         : Clifford2::from_gates({Gate::h(0), Gate::h(1)});
    return Clifford2::instance().random_even_word(n, target, rng);
}

}  // namespace cliffsim
