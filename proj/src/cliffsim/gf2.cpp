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

#include <stdexcept>

namespace cliffsim {

BitMat BitMat::identity(size_t n) {
    BitMat m(n, n);
    for (size_t i = 0; i < n; i++) m.set(i, i, true);
    return m;
}

BitMat BitMat::random(size_t rows, size_t cols, Rng& rng) {
    BitMat m(rows, cols);
    for (size_t i = 0; i < rows; i++) m.r_[i] = BitVec::random(cols, rng);
    return m;
}

BitMat BitMat::random_invertible(size_t n, Rng& rng) {
    // Rejection sampling; the fraction of invertible matrices over GF(2) is
    // bounded below by ~0.2887 for all n, so a handful of tries suffices.
    while (true) {
        BitMat m = random(n, n, rng);
        if (m.rank() == n) return m;
    }
}

BitMat BitMat::random_symmetric(size_t n, Rng& rng) {
    BitMat m(n, n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = i; j < n; j++) {
            bool b = rng.next_bit();
            m.set(i, j, b);
            m.set(j, i, b);
        }
    return m;
}

BitVec BitMat::mul_left(const BitVec& x) const {
    BitVec y(cols_);
    for (size_t i = 0; i < rows_; i++)
        if (x.get(i)) y ^= r_[i];
    return y;
}

BitMat BitMat::operator*(const BitMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("BitMat: dimension mismatch");
    BitMat out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; i++) out.r_[i] = o.mul_left(r_[i]);
    return out;
}

BitMat BitMat::operator+(const BitMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("BitMat: dimension mismatch");
    BitMat out = *this;
    for (size_t i = 0; i < rows_; i++) out.r_[i] ^= o.r_[i];
    return out;
}

BitMat BitMat::transposed() const {
    BitMat out(cols_, rows_);
    for (size_t i = 0; i < rows_; i++)
        for (size_t j = 0; j < cols_; j++)
            if (get(i, j)) out.set(j, i, true);
    return out;
}

bool BitMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; i++)
        for (size_t j = i + 1; j < cols_; j++)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bool BitMat::is_zero_diagonal() const {
    for (size_t i = 0; i < rows_ && i < cols_; i++)
        if (get(i, i)) return false;
    return true;
}

size_t BitMat::rank() const {
    std::vector<BitVec> rows = r_;
    size_t rank = 0;
    for (size_t c = 0; c < cols_ && rank < rows.size(); c++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(c)) pivot++;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t i = 0; i < rows.size(); i++)
            if (i != rank && rows[i].get(c)) rows[i] ^= rows[rank];
        rank++;
    }
    return rank;
}

std::optional<BitMat> BitMat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    size_t n = rows_;
    std::vector<BitVec> a = r_;
    BitMat inv = identity(n);
    for (size_t c = 0; c < n; c++) {
        size_t pivot = c;
        while (pivot < n && !a[pivot].get(c)) pivot++;
        if (pivot == n) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(inv.r_[c], inv.r_[pivot]);
        for (size_t i = 0; i < n; i++) {
            if (i != c && a[i].get(c)) {
                a[i] ^= a[c];
                inv.r_[i] ^= inv.r_[c];
            }
        }
    }
    return inv;
}

std::optional<BitVec> BitMat::solve_left(const BitVec& b) const {
    if (b.size() != cols_) throw std::invalid_argument("solve_left: dimension mismatch");
    // Gaussian elimination on rows with lowest-index pivoting, tracking which
    // combination of original rows each reduced row is.
    std::vector<BitVec> rows = r_;
    std::vector<BitVec> combo(rows_, BitVec(rows_));
    for (size_t i = 0; i < rows_; i++) combo[i].set(i, true);
    BitVec rhs = b;
    BitVec x(rows_);
    size_t rank = 0;
    std::vector<size_t> pivot_col(rows_, 0);
    for (size_t c = 0; c < cols_ && rank < rows_; c++) {
        size_t pivot = rank;
        while (pivot < rows_ && !rows[pivot].get(c)) pivot++;
        if (pivot == rows_) continue;
        std::swap(rows[rank], rows[pivot]);
        std::swap(combo[rank], combo[pivot]);
        for (size_t i = 0; i < rows_; i++)
            if (i != rank && rows[i].get(c)) {
                rows[i] ^= rows[rank];
                combo[i] ^= combo[rank];
            }
        pivot_col[rank] = c;
        rank++;
    }
    // Back-substitute: the reduced rows have leading ones at pivot_col.
    for (size_t i = 0; i < rank; i++) {
        if (rhs.get(pivot_col[i])) {
            rhs ^= rows[i];
            x ^= combo[i];
        }
    }
    if (rhs.any()) return std::nullopt;
    return x;
}

}  // namespace cliffsim
