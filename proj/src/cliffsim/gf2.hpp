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

#ifndef CLIFFSIM_GF2_HPP
#define CLIFFSIM_GF2_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffsim/rng.hpp"

namespace cliffsim {

// Packed GF(2) vector. Bits beyond size() are kept zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            w_[i >> 6] |= mask;
        } else {
            w_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void operator^=(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); k++) w_[k] ^= o.w_[k];
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    // Parity of <this, o>.
    bool dot(const BitVec& o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < w_.size(); k++) acc ^= w_[k] & o.w_[k];
        return std::popcount(acc) & 1;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }
    bool operator<(const BitVec& o) const { return w_ < o.w_; }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

    static BitVec random(size_t n, Rng& rng) {
        BitVec v(n);
        for (size_t k = 0; k < v.w_.size(); k++) v.w_[k] = rng.next_u64();
        v.trim();
        return v;
    }

    std::string str() const {
        std::string s(n_, '0');
        for (size_t i = 0; i < n_; i++)
            if (get(i)) s[i] = '1';
        return s;
    }

    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }

   private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Dense GF(2) matrix, row-major over packed rows. Vectors act on the left:
// y = x * M.
class BitMat {
   public:
    BitMat() = default;
    BitMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

    static BitMat identity(size_t n);
    static BitMat random(size_t rows, size_t cols, Rng& rng);
    static BitMat random_invertible(size_t n, Rng& rng);
    static BitMat random_symmetric(size_t n, Rng& rng);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return r_[r].get(c); }
    void set(size_t r, size_t c, bool v) { r_[r].set(c, v); }
    void flip(size_t r, size_t c) { r_[r].flip(c); }

    const BitVec& row(size_t r) const { return r_[r]; }
    BitVec& row(size_t r) { return r_[r]; }

    BitVec mul_left(const BitVec& x) const;  // x * M
    BitMat operator*(const BitMat& o) const;
    BitMat operator+(const BitMat& o) const;
    BitMat transposed() const;

    bool is_symmetric() const;
    bool is_zero_diagonal() const;
    bool operator==(const BitMat& o) const { return rows_ == o.rows_ && r_ == o.r_; }
    bool operator!=(const BitMat& o) const { return !(*this == o); }

    size_t rank() const;
    std::optional<BitMat> inverse() const;
    // Solves x * M = b; empty if inconsistent. Free variables set to zero.
    std::optional<BitVec> solve_left(const BitVec& b) const;

   private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> r_;
};

}  // namespace cliffsim

#endif
