/*
 * Copyright 2026 the hk2 authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HK2_F2_MATRIX_HPP
#define HK2_F2_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hk2 {

// Matrix over F2 with rows packed into 64-bit words.  Padding bits beyond
// the column count are kept zero; rank and products never depend on them.
class F2Matrix {
public:
    F2Matrix() : rows_(0), cols_(0), words_(0) {}
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), a_(rows * words_, 0) {}

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (a_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        std::uint64_t& w = a_[i * words_ + j / 64];
        const std::uint64_t mask = std::uint64_t(1) << (j % 64);
        if (v) w |= mask;
        else w &= ~mask;
    }
    void flip(std::size_t i, std::size_t j) {
        a_[i * words_ + j / 64] ^= std::uint64_t(1) << (j % 64);
    }

    friend bool operator==(const F2Matrix& x, const F2Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend F2Matrix operator*(const F2Matrix& x, const F2Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
        F2Matrix m(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            std::uint64_t* out = &m.a_[i * m.words_];
            for (std::size_t wk = 0; wk < x.words_; ++wk) {
                std::uint64_t bits = x.a_[i * x.words_ + wk];
                while (bits) {
                    const std::size_t k = wk * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    const std::uint64_t* yr = &y.a_[k * y.words_];
                    for (std::size_t w = 0; w < y.words_; ++w) out[w] ^= yr[w];
                }
            }
        }
        return m;
    }

    F2Matrix pow(unsigned e) const {
        if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
        F2Matrix r = identity(rows_), base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    F2Matrix transposed() const {
        F2Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t bits = a_[i * words_ + w];
                while (bits) {
                    const std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    m.set(j, i, true);
                }
            }
        return m;
    }

    // Gaussian elimination on a copy; the receiver is not modified.
    std::size_t rank() const {
        std::vector<std::uint64_t> m = a_;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            const std::size_t wc = col / 64;
            const std::uint64_t mask = std::uint64_t(1) << (col % 64);
            std::size_t piv = r;
            while (piv < rows_ && !(m[piv * words_ + wc] & mask)) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t w = wc; w < words_; ++w)
                    std::swap(m[r * words_ + w], m[piv * words_ + w]);
            const std::uint64_t* prow = &m[r * words_];
            for (std::size_t i = piv + 1; i < rows_; ++i) {
                std::uint64_t* row = &m[i * words_];
                if (row[wc] & mask)
                    for (std::size_t w = wc; w < words_; ++w) row[w] ^= prow[w];
            }
            ++r;
        }
        return r;
    }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> a_;
};

inline std::size_t f2_rank(const F2Matrix& m) { return m.rank(); }

}  // namespace hk2

#endif
