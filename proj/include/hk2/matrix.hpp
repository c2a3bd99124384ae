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

#ifndef HK2_MATRIX_HPP
#define HK2_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hk2/polynomial.hpp"
#include "hk2/rational.hpp"

namespace hk2 {

// Dense matrix over an exact ring (Rat, UniPoly, BiPoly, ...).
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n, const T& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix m(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
        return m;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix m(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (is_zero_value(x.at(i, k))) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    m.at(i, j) = m.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        return m;
    }
    friend Matrix operator*(const Matrix& x, const T& s) {
        Matrix m(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = x.a_[i] * s;
        return m;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

// Fraction-free determinant (Bareiss).  Each elimination step divides by the
// previous pivot; Sylvester's identity makes the division exact over any
// integral domain, so entries stay in the ring instead of its fraction field.
template <class T>
inline T det_bareiss(Matrix<T> m, const T& one) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return one;
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero_value(m.at(k, k))) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && is_zero_value(m.at(swap_row, k))) ++swap_row;
            if (swap_row == n) return T{};
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<BiPoly>;

inline BiPoly poly_det(const PolyMatrix& m) {
    return det_bareiss(m, bi_constant(Rat(1)));
}

// Sylvester resultant of two polynomials over an exact coefficient ring.
template <class T>
inline T resultant(const Poly<T>& p, const Poly<T>& q, const T& one) {
    if (p.is_zero() || q.is_zero()) return T{};
    const std::size_t np = static_cast<std::size_t>(p.degree());
    const std::size_t nq = static_cast<std::size_t>(q.degree());
    if (np == 0 && nq == 0) return one;
    Matrix<T> s(np + nq, np + nq);
    for (std::size_t i = 0; i < nq; ++i)
        for (std::size_t j = 0; j <= np; ++j) s.at(i, i + j) = p.coeff(np - j);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j <= nq; ++j) s.at(nq + i, i + j) = q.coeff(nq - j);
    return det_bareiss(s, one);
}

// disc(p) = (-1)^(n(n-1)/2) res(p, p') / lead(p)
template <class T>
inline T poly_discriminant(const Poly<T>& p, const T& one) {
    if (p.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
    T res = resultant(p, p.derivative(), one);
    T d = exact_div(res, p.lead());
    const long n = p.degree();
    if (((n * (n - 1)) / 2) % 2) d = -d;
    return d;
}

}  // namespace hk2

#endif
