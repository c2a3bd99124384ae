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

#ifndef HK2_SERIES_HPP
#define HK2_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hk2/polynomial.hpp"
#include "hk2/rational.hpp"

namespace hk2 {

// Power series in one variable truncated at a fixed order: coefficients
// c[0..order] are exact rationals, everything above is discarded.
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : c_(order + 1) {}
    TruncSeries(std::size_t order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        c_.resize(order + 1);
    }
    static TruncSeries from_poly(const UniPoly& p, std::size_t order) {
        TruncSeries s(order);
        for (std::size_t i = 0; i <= order; ++i) s.c_[i] = p.coeff(i);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Rat& coeff(std::size_t k) const {
        if (k >= c_.size()) throw std::out_of_range("coefficient beyond truncation order");
        return c_[k];
    }
    Rat& coeff(std::size_t k) {
        if (k >= c_.size()) throw std::out_of_range("coefficient beyond truncation order");
        return c_[k];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(check_same(a, b));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(check_same(a, b));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(check_same(a, b));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            for (std::size_t j = 0; i + j < r.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

private:
    static std::size_t check_same(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
        return a.order();
    }
    std::vector<Rat> c_;
};

// Series division; the divisor needs an invertible (nonzero) constant term.
inline TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
    if (b.coeff(0) == 0) throw std::domain_error("series division needs a unit constant term");
    TruncSeries q(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        Rat s = a.coeff(n);
        for (std::size_t k = 0; k < n; ++k) s -= q.coeff(k) * b.coeff(n - k);
        q.coeff(n) = s / b.coeff(0);
    }
    return q;
}

// Square root with positive constant term.  The constant term must be a
// nonzero rational square; the remaining coefficients follow from
// r_n = (c_n - sum_{0<i<n} r_i r_{n-i}) / (2 r_0).
inline TruncSeries series_sqrt(const TruncSeries& a) {
    if (a.coeff(0) == 0)
        throw std::domain_error("series sqrt needs a nonzero constant term");
    Rat r0;
    if (!try_rat_sqrt(a.coeff(0), r0))
        throw std::domain_error("series sqrt: constant term is not a rational square");
    TruncSeries r(a.order());
    r.coeff(0) = r0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rat s = a.coeff(n);
        for (std::size_t i = 1; i < n; ++i) s -= r.coeff(i) * r.coeff(n - i);
        r.coeff(n) = s / (2 * r0);
    }
    return r;
}

}  // namespace hk2

#endif
