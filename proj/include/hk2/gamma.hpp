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

#ifndef HK2_GAMMA_HPP
#define HK2_GAMMA_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hk2/f2_matrix.hpp"
#include "hk2/rational.hpp"
#include "hk2/xfunction.hpp"

namespace hk2 {

// Rational combination of basis classes l_0, l_1, l_2, ... whose ring
// product works by xor of indices: l_i * l_j = l_{i xor j}.  Writing V_r
// for the r-dimensional module with one unipotent Jordan block, l_i stands
// for the signed difference (-1)^i ([V_{i+1}] - [V_i]); the xor rule is the
// tensor-product arithmetic of those differences in characteristic two.
class GammaElement {
public:
    GammaElement() = default;

    static GammaElement lambda(std::uint64_t i) {
        GammaElement e;
        e.terms_[i] = Rat(1);
        return e;
    }

    // Alternating prefix sum l_0 - l_1 + l_2 - ... with r terms.
    static GammaElement delta(std::uint64_t r) {
        GammaElement e;
        for (std::uint64_t i = 0; i < r; ++i) e.terms_[i] = (i % 2 == 0) ? Rat(1) : Rat(-1);
        return e;
    }

    const std::map<std::uint64_t, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(std::uint64_t i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(std::uint64_t i, const Rat& c) {
        if (c == 0) return;
        Rat& slot = terms_[i];
        slot += c;
        if (slot == 0) terms_.erase(i);
    }

    GammaElement& operator+=(const GammaElement& o) {
        for (const auto& [i, c] : o.terms_) add_term(i, c);
        return *this;
    }
    GammaElement& operator-=(const GammaElement& o) {
        for (const auto& [i, c] : o.terms_) add_term(i, -c);
        return *this;
    }
    GammaElement& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [i, c] : terms_) c *= s;
        return *this;
    }

    friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
    friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
    friend GammaElement operator*(const Rat& s, GammaElement a) { return a *= s; }
    friend GammaElement operator*(GammaElement a, const Rat& s) { return a *= s; }
    friend GammaElement operator-(GammaElement a) { return a *= Rat(-1); }

    friend GammaElement operator*(const GammaElement& a, const GammaElement& b) {
        GammaElement out;
        for (const auto& [i, ci] : a.terms_)
            for (const auto& [j, cj] : b.terms_) out.add_term(i ^ j, ci * cj);
        return out;
    }

    friend bool operator==(const GammaElement& a, const GammaElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GammaElement& a, const GammaElement& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [i, c] : terms_) {
            Rat a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1) out << rat_to_string(a) << "*";
            out << "l" << i;
            first = false;
        }
        return out.str();
    }

private:
    std::map<std::uint64_t, Rat> terms_;
};

// Increment class of grid data: for values (f(i/q))_{i=0..q},
//   sum over i of (f((i+1)/q) - f(i/q)) (-1)^i l_i.
inline GammaElement increment_class(const std::vector<Rat>& values) {
    if (values.size() < 2) throw std::invalid_argument("grid needs at least two values");
    GammaElement out;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        Rat c = values[i + 1] - values[i];
        if (i % 2 == 1) c = -c;
        out.add_term(i, c);
    }
    return out;
}
inline GammaElement increment_class(const XFunction& f, unsigned level) {
    return increment_class(grid_values(f, level));
}

// Rewrite an element supported on l_0..l_{q-1} in the delta basis.
// Returns d with e = sum of d[r-1] * delta(r) for r = 1..q.
inline std::vector<Rat> delta_decompose(const GammaElement& e, std::uint64_t q) {
    std::vector<Rat> c(static_cast<std::size_t>(q) + 1, Rat(0));
    for (const auto& [i, a] : e.terms()) {
        if (i >= q) throw std::invalid_argument("element has support beyond l_{q-1}");
        c[static_cast<std::size_t>(i)] = (i % 2 == 0) ? a : -a;
    }
    std::vector<Rat> d(static_cast<std::size_t>(q), Rat(0));
    for (std::size_t r = 1; r <= q; ++r) d[r - 1] = c[r - 1] - c[r];
    return d;
}

// Shape test on a delta decomposition: every coefficient below the top one
// must be nonnegative.  For the increment class of level-n grid data this
// detects midpoint concavity of the data.
inline bool delta_coefficients_admissible(const std::vector<Rat>& d) {
    if (d.empty()) return true;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
        if (d[k] < 0) return false;
    }
    return true;
}

// Jordan block sizes of N_r tensor N_s over GF(2), where N_r is a single
// nilpotent block of size r and the tensor map is N tensor I + I tensor N.
// Sizes come back ascending.
inline std::vector<std::uint64_t> jordan_tensor(std::uint64_t r, std::uint64_t s) {
    if (r == 0 || s == 0) return {};
    if (r * s > 65536) throw std::invalid_argument("tensor dimension too large");
    const std::size_t n = static_cast<std::size_t>(r * s);
    F2Matrix t(n, n);
    for (std::uint64_t i = 0; i < r; ++i) {
        for (std::uint64_t j = 0; j < s; ++j) {
            const std::size_t col = static_cast<std::size_t>(i * s + j);
            if (i + 1 < r) t.set(static_cast<std::size_t>((i + 1) * s + j), col, true);
            if (j + 1 < s) t.set(static_cast<std::size_t>(i * s + j + 1), col, true);
        }
    }
    std::vector<std::size_t> ranks{n};  // rank of t^0
    F2Matrix power = t;
    while (true) {
        const std::size_t rk = power.rank();
        ranks.push_back(rk);
        if (rk == 0) break;
        power = power * t;
    }
    // ranks[k-1] - ranks[k] counts blocks of size at least k.
    std::vector<std::uint64_t> sizes;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const std::size_t at_least_k = ranks[k - 1] - ranks[k];
        const std::size_t at_least_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t m = at_least_k1; m < at_least_k; ++m) sizes.push_back(k);
    }
    return sizes;
}

// Class of a block multiset in the l-basis.  A module with blocks b_1,
// b_2, ... has class sum_i (-1)^i dim(T^i V / T^{i+1} V) l_i, and a single
// block of size b contributes the alternating sum l_0 - l_1 + ... =
// delta(b).
inline GammaElement gamma_class(const std::vector<std::uint64_t>& blocks) {
    GammaElement out;
    for (std::uint64_t b : blocks) out += GammaElement::delta(b);
    return out;
}

}  // namespace hk2

#endif
