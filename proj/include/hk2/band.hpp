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

#ifndef HK2_BAND_HPP
#define HK2_BAND_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hk2/quadratic.hpp"
#include "hk2/rational.hpp"
#include "hk2/series.hpp"

namespace hk2 {

// Integer sequence generated by iterating the band operator
//   T(E_1) = E_1 + E_2 + 6t
//   T(E_k) = E_{k-1} + E_{k+1} + (8k-2)t + ee      for k > 1
//   T(ee)  = 4ee + 4t
//   T(t)   = 16t
// starting from E_1 and reading off the t-coefficient after each step.
// The first values are 0, 6, 116, 1908, 30664, ...
inline std::vector<Int> e1_band_sequence(unsigned count) {
    std::vector<Int> out;
    if (count == 0) return out;
    std::vector<Int> e{1};
    Int ee = 0;
    Int t = 0;
    out.push_back(t);
    for (unsigned n = 1; n < count; ++n) {
        std::vector<Int> new_e(e.size() + 1, Int(0));
        Int new_ee = 4 * ee;
        Int new_t = 16 * t + 4 * ee;
        for (std::size_t k0 = 0; k0 < e.size(); ++k0) {
            const Int& a = e[k0];
            if (a == 0) continue;
            if (k0 == 0) {
                new_e[0] += a;
                new_e[1] += a;
                new_t += 6 * a;
            } else {
                new_e[k0 - 1] += a;
                new_e[k0 + 1] += a;
                new_t += Int(8 * (k0 + 1) - 2) * a;
                new_ee += a;
            }
        }
        e = std::move(new_e);
        ee = new_ee;
        t = new_t;
        out.push_back(t);
    }
    return out;
}

// The same numbers as coefficients of an explicit algebraic function:
//   [4w - 16w^2 + 16w^3 + (2w - 12w^2) sqrt(1-4w^2)]
//   / [1 - 24w + 148w^2 - 336w^3 + 256w^4].
inline TruncSeries band_series_closed_form(std::size_t order) {
    auto series = [order](std::initializer_list<std::pair<std::size_t, Rat>> entries) {
        TruncSeries s(order);
        for (const auto& [k, v] : entries) {
            if (k <= order) s.coeff(k) = v;
        }
        return s;
    };
    const TruncSeries root = series_sqrt(series({{0, Rat(1)}, {2, Rat(-4)}}));
    const TruncSeries poly_part = series({{1, Rat(4)}, {2, Rat(-16)}, {3, Rat(16)}});
    const TruncSeries root_factor = series({{1, Rat(2)}, {2, Rat(-12)}});
    const TruncSeries denom =
        series({{0, Rat(1)}, {1, Rat(-24)}, {2, Rat(148)}, {3, Rat(-336)}, {4, Rat(256)}});
    return series_div(poly_part + root_factor * root, denom);
}

// Limit of band value / 16^n: one third plus five over ninety-eight times
// the square root of seven.
inline QuadraticNumber band_limit() {
    return QuadraticNumber(Rat(1, 3), Rat(5, 98), 7);
}

inline QuadraticNumber lambda_exact() { return band_limit(); }

struct BandConvergenceRow {
    unsigned n = 0;
    Rat scaled;           // band value / 16^n
    QuadraticNumber gap;  // |scaled - limit|, exact
};

inline std::vector<BandConvergenceRow> band_convergence(unsigned count) {
    const std::vector<Int> seq = e1_band_sequence(count);
    const QuadraticNumber limit = band_limit();
    std::vector<BandConvergenceRow> rows;
    rows.reserve(seq.size());
    for (unsigned n = 0; n < seq.size(); ++n) {
        BandConvergenceRow row;
        row.n = n;
        row.scaled = Rat(seq[n], int_pow(Int(16), n));
        row.gap = (QuadraticNumber(row.scaled) - limit).abs();
        rows.push_back(row);
    }
    return rows;
}

// Strict decrease of the gap from index `from` on.
inline bool band_gaps_strictly_decreasing(const std::vector<BandConvergenceRow>& rows,
                                          unsigned from = 2) {
    for (std::size_t n = from; n + 1 < rows.size(); ++n) {
        if (!(rows[n + 1].gap < rows[n].gap)) return false;
    }
    return true;
}

}  // namespace hk2

#endif
