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

#ifndef HK2_REP_SYSTEM_HPP
#define HK2_REP_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hk2/matrix.hpp"
#include "hk2/rational.hpp"

namespace hk2 {

// A family beta_1..beta_l of functions vanishing at both endpoints and
// carried into its own span by the magnification operators:
//   T0(beta_j) = sum_i R[i][j] beta_i + c_j t
//   T1(beta_j) = sum_i S[i][j] beta_i + c_j (1 - t).
// The matrices act by columns: column j lists the expansion of beta_j.
// Evaluating the first line at 1 shows c_j = beta_j(1/2).
struct StronglyRationalRep {
    unsigned l = 0;
    RatMatrix S{0, 0};
    RatMatrix R{0, 0};
    std::vector<Rat> c;
};

inline void validate_rep(const StronglyRationalRep& rep) {
    if (rep.l == 0) throw std::invalid_argument("representation must have l >= 1");
    if (rep.S.rows() != rep.l || rep.S.cols() != rep.l || rep.R.rows() != rep.l ||
        rep.R.cols() != rep.l || rep.c.size() != rep.l)
        throw std::invalid_argument("representation matrices must be l x l with l values");
}

// One-dimensional representation realized by the staircase deviation
// generator: 4 T0(eps) = eps + t and 4 T1(eps) = eps + (1 - t).
inline StronglyRationalRep eps_rep() {
    StronglyRationalRep rep;
    rep.l = 1;
    rep.S = RatMatrix(1, 1);
    rep.R = RatMatrix(1, 1);
    rep.S.at(0, 0) = Rat(1, 4);
    rep.R.at(0, 0) = Rat(1, 4);
    rep.c = {Rat(1, 4)};
    return rep;
}

// t-coefficient sequence of T^n applied to beta_1 # phi_0, where T is eight
// times the left magnification and the basis evolves as
//   E_{j,0}   -> sum_i S_ij E_{i,0} + sum_i R_ij E_{i,1} + 6 c_j t
//   E_{j,m}   -> sum_i R_ij E_{i,m-1} + sum_i S_ij E_{i,m+1}
//                + (8m+6) c_j t + sum_i R_ij F_i          for m odd
//   E_{j,m}   -> sum_i S_ij E_{i,m-1} + sum_i R_ij E_{i,m+1}
//                + (8m+6) c_j t + sum_i S_ij F_i          for m > 0 even
//   F_j       -> 2 sum_i (R_ij + S_ij) F_i + 4 c_j t
//   t         -> 4t.
// Here E_{j,m} stands for beta_j # phi_m and F_j for beta_j # eps.
inline std::vector<Rat> general_e1_sequence(const StronglyRationalRep& rep, unsigned count) {
    validate_rep(rep);
    std::vector<Rat> out;
    if (count == 0) return out;
    const unsigned l = rep.l;

    std::map<std::uint64_t, std::vector<Rat>> e;  // m -> coefficients of E_{j,m}
    e[0] = std::vector<Rat>(l, Rat(0));
    e[0][0] = Rat(1);
    std::vector<Rat> f(l, Rat(0));
    Rat t(0);
    out.push_back(t);

    for (unsigned n = 1; n < count; ++n) {
        std::map<std::uint64_t, std::vector<Rat>> new_e;
        std::vector<Rat> new_f(l, Rat(0));
        Rat new_t = 4 * t;
        auto slot = [&new_e, l](std::uint64_t m) -> std::vector<Rat>& {
            auto it = new_e.find(m);
            if (it == new_e.end()) it = new_e.emplace(m, std::vector<Rat>(l, Rat(0))).first;
            return it->second;
        };
        for (const auto& [m, coeffs] : e) {
            for (unsigned j = 0; j < l; ++j) {
                const Rat& a = coeffs[j];
                if (a == 0) continue;
                new_t += Rat(8 * m + 6) * rep.c[j] * a;
                if (m == 0) {
                    auto& same = slot(0);
                    auto& up = slot(1);
                    for (unsigned i = 0; i < l; ++i) {
                        same[i] += rep.S.at(i, j) * a;
                        up[i] += rep.R.at(i, j) * a;
                    }
                } else if (m % 2 == 1) {
                    auto& down = slot(m - 1);
                    auto& up = slot(m + 1);
                    for (unsigned i = 0; i < l; ++i) {
                        down[i] += rep.R.at(i, j) * a;
                        up[i] += rep.S.at(i, j) * a;
                        new_f[i] += rep.R.at(i, j) * a;
                    }
                } else {
                    auto& down = slot(m - 1);
                    auto& up = slot(m + 1);
                    for (unsigned i = 0; i < l; ++i) {
                        down[i] += rep.S.at(i, j) * a;
                        up[i] += rep.R.at(i, j) * a;
                        new_f[i] += rep.S.at(i, j) * a;
                    }
                }
            }
        }
        for (unsigned j = 0; j < l; ++j) {
            const Rat& b = f[j];
            if (b == 0) continue;
            new_t += 4 * rep.c[j] * b;
            for (unsigned i = 0; i < l; ++i)
                new_f[i] += 2 * (rep.R.at(i, j) + rep.S.at(i, j)) * b;
        }
        e = std::move(new_e);
        f = std::move(new_f);
        t = new_t;
        out.push_back(t);
    }
    return out;
}

// Band matrix of the E-dynamics alone, written in l x l blocks indexed by
// the phi level m = 0..blocks-1.  Block (0,0) holds S; below the diagonal
// the blocks alternate R, S, R, ... and to the right of the diagonal they
// alternate R, S, R, ... as well, both starting with R.
enum class BlockVariant { Plain, Absolute };

inline RatMatrix abs_entries(RatMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) < 0) m.at(i, j) = -m.at(i, j);
    return m;
}

inline RatMatrix truncated_band_matrix(const StronglyRationalRep& rep, unsigned blocks,
                                       BlockVariant variant = BlockVariant::Plain) {
    validate_rep(rep);
    const unsigned l = rep.l;
    const RatMatrix s = variant == BlockVariant::Absolute ? abs_entries(rep.S) : rep.S;
    const RatMatrix r = variant == BlockVariant::Absolute ? abs_entries(rep.R) : rep.R;
    RatMatrix v(std::size_t(l) * blocks, std::size_t(l) * blocks);
    auto put = [&](unsigned bi, unsigned bj, const RatMatrix& blk) {
        for (unsigned i = 0; i < l; ++i)
            for (unsigned j = 0; j < l; ++j)
                v.at(std::size_t(bi) * l + i, std::size_t(bj) * l + j) = blk.at(i, j);
    };
    if (blocks == 0) return v;
    put(0, 0, s);
    for (unsigned m = 0; m + 1 < blocks; ++m) {
        // Level m feeds level m+1 through R for even m and S for odd m,
        // and the matrix carrying level m+1 back down is the same one.
        const RatMatrix& hop = (m % 2 == 0) ? r : s;
        put(m + 1, m, hop);
        put(m, m + 1, hop);
    }
    return v;
}

// The same matrix assembled from 2l x 2l tiles
//   D = [S R; R 0]   on the leading diagonal position,
//   B = [0 R; R 0]   on the remaining diagonal positions,
//   A = [0 S; 0 0]   below the diagonal,
//   C = [0 0; S 0]   above the diagonal.
struct BlockSystem {
    RatMatrix A{0, 0};
    RatMatrix B{0, 0};
    RatMatrix C{0, 0};
    RatMatrix D{0, 0};
};

inline BlockSystem build_block_system(const StronglyRationalRep& rep,
                                      BlockVariant variant = BlockVariant::Plain) {
    validate_rep(rep);
    const unsigned l = rep.l;
    const RatMatrix s = variant == BlockVariant::Absolute ? abs_entries(rep.S) : rep.S;
    const RatMatrix r = variant == BlockVariant::Absolute ? abs_entries(rep.R) : rep.R;
    const std::size_t n = 2 * std::size_t(l);
    BlockSystem sys{RatMatrix(n, n), RatMatrix(n, n), RatMatrix(n, n), RatMatrix(n, n)};
    for (unsigned i = 0; i < l; ++i) {
        for (unsigned j = 0; j < l; ++j) {
            sys.D.at(i, j) = s.at(i, j);
            sys.D.at(i, l + j) = r.at(i, j);
            sys.D.at(l + i, j) = r.at(i, j);
            sys.B.at(i, l + j) = r.at(i, j);
            sys.B.at(l + i, j) = r.at(i, j);
            sys.A.at(i, l + j) = s.at(i, j);
            sys.C.at(l + i, j) = s.at(i, j);
        }
    }
    return sys;
}

// Assemble the truncated band matrix from the four tiles; `pairs` counts
// 2l x 2l diagonal positions.  Useful as a structural cross-check against
// truncated_band_matrix.
inline RatMatrix assemble_from_block_system(const BlockSystem& sys, unsigned pairs) {
    const std::size_t n = sys.D.rows();
    RatMatrix v(n * pairs, n * pairs);
    auto put = [&](unsigned bi, unsigned bj, const RatMatrix& tile) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v.at(bi * n + i, bj * n + j) = tile.at(i, j);
    };
    for (unsigned k = 0; k < pairs; ++k) {
        put(k, k, k == 0 ? sys.D : sys.B);
        if (k + 1 < pairs) {
            put(k + 1, k, sys.A);
            put(k, k + 1, sys.C);
        }
    }
    return v;
}

}  // namespace hk2

#endif
