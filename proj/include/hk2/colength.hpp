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

#ifndef HK2_COLENGTH_HPP
#define HK2_COLENGTH_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hk2/colength_cache.hpp"
#include "hk2/f2_matrix.hpp"
#include "hk2/f2_poly.hpp"
#include "hk2/sha256.hpp"
#include "hk2/xfunction.hpp"

namespace hk2 {

namespace detail {

// Packed monomials with all exponents < q, q a power of two <= 128, so a
// plain 64-bit add never carries across lanes and reduction is one mask test.
inline std::vector<std::uint64_t> reduce_mod_powers(const std::vector<std::uint64_t>& monos,
                                                    std::uint64_t q_mask) {
    std::vector<std::uint64_t> out;
    out.reserve(monos.size());
    for (std::uint64_t m : monos) {
        if ((m & ~q_mask) == 0) out.push_back(m);
    }
    return out;
}

inline void cancel_pairs_inplace(std::vector<std::uint64_t>& monos) {
    std::sort(monos.begin(), monos.end());
    std::size_t w = 0;
    std::size_t r = 0;
    while (r < monos.size()) {
        if (r + 1 < monos.size() && monos[r] == monos[r + 1]) {
            r += 2;  // coefficients live in GF(2)
        } else {
            monos[w++] = monos[r++];
        }
    }
    monos.resize(w);
}

inline std::vector<std::uint64_t> mul_reduced(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b,
                                              std::uint64_t q_mask) {
    std::vector<std::uint64_t> out;
    out.reserve(a.size() * b.size());
    for (std::uint64_t ma : a) {
        for (std::uint64_t mb : b) {
            const std::uint64_t sum = ma + mb;
            if ((sum & ~q_mask) == 0) out.push_back(sum);
        }
    }
    cancel_pairs_inplace(out);
    return out;
}

inline std::vector<std::uint64_t> pow_reduced(std::vector<std::uint64_t> base, std::uint64_t e,
                                              std::uint64_t q_mask) {
    std::vector<std::uint64_t> result{0};  // the monomial 1
    while (e > 0) {
        if (e & 1) {
            result = mul_reduced(result, base, q_mask);
            if (result.empty()) return result;
        }
        e >>= 1;
        if (e > 0) base = mul_reduced(base, base, q_mask);
    }
    return result;
}

}  // namespace detail

// Hard bounds for the dense GF(2) rank computation.  q^nvars bits per row
// and per column; past these limits the matrix no longer fits comfortably.
inline constexpr std::uint64_t kMaxQuotientDim = 32768;
inline constexpr std::uint64_t kMaxQ = 128;

// The multiplication-by-f^i operator on F_2[u_1..u_r]/(u_1^q,..,u_r^q),
// written in the monomial basis (column j maps to the reduction of
// f^i * basis_j).
inline F2Matrix multiplication_matrix(const F2MultiPoly& f, std::uint64_t q, std::uint64_t i) {
    if (q == 0 || (q & (q - 1)) != 0) throw std::invalid_argument("q must be a power of two");
    if (q > kMaxQ) throw std::invalid_argument("q exceeds the packed-monomial limit of 128");
    if (f.has_constant_term())
        throw std::invalid_argument("polynomial must have no constant term");

    const std::size_t r = f.vars().size();
    std::uint64_t dim = 1;
    for (std::size_t v = 0; v < r; ++v) {
        dim *= q;
        if (dim > kMaxQuotientDim)
            throw std::invalid_argument("quotient dimension q^r exceeds the supported limit");
    }

    // Per-lane mask with q-1 in each of the r exponent lanes.
    std::uint64_t q_mask = 0;
    for (std::size_t v = 0; v < r; ++v) q_mask |= (q - 1) << (8 * v);

    std::vector<std::uint64_t> g =
        detail::pow_reduced(detail::reduce_mod_powers(f.monomials(), q_mask), i, q_mask);

    F2Matrix mat(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    if (g.empty()) return mat;

    // Mixed-radix index of a monomial: sum of exp_v * q^v.  Because every
    // digit of a valid product stays below q, index(e + mu) is just
    // index(e) + index(mu), so each generator contributes a fixed offset.
    struct Shift {
        std::uint64_t offset;
        std::uint64_t packed;
    };
    std::vector<Shift> shifts;
    shifts.reserve(g.size());
    for (std::uint64_t m : g) {
        std::uint64_t off = 0;
        std::uint64_t scale = 1;
        for (std::size_t v = 0; v < r; ++v) {
            off += ((m >> (8 * v)) & 0xff) * scale;
            scale *= q;
        }
        shifts.push_back(Shift{off, m});
    }

    std::vector<std::uint64_t> digits(r, 0);
    for (std::uint64_t src = 0; src < dim; ++src) {
        for (const Shift& s : shifts) {
            bool ok = true;
            for (std::size_t v = 0; v < r; ++v) {
                if (digits[v] + ((s.packed >> (8 * v)) & 0xff) >= q) {
                    ok = false;
                    break;
                }
            }
            if (ok) mat.set(static_cast<std::size_t>(src + s.offset), static_cast<std::size_t>(src), true);
        }
        for (std::size_t v = 0; v < r; ++v) {
            if (++digits[v] < q) break;
            digits[v] = 0;
        }
    }
    return mat;
}

// dim F_2[u]/(u^q, f^i) computed as q^r - rank(multiplication by f^i).
inline std::int64_t colength(const F2MultiPoly& f, std::uint64_t q, std::uint64_t i,
                             ColengthCache* cache = nullptr) {
    std::string hash;
    if (cache != nullptr) {
        hash = detail::sha256_hex(f.canonical_string());
        if (auto hit = cache->lookup(hash, q, i)) return *hit;
    }
    F2Matrix mat = multiplication_matrix(f, q, i);
    const std::int64_t value =
        static_cast<std::int64_t>(mat.rows()) - static_cast<std::int64_t>(mat.rank());
    if (cache != nullptr) cache->store(hash, q, i, value);
    return value;
}

inline std::int64_t colength(const std::string& f_text, std::uint64_t q, std::uint64_t i,
                             ColengthCache* cache = nullptr) {
    return colength(F2MultiPoly::parse(f_text), q, i, cache);
}

struct ColengthJob {
    std::uint64_t q = 0;
    std::uint64_t i = 0;
};

// Evaluate many (q, i) pairs for one polynomial, fanning out over threads.
// Results come back in request order regardless of the thread count.
inline std::vector<std::int64_t> colength_batch(const F2MultiPoly& f,
                                                const std::vector<ColengthJob>& jobs,
                                                unsigned threads = 1,
                                                ColengthCache* cache = nullptr) {
    std::vector<std::int64_t> results(jobs.size(), 0);
    if (jobs.empty()) return results;
    if (threads == 0) threads = 1;
    if (threads == 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k)
            results[k] = colength(f, jobs[k].q, jobs[k].i, cache);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= jobs.size()) return;
                try {
                    results[k] = colength(f, jobs[k].q, jobs[k].i, cache);
                } catch (const std::exception& e) {
                    errors[w] = e.what();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const std::string& e : errors) {
        if (!e.empty()) throw std::runtime_error(e);
    }
    return results;
}

// Normalized colength i/q -> colength(f, q, i) / q^r as an exact function on
// dyadic points.  The cache pointer, when given, must outlive the function.
inline XFunction normalized_colength_function(const F2MultiPoly& f,
                                              ColengthCache* cache = nullptr) {
    const std::size_t r = f.vars().size();
    return XFunction("phi[" + f.canonical_string() + "]",
                     [f, r, cache](const Dyadic& t) -> Rat {
                         const std::uint64_t q = t.denominator();
                         const std::int64_t c = colength(f, q, t.numerator(), cache);
                         return Rat(Int(c), int_pow(Int(q), static_cast<unsigned>(r)));
                     });
}

}  // namespace hk2

#endif
