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

#ifndef HK2_CONJECTURE_HPP
#define HK2_CONJECTURE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hk2/band.hpp"
#include "hk2/colength.hpp"
#include "hk2/dyadic.hpp"
#include "hk2/f2_poly.hpp"
#include "hk2/quadratic.hpp"
#include "hk2/rational.hpp"
#include "hk2/sharp.hpp"
#include "hk2/xfunction.hpp"
#include "hk2/xspace.hpp"

namespace hk2 {

// The nodal plane cubic whose normalized colengths the generator model
// t + phi0 is believed to reproduce.
inline std::string nodal_cubic_text() { return "x^3+y^3+x*y*z"; }

// One grid point of a colength-versus-model comparison.
struct SweepEntry {
    std::uint64_t q = 0;
    std::uint64_t i = 0;
    std::int64_t colength_value = 0;
    Rat phi_value;
    Rat model_value;
    bool ok = false;
};

struct SweepReport {
    std::string poly;
    std::string model;
    std::vector<SweepEntry> entries;
    std::size_t mismatches = 0;
};

// Compare the normalized colength function of a polynomial against a
// generator combination at every i/q for q = 2, 4, ..., qmax.
inline SweepReport conjecture_sweep(const std::string& poly_text, GeneratorRegistry& reg,
                                    const XElement& model, std::uint64_t qmax,
                                    ColengthCache* cache = nullptr, unsigned threads = 1) {
    if (qmax < 2 || (qmax & (qmax - 1)) != 0)
        throw std::invalid_argument("qmax must be a power of two, at least 2");
    const F2MultiPoly f = F2MultiPoly::parse(poly_text);
    const unsigned r = static_cast<unsigned>(f.vars().size());

    std::vector<ColengthJob> jobs;
    for (std::uint64_t q = 2; q <= qmax; q <<= 1)
        for (std::uint64_t i = 0; i <= q; ++i) jobs.push_back({q, i});
    const std::vector<std::int64_t> values = colength_batch(f, jobs, threads, cache);

    SweepReport report;
    report.poly = f.canonical_string();
    report.model = model.str();
    report.entries.reserve(jobs.size());
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        SweepEntry e;
        e.q = jobs[k].q;
        e.i = jobs[k].i;
        e.colength_value = values[k];
        e.phi_value = Rat(Int(values[k]), int_pow(Int(e.q), r));
        const unsigned level = static_cast<unsigned>(std::countr_zero(e.q));
        e.model_value = reg.eval(model, Dyadic(e.i, level));
        e.ok = e.phi_value == e.model_value;
        if (!e.ok) ++report.mismatches;
        report.entries.push_back(std::move(e));
    }
    return report;
}

// 2^n phi_f(2^-n) for n = 0 .. count-1.
inline std::vector<Rat> mu_estimates(const std::string& poly_text, unsigned count,
                                     ColengthCache* cache = nullptr) {
    const F2MultiPoly f = F2MultiPoly::parse(poly_text);
    return mu_estimate_sequence(normalized_colength_function(f, cache), count);
}

// One grid point of the disjoint-variable sum identity
// phi_{f+g} = phi_f # phi_g.
struct PairCheckEntry {
    Dyadic t;
    Rat direct;
    Rat product;
    bool ok = false;
};

struct PairCheckReport {
    std::string left;
    std::string right;
    std::string sum;
    std::vector<PairCheckEntry> entries;
    std::size_t mismatches = 0;
};

// Evaluate phi of the disjoint-variable sum directly and as the # product
// of the factors' normalized colength functions, on the full grid at the
// given level.
inline PairCheckReport disjoint_sum_check(const std::string& f_text, const std::string& g_text,
                                          unsigned level, ColengthCache* cache = nullptr,
                                          unsigned threads = 1) {
    const F2MultiPoly f = F2MultiPoly::parse(f_text);
    const F2MultiPoly g = F2MultiPoly::parse(g_text);
    const F2MultiPoly h = F2MultiPoly::disjoint_sum(f, g);

    // Warm the heavy joint colengths in parallel before the serial walk.
    std::vector<ColengthJob> jobs;
    const std::uint64_t q = std::uint64_t(1) << level;
    for (std::uint64_t i = 0; i <= q; ++i) jobs.push_back({q, i});
    colength_batch(h, jobs, threads, cache);

    const XFunction phi_f = normalized_colength_function(f, cache);
    const XFunction phi_g = normalized_colength_function(g, cache);
    const XFunction phi_h = normalized_colength_function(h, cache);
    SharpBlackbox box(phi_f, phi_g, level + 1, true);

    PairCheckReport report;
    report.left = f.canonical_string();
    report.right = g.canonical_string();
    report.sum = h.canonical_string();
    for (std::uint64_t i = 0; i <= q; ++i) {
        PairCheckEntry e;
        e.t = Dyadic(i, level);
        e.direct = phi_h(e.t);
        e.product = box.eval(e.t);
        e.ok = e.direct == e.product;
        if (!e.ok) ++report.mismatches;
        report.entries.push_back(std::move(e));
    }
    return report;
}

// Exact multiplicity of the two-plus-three variable sum uv + nodal cubic:
// one plus the band limit.
inline QuadraticNumber mu_uv_plus_nodal_exact() {
    return QuadraticNumber(Rat(1)) + band_limit();
}

}  // namespace hk2

#endif
