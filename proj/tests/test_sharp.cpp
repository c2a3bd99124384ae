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

#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "hk2/sharp.hpp"
#include "hk2/xfunction.hpp"
#include "hk2/xspace.hpp"

using namespace hk2;

namespace {

// All dyadics i/2^level including endpoints.
std::vector<Dyadic> grid(unsigned level) {
    std::vector<Dyadic> out;
    for (std::uint64_t i = 0; i <= (std::uint64_t(1) << level); ++i)
        out.emplace_back(i, level);
    return out;
}

}  // namespace

TEST_CASE("pinned product values", "[sharp]") {
    GeneratorRegistry reg;
    const XElement ee = reg.sharp(reg.eps(), reg.eps());
    REQUIRE(reg.eval(ee, Dyadic(1, 1)) == Rat(1, 8));
    const XElement ep = reg.sharp(reg.eps(), reg.phi(0));
    REQUIRE(reg.eval(ep, Dyadic(1, 1)) == Rat(3, 16));
    REQUIRE(reg.eval(ep, Dyadic(1, 2)) == Rat(29, 256));
}

TEST_CASE("t is idempotent and 1 annihilates", "[sharp]") {
    GeneratorRegistry reg;
    REQUIRE(reg.sharp(reg.t(), reg.t()) == reg.t());
    for (const XElement& b : {reg.t(), reg.eps(), reg.phi(0), reg.phi(3)}) {
        REQUIRE(reg.sharp(reg.one(), b) == XElement());
        // The product with t only sees the endpoint gap, which vanishes for
        // every generator that is zero at both ends.
        if (b != reg.t()) REQUIRE(reg.sharp(reg.t(), b) == XElement());
    }
}

TEST_CASE("symbolic product agrees with the recursive blackbox", "[sharp]") {
    GeneratorRegistry reg;
    const std::vector<XElement> gens = {reg.one(), reg.t(),      reg.eps(),
                                        reg.phi(0), reg.phi(1), reg.phi(2)};
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a; b < gens.size(); ++b) {
            XElement sym = reg.sharp(gens[a], gens[b]);
            SharpBlackbox box(reg.as_function(gens[a]), reg.as_function(gens[b]), 8, true);
            for (const Dyadic& x : grid(5)) REQUIRE(reg.eval(sym, x) == box.eval(x));
        }
    }
}

TEST_CASE("product is bilinear and symmetric", "[sharp]") {
    GeneratorRegistry reg;
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> numer(-6, 6);
    std::uniform_int_distribution<int> denom(1, 4);
    const std::vector<XElement> gens = {reg.t(), reg.eps(), reg.phi(0), reg.phi(1)};
    for (int rep = 0; rep < 12; ++rep) {
        const Rat c1(numer(rng), denom(rng));
        const Rat c2(numer(rng), denom(rng));
        const XElement& a = gens[rep % gens.size()];
        const XElement& b = gens[(rep + 1) % gens.size()];
        const XElement& g = gens[(rep + 2) % gens.size()];
        REQUIRE(reg.sharp(c1 * a + c2 * b, g) ==
                c1 * reg.sharp(a, g) + c2 * reg.sharp(b, g));
        REQUIRE(reg.sharp(g, a) == reg.sharp(a, g));
    }
}

TEST_CASE("product is associative on a grid", "[sharp]") {
    GeneratorRegistry reg;
    const std::vector<XElement> triples[] = {
        {reg.eps(), reg.eps(), reg.eps()},
        {reg.eps(), reg.phi(0), reg.eps()},
        {reg.phi(0), reg.eps(), reg.phi(1)},
        {reg.t(), reg.eps(), reg.phi(0)},
    };
    for (const auto& tr : triples) {
        XElement left = reg.sharp(reg.sharp(tr[0], tr[1]), tr[2]);
        XElement right = reg.sharp(tr[0], reg.sharp(tr[1], tr[2]));
        for (const Dyadic& x : grid(5)) REQUIRE(reg.eval(left, x) == reg.eval(right, x));
    }
}

TEST_CASE("products of convex generators stay convex", "[sharp]") {
    GeneratorRegistry reg;
    const std::vector<XElement> gens = {reg.t(), reg.eps(), reg.phi(0), reg.phi(1), reg.phi(2)};
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a; b < gens.size(); ++b) {
            XFunction f = reg.as_function(reg.sharp(gens[a], gens[b]));
            REQUIRE(is_convex_on_grid(f, 6));
        }
    }
}

TEST_CASE("Lipschitz constants multiply through the product", "[sharp]") {
    GeneratorRegistry reg;
    // Known global slope bounds: 1 for t and eps, (4m+4)/3 for the phi family.
    struct Entry {
        XElement e;
        Rat bound;
    };
    GeneratorRegistry r2;
    const std::vector<Entry> entries = {
        {r2.t(), Rat(1)},
        {r2.eps(), Rat(1)},
        {r2.phi(0), Rat(4, 3)},
        {r2.phi(1), Rat(8, 3)},
        {r2.phi(2), Rat(4)},
    };
    for (const Entry& a : entries) {
        for (const Entry& b : entries) {
            XFunction f = r2.as_function(r2.sharp(a.e, b.e));
            REQUIRE(slope_bound_on_grid(f, 6) <= a.bound * b.bound);
        }
    }
}

TEST_CASE("blackbox memoization pays off on repeated queries", "[sharp]") {
    GeneratorRegistry reg;
    SharpBlackbox plain(reg.as_function(reg.eps()), reg.as_function(reg.phi(0)), 8, false);
    SharpBlackbox cached(reg.as_function(reg.eps()), reg.as_function(reg.phi(0)), 8, true);
    for (const Dyadic& x : grid(4)) REQUIRE(plain.eval(x) == cached.eval(x));

    // A second sweep over the same points: the cached engine answers each
    // interior point from its table with a single probe.
    const std::uint64_t first_pass = cached.calls();
    for (const Dyadic& x : grid(4)) REQUIRE(plain.eval(x) == cached.eval(x));
    REQUIRE(cached.memo_hits() == 15);
    REQUIRE(cached.calls() == first_pass + 17);
    REQUIRE(plain.memo_hits() == 0);
    REQUIRE(plain.calls() > cached.calls());
}
