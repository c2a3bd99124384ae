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

#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "hk2/gamma.hpp"
#include "hk2/xspace.hpp"

using namespace hk2;

TEST_CASE("basis elements multiply by xor of indices", "[gamma]") {
    using G = GammaElement;
    REQUIRE(G::lambda(2) * G::lambda(3) == G::lambda(1));
    REQUIRE(G::lambda(5) * G::lambda(5) == G::lambda(0));
    REQUIRE((G::lambda(1) + G::lambda(2)) * G::lambda(3) == G::lambda(2) + G::lambda(1));
    REQUIRE(G::lambda(0) * G::lambda(7) == G::lambda(7));
    G e = Rat(2) * G::delta(2);
    REQUIRE(e.coeff(0) == 2);
    REQUIRE(e.coeff(1) == -2);
    REQUIRE(G::delta(2).str() == "l0 - l1");
}

TEST_CASE("increment classes of the basic generators", "[gamma]") {
    GeneratorRegistry reg;
    GammaElement lt = increment_class(reg.as_function(reg.t()), 1);
    REQUIRE(delta_decompose(lt, 2) == std::vector<Rat>{Rat(0), Rat(1, 2)});
    GammaElement le = increment_class(reg.as_function(reg.eps()), 1);
    REQUIRE(delta_decompose(le, 2) == std::vector<Rat>{Rat(1, 2), Rat(-1, 4)});
}

TEST_CASE("decomposition inverts the alternating-sum basis", "[gamma]") {
    GeneratorRegistry reg;
    GammaElement e = increment_class(reg.as_function(reg.phi(0)), 3);
    const std::vector<Rat> d = delta_decompose(e, 8);
    GammaElement back;
    for (std::size_t r = 1; r <= d.size(); ++r)
        back += d[r - 1] * GammaElement::delta(r);
    REQUIRE(back == e);
    REQUIRE_THROWS_AS(delta_decompose(GammaElement::lambda(4), 4), std::invalid_argument);
}

TEST_CASE("class at one level splits through the halving operators", "[gamma]") {
    GeneratorRegistry reg;
    const std::vector<XElement> elems = {reg.t(), reg.eps(), reg.phi(0), reg.phi(1)};
    for (const XElement& a : elems) {
        for (unsigned n = 0; n <= 3; ++n) {
            GammaElement whole = increment_class(reg.as_function(a), n + 1);
            GammaElement low = increment_class(reg.as_function(reg.apply_T0(a)), n);
            GammaElement high = increment_class(reg.as_function(reg.apply_T1(a)), n);
            GammaElement shifted = GammaElement::lambda(std::uint64_t(1) << n) * high;
            // The upper half enters with sign (-1)^(2^n), so only the very
            // first level flips.
            REQUIRE(whole == (n == 0 ? low - shifted : low + shifted));
        }
    }
}

TEST_CASE("increment class turns the product into ring multiplication", "[gamma]") {
    GeneratorRegistry reg;
    const std::vector<XElement> gens = {reg.t(), reg.eps(), reg.phi(0), reg.phi(1)};
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a; b < gens.size(); ++b) {
            XElement prod = reg.sharp(gens[a], gens[b]);
            for (unsigned n = 1; n <= 4; ++n) {
                GammaElement la = increment_class(reg.as_function(gens[a]), n);
                GammaElement lb = increment_class(reg.as_function(gens[b]), n);
                GammaElement lp = increment_class(reg.as_function(prod), n);
                REQUIRE(lp == la * lb);
            }
        }
    }
}

TEST_CASE("admissibility tracks midpoint convexity", "[gamma]") {
    GeneratorRegistry reg;
    GammaElement convex = increment_class(reg.as_function(reg.eps()), 2);
    REQUIRE(delta_coefficients_admissible(delta_decompose(convex, 4)));

    const std::vector<Rat> bump = {Rat(0), Rat(1, 8), Rat(1, 2), Rat(7, 8), Rat(1)};
    GammaElement wavy = increment_class(bump);
    const std::vector<Rat> d = delta_decompose(wavy, 4);
    REQUIRE(d[0] < 0);
    REQUIRE_FALSE(delta_coefficients_admissible(d));
}

TEST_CASE("tensor products of nilpotent blocks have the expected types", "[gamma]") {
    using V = std::vector<std::uint64_t>;
    REQUIRE(jordan_tensor(2, 2) == V{2, 2});
    REQUIRE(jordan_tensor(2, 3) == V{2, 4});
    REQUIRE(jordan_tensor(2, 4) == V{4, 4});
    REQUIRE(jordan_tensor(3, 3) == V{1, 4, 4});
    REQUIRE(jordan_tensor(3, 5) == V{4, 4, 7});
    REQUIRE(jordan_tensor(1, 6) == V{6});
}

TEST_CASE("ring products match tensor decompositions of modules", "[gamma]") {
    for (std::uint64_t q : {2, 4, 8}) {
        for (std::uint64_t r = 1; r <= q; ++r) {
            for (std::uint64_t s = 1; s <= q; ++s) {
                GammaElement ring = GammaElement::delta(r) * GammaElement::delta(s);
                GammaElement module = gamma_class(jordan_tensor(r, s));
                REQUIRE(ring == module);
                const std::vector<Rat> d = delta_decompose(ring, q);
                for (const Rat& c : d) REQUIRE(c >= 0);
            }
            // Multiplying by the full-length class scales it.
            REQUIRE(GammaElement::delta(r) * GammaElement::delta(q) ==
                    Rat(Int(r)) * GammaElement::delta(q));
        }
    }
}

TEST_CASE("small product identities in the delta basis", "[gamma]") {
    using G = GammaElement;
    REQUIRE(G::delta(2) * G::delta(3) == G::delta(2) + G::delta(4));
    REQUIRE(G::delta(2) * G::delta(4) == Rat(2) * G::delta(4));
}
