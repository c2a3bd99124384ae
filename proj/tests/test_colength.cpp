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

#include <cstdio>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "hk2/colength.hpp"
#include "hk2/colength_cache.hpp"

using namespace hk2;

TEST_CASE("colength of the nodal cubic at small q", "[colength]") {
    REQUIRE(colength("x^3+y^3+x*y*z", 2, 1) == 7);
    REQUIRE(colength("x^3+y^3+x*y*z", 4, 1) == 35);
    REQUIRE(colength("x^3+y^3+x*y*z", 16, 1) == 591);
}

TEST_CASE("one variable powers saturate at the quotient dimension", "[colength]") {
    // Multiplication by u^(a*i) on F2[u]/(u^q) drops rank by min(q, a*i).
    for (std::uint64_t q : {2ull, 4ull, 8ull, 16ull}) {
        for (unsigned a : {1u, 2u, 3u, 5u}) {
            const F2MultiPoly f = F2MultiPoly::parse("u^" + std::to_string(a));
            for (std::uint64_t i = 0; i <= q; ++i) {
                const std::uint64_t expect = std::min<std::uint64_t>(q, a * i);
                REQUIRE(colength(f, q, i) == std::int64_t(expect));
            }
        }
    }
}

TEST_CASE("colength of a product of two variables", "[colength]") {
    // (uv)^i kills exactly the (q-i)^2 complement of a square.
    for (std::uint64_t q : {2ull, 4ull, 8ull}) {
        for (std::uint64_t i = 0; i <= q; ++i) {
            const std::int64_t expect = std::int64_t(q * q - (q - i) * (q - i));
            REQUIRE(colength("u*v", q, i) == expect);
        }
    }
    REQUIRE(colength("u*v", 8, 3) == 39);
}

TEST_CASE("zeroth power always has zero colength", "[colength]") {
    REQUIRE(colength("x^3+y^3+x*y*z", 4, 0) == 0);
    REQUIRE(colength("u*v", 16, 0) == 0);
}

TEST_CASE("normalized values are consistent across grid refinement", "[colength]") {
    const F2MultiPoly f = F2MultiPoly::parse("x^3+y^3+x*y*z");
    // i/q and 2i/2q name the same point, so the normalized values agree.
    for (std::uint64_t q : {2ull, 4ull, 8ull}) {
        for (std::uint64_t i = 0; i <= q; ++i) {
            const Rat lhs(Int(colength(f, q, i)), int_pow(Int(q), 3));
            const Rat rhs(Int(colength(f, 2 * q, 2 * i)), int_pow(Int(2 * q), 3));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("multiplication matrix has the full quotient dimension", "[colength]") {
    const F2MultiPoly f = F2MultiPoly::parse("u*v");
    const F2Matrix m = multiplication_matrix(f, 4, 1);
    REQUIRE(m.rows() == 16);
    REQUIRE(m.cols() == 16);
    REQUIRE(m.rank() == 9);  // colength 16 - 9 = 7 = q^2 - (q-1)^2
}

TEST_CASE("input validation refuses malformed requests", "[colength]") {
    REQUIRE_THROWS(colength("x+1", 4, 1));        // constant term
    REQUIRE_THROWS(colength("x^3", 3, 1));        // q not a power of two
    REQUIRE_THROWS(colength("x^3", 256, 1));      // q beyond the packed limit
    REQUIRE_THROWS(colength("a*b*c*d*e*f", 8, 1));  // dimension cap
}

TEST_CASE("batch computation matches pointwise calls", "[colength]") {
    const F2MultiPoly f = F2MultiPoly::parse("x^3+y^3+x*y*z");
    std::vector<ColengthJob> jobs;
    for (std::uint64_t i = 0; i <= 4; ++i) jobs.push_back({4, i});
    jobs.push_back({2, 1});
    const auto serial = colength_batch(f, jobs, 1);
    const auto parallel = colength_batch(f, jobs, 4);
    REQUIRE(serial == parallel);
    for (std::size_t k = 0; k < jobs.size(); ++k)
        REQUIRE(serial[k] == colength(f, jobs[k].q, jobs[k].i));
}

TEST_CASE("cache stores and replays values", "[colength]") {
    ColengthCache cache;
    const F2MultiPoly f = F2MultiPoly::parse("x^3+y^3+x*y*z");
    const std::int64_t first = colength(f, 4, 3, &cache);
    REQUIRE(colength(f, 4, 3, &cache) == first);

    // A poisoned entry is trusted blindly, proving the lookup path is hit.
    ColengthCache poisoned;
    poisoned.store(detail::sha256_hex(f.canonical_string()), 4, 3, 12345);
    REQUIRE(colength(f, 4, 3, &poisoned) == 12345);
}

TEST_CASE("cache file round trips through disk", "[colength]") {
    const std::string path = "colength_cache_test.csv";
    std::remove(path.c_str());
    {
        ColengthCache cache(path);
        colength("u*v", 8, 3, &cache);
        colength("u*v", 8, 5, &cache);
    }
    {
        ColengthCache reread(path);
        REQUIRE(reread.lookup(detail::sha256_hex("u*v"), 8, 3) == 39);
        REQUIRE(reread.lookup(detail::sha256_hex("u*v"), 8, 5) == 55);
        REQUIRE_FALSE(reread.lookup(detail::sha256_hex("u*v"), 8, 7).has_value());
    }
    std::remove(path.c_str());
}

TEST_CASE("normalized colength function is a dyadic interpolation", "[colength]") {
    const XFunction phi = normalized_colength_function(F2MultiPoly::parse("u*v"));
    REQUIRE(phi(Dyadic(0, 0)) == 0);
    REQUIRE(phi(Dyadic(1, 0)) == 1);
    REQUIRE(phi(Dyadic(1, 1)) == Rat(3, 4));     // 1 - (1/2)^2
    REQUIRE(phi(Dyadic(3, 3)) == Rat(39, 64));
    REQUIRE(phi(Dyadic(1, 2)) == Rat(7, 16));
}
