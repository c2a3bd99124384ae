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

#include "hk2/band.hpp"
#include "hk2/rep_system.hpp"

using namespace hk2;

TEST_CASE("band recurrence reproduces the frozen integer sequence", "[band]") {
    const std::vector<Int> expected = {
        Int(0),
        Int(6),
        Int(116),
        Int(1908),
        Int(30664),
        Int(490988),
        Int(7856856),
        Int(125712968),
        Int(2011418576),
        Int(32182737228),
        Int("514923946456"),
        Int("8238783726872"),
        Int("131820541922928"),
    };
    REQUIRE(e1_band_sequence(13) == expected);
}

TEST_CASE("closed form generating function matches the recurrence", "[band]") {
    const std::size_t order = 42;
    const TruncSeries closed = band_series_closed_form(order);
    const std::vector<Int> seq = e1_band_sequence(order + 1);
    for (std::size_t n = 0; n <= order; ++n) REQUIRE(closed.coeff(n) == Rat(seq[n]));
}

TEST_CASE("scaled band values approach the quadratic limit", "[band]") {
    REQUIRE(lambda_exact() == QuadraticNumber(Rat(1, 3), Rat(5, 98), 7));
    REQUIRE(lambda_exact().str() == "1/3 + (5/98)*sqrt(7)");

    const std::vector<BandConvergenceRow> rows = band_convergence(13);
    REQUIRE(rows[12].scaled == Rat(Int("8238783870183"), Int("17592186044416")));
    REQUIRE(band_gaps_strictly_decreasing(rows, 2));
    REQUIRE(rows[12].gap < QuadraticNumber(Rat(1, 10000)));
}

TEST_CASE("one dimensional representation recovers the scalar band", "[band]") {
    const std::vector<Rat> seq = general_e1_sequence(eps_rep(), 11);
    const std::vector<Int> ints = e1_band_sequence(11);
    for (unsigned n = 0; n < 11; ++n)
        REQUIRE(seq[n] == Rat(ints[n], int_pow(Int(4), n)));
}

TEST_CASE("representation validation rejects mismatched shapes", "[band]") {
    StronglyRationalRep bad;
    REQUIRE_THROWS_AS(validate_rep(bad), std::invalid_argument);
    bad.l = 2;
    bad.S = RatMatrix(2, 2);
    bad.R = RatMatrix(2, 1);
    bad.c = {Rat(0), Rat(0)};
    REQUIRE_THROWS_AS(validate_rep(bad), std::invalid_argument);
    bad.R = RatMatrix(2, 2);
    bad.c = {Rat(0)};
    REQUIRE_THROWS_AS(validate_rep(bad), std::invalid_argument);
}

TEST_CASE("band matrix assembles identically from two by two tiles", "[band]") {
    StronglyRationalRep rep;
    rep.l = 2;
    rep.S = RatMatrix(2, 2);
    rep.R = RatMatrix(2, 2);
    rep.S.at(0, 0) = Rat(1, 4);
    rep.S.at(0, 1) = Rat(1, 2);
    rep.S.at(1, 0) = Rat(-1, 4);
    rep.R.at(0, 0) = Rat(1, 8);
    rep.R.at(1, 1) = Rat(3, 4);
    rep.c = {Rat(1, 2), Rat(1, 4)};

    for (unsigned pairs : {1u, 2u, 4u}) {
        const RatMatrix direct = truncated_band_matrix(rep, 2 * pairs);
        const RatMatrix tiled = assemble_from_block_system(build_block_system(rep), pairs);
        REQUIRE(direct == tiled);
    }
}

TEST_CASE("absolute variant strips signs before assembly", "[band]") {
    StronglyRationalRep rep;
    rep.l = 1;
    rep.S = RatMatrix(1, 1);
    rep.R = RatMatrix(1, 1);
    rep.S.at(0, 0) = Rat(-1, 4);
    rep.R.at(0, 0) = Rat(1, 4);
    rep.c = {Rat(1, 4)};

    StronglyRationalRep flipped = rep;
    flipped.S.at(0, 0) = Rat(1, 4);

    REQUIRE(truncated_band_matrix(rep, 5, BlockVariant::Absolute) ==
            truncated_band_matrix(flipped, 5, BlockVariant::Plain));
    REQUIRE(abs_entries(flipped.S) == flipped.S);
    // With all entries positive the two variants coincide.
    REQUIRE(truncated_band_matrix(flipped, 4, BlockVariant::Absolute) ==
            truncated_band_matrix(flipped, 4, BlockVariant::Plain));
}
