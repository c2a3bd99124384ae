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

#include <catch2/catch_amalgamated.hpp>

#include "hk2/quadratic.hpp"
#include "hk2/rational.hpp"

using namespace hk2;

TEST_CASE("rational strings round trip", "[rational]") {
    REQUIRE(rat_to_string(Rat(3, 8)) == "3/8");
    REQUIRE(rat_to_string(Rat(-3, 8)) == "-3/8");
    REQUIRE(rat_to_string(Rat(5)) == "5");
    REQUIRE(rat_to_string(Rat(0)) == "0");
    REQUIRE(rat_from_string("3/8") == Rat(3, 8));
    REQUIRE(rat_from_string("-21/6") == Rat(-7, 2));
    REQUIRE(rat_from_string("17") == Rat(17));
    REQUIRE(rat_from_string(rat_to_string(Rat(123456789, 33))) == Rat(123456789, 33));
}

TEST_CASE("integer and rational powers", "[rational]") {
    REQUIRE(int_pow(Int(2), 10) == 1024);
    REQUIRE(int_pow(Int(-3), 3) == -27);
    REQUIRE(int_pow(Int(7), 0) == 1);
    REQUIRE(rat_pow(Rat(1, 2), 6) == Rat(1, 64));
    REQUIRE(rat_pow(Rat(3, 4), 0) == 1);
}

TEST_CASE("exact division refuses remainders by construction", "[rational]") {
    REQUIRE(exact_div(Rat(3, 4), Rat(1, 2)) == Rat(3, 2));
    REQUIRE(exact_div(Rat(0), Rat(5)) == 0);
    REQUIRE_THROWS(exact_div(Rat(1), Rat(0)));
}

TEST_CASE("integer square roots and squarefree parts", "[rational]") {
    REQUIRE(int_sqrt(Int(0)) == 0);
    REQUIRE(int_sqrt(Int(144)) == 12);
    REQUIRE(int_sqrt(Int(145)) == 12);
    REQUIRE(is_perfect_square(Int(1)));
    REQUIRE(is_perfect_square(Int(65536)));
    REQUIRE_FALSE(is_perfect_square(Int(65537)));
    REQUIRE(squarefree_part(Int(1)) == 1);
    REQUIRE(squarefree_part(Int(12)) == 3);
    REQUIRE(squarefree_part(Int(49)) == 1);
    REQUIRE(squarefree_part(Int(4161599)) == 4161599);
}

TEST_CASE("trial division factors the residue constant", "[rational]") {
    const auto factors = factor_int(Int(4161599));
    REQUIRE(factors.size() == 3);
    REQUIRE(factors[0] == std::pair<Int, int>{Int(13), 1});
    REQUIRE(factors[1] == std::pair<Int, int>{Int(157), 1});
    REQUIRE(factors[2] == std::pair<Int, int>{Int(2039), 1});

    const auto repeated = factor_int(Int(360));
    REQUIRE(repeated == std::vector<std::pair<Int, int>>{{Int(2), 3}, {Int(3), 2}, {Int(5), 1}});
}

TEST_CASE("square root decomposition splits scale and radicand", "[rational]") {
    Rat s;
    Int d;
    sqrt_decompose(Rat(175, 4), s, d);  // 175/4 = (5/2)^2 * 7
    REQUIRE(s == Rat(5, 2));
    REQUIRE(d == 7);
    REQUIRE(s * s * Rat(d) == Rat(175, 4));

    sqrt_decompose(Rat(9), s, d);
    REQUIRE(s == 3);
    REQUIRE(d == 1);
}

TEST_CASE("quadratic field arithmetic is exact", "[quadratic]") {
    const QuadraticNumber x(Rat(1, 3), Rat(5, 98), 7);
    const QuadraticNumber conj(Rat(1, 3), Rat(-5, 98), 7);

    SECTION("product with the conjugate is rational") {
        const QuadraticNumber n = x * conj;
        REQUIRE(n == QuadraticNumber(Rat(1, 9) - Rat(25, 9604) * 7));
    }
    SECTION("sum, difference and scalar multiples") {
        REQUIRE(x + conj == QuadraticNumber(Rat(2, 3)));
        REQUIRE(x - x == QuadraticNumber(Rat(0)));
        REQUIRE(x + x == QuadraticNumber(Rat(2, 3), Rat(5, 49), 7));
    }
    SECTION("division undoes multiplication") {
        const QuadraticNumber y(Rat(2), Rat(-1, 2), 7);
        REQUIRE((x * y) / y == x);
    }
    SECTION("sign and ordering agree with the real embedding") {
        REQUIRE(x.sign() > 0);
        REQUIRE((x - QuadraticNumber(Rat(1, 2))).sign() < 0);
        REQUIRE(QuadraticNumber(Rat(0), Rat(1), 7) > QuadraticNumber(Rat(5, 2)));
        REQUIRE(x.abs() == x);
        REQUIRE((-x).abs() == x);
    }
}

TEST_CASE("square roots of rationals land in the right field", "[quadratic]") {
    const QuadraticNumber r7 = QuadraticNumber::sqrt_of(Rat(7));
    REQUIRE(r7 * r7 == QuadraticNumber(Rat(7)));
    const QuadraticNumber r = QuadraticNumber::sqrt_of(Rat(175, 4));
    REQUIRE(r * r == QuadraticNumber(Rat(175, 4)));
    REQUIRE(QuadraticNumber::sqrt_of(Rat(9, 4)) == QuadraticNumber(Rat(3, 2)));
}

TEST_CASE("quadratic numbers print in the announced format", "[quadratic]") {
    REQUIRE(QuadraticNumber(Rat(1, 3), Rat(5, 98), 7).str() == "1/3 + (5/98)*sqrt(7)");
    REQUIRE(QuadraticNumber(Rat(4, 3), Rat(5, 98), 7).str() == "4/3 + (5/98)*sqrt(7)");
    REQUIRE(QuadraticNumber(Rat(1), Rat(-2), 5).str() == "1 - 2*sqrt(5)");
    REQUIRE(QuadraticNumber(Rat(0), Rat(1), 2).str() == "0 + sqrt(2)");
    REQUIRE(QuadraticNumber(Rat(3, 4)).str() == "3/4");
}
