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

#include <map>
#include <tuple>

#include <catch2/catch_amalgamated.hpp>

#include "hk2/expr_parse.hpp"
#include "hk2/xfunction.hpp"
#include "hk2/xspace.hpp"

using namespace hk2;

namespace {

// Standalone evaluator for the phi family, written straight from the
// half-interval recursion with the closed form eps(t) = t - t^2 plugged in.
// Deliberately shares no code with the registry.
class DirectPhi {
public:
    Rat eps(const Dyadic& t) const {
        const Rat x = t.to_rat();
        return x - x * x;
    }

    Rat phi(unsigned m, const Dyadic& t) {
        if (t.is_endpoint()) return Rat(0);
        const auto key = std::make_tuple(m, t.numerator(), t.level());
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const Rat c(4 * std::uint64_t(m) + 3, 8);
        Rat out;
        if (t.leq_half()) {
            const Dyadic s = t.doubled();
            const Rat sv = s.to_rat();
            if (m == 0)
                out = (phi(1, s) + Rat(3) * sv) / 8;
            else if (m % 2 == 0)
                out = (phi(m + 1, s) + Rat(8) * c * sv) / 8;
            else
                out = (phi(m - 1, s) + eps(s) + Rat(8) * c * sv) / 8;
        } else {
            const Dyadic s = t.doubled_minus_one();
            const Rat sv = Rat(1) - s.to_rat();
            if (m == 0)
                out = (phi(0, s) + Rat(3) * sv) / 8;
            else if (m % 2 == 0)
                out = (phi(m - 1, s) + eps(s) + Rat(8) * c * sv) / 8;
            else
                out = (phi(m + 1, s) + Rat(8) * c * sv) / 8;
        }
        memo_.emplace(key, out);
        return out;
    }

private:
    std::map<std::tuple<unsigned, std::uint64_t, unsigned>, Rat> memo_;
};

}  // namespace

TEST_CASE("builtin generators take their tabulated values", "[xspace]") {
    GeneratorRegistry reg;
    REQUIRE(reg.eval(reg.t(), Dyadic(3, 3)) == Rat(3, 8));
    REQUIRE(reg.eval(reg.one(), Dyadic(3, 3)) == 1);
    REQUIRE(reg.eval(reg.eps(), Dyadic(1, 1)) == Rat(1, 4));
    REQUIRE(reg.eval(reg.eps(), Dyadic(1, 2)) == Rat(3, 16));
    REQUIRE(reg.eval(reg.phi(0), Dyadic(1, 1)) == Rat(3, 8));
    REQUIRE(reg.eval(reg.phi(0), Dyadic(1, 2)) == Rat(19, 64));
    REQUIRE(reg.eval(reg.phi(0), Dyadic(1, 4)) == Rat(335, 4096));
    REQUIRE(reg.eval(reg.phi(1), Dyadic(1, 1)) == Rat(7, 8));
}

TEST_CASE("eps agrees with its parabola closed form on a fine grid", "[xspace]") {
    GeneratorRegistry reg;
    for (std::uint64_t i = 0; i <= 64; ++i) {
        const Dyadic t(i, 6);
        const Rat x = t.to_rat();
        REQUIRE(reg.eval(reg.eps(), t) == x - x * x);
    }
}

TEST_CASE("halving operators act by substitution", "[xspace]") {
    GeneratorRegistry reg;
    const std::vector<XElement> elems = {reg.t(), reg.eps(), reg.phi(0), reg.phi(2),
                                         reg.phi(3), reg.t() + Rat(1, 2) * reg.eps()};
    for (const XElement& e : elems) {
        const XElement lo = reg.apply_T0(e);
        const XElement hi = reg.apply_T1(e);
        for (std::uint64_t i = 0; i <= 8; ++i) {
            REQUIRE(reg.eval(lo, Dyadic(i, 3)) == reg.eval(e, Dyadic(i, 4)));
            REQUIRE(reg.eval(hi, Dyadic(i, 3)) == reg.eval(e, Dyadic(i + 8, 4)));
        }
    }
}

TEST_CASE("registry phi matches an independent recursion", "[xspace]") {
    GeneratorRegistry reg;
    DirectPhi direct;
    for (unsigned m = 0; m <= 4; ++m) {
        for (std::uint64_t i = 0; i <= 32; ++i) {
            const Dyadic t(i, 5);
            REQUIRE(reg.eval(reg.phi(m), t) == direct.phi(m, t));
        }
    }
}

TEST_CASE("phi values near zero obey the small-end bounds", "[xspace][bounds]") {
    GeneratorRegistry reg;
    for (unsigned m = 0; m <= 6; ++m) {
        const Rat num(4 * std::uint64_t(m) + (m % 2 == 0 ? 4 : 3));
        for (unsigned n = 1; n <= 8; ++n) {
            const std::uint64_t q = std::uint64_t(1) << n;
            REQUIRE(reg.eval(reg.phi(m), Dyadic(1, n)) <= num / (Rat(3) * Rat(q)));
        }
    }
}

TEST_CASE("phi values near one obey the large-end bounds", "[xspace][bounds]") {
    GeneratorRegistry reg;
    for (unsigned m = 0; m <= 6; ++m) {
        const Rat num(4 * std::uint64_t(m) + (m % 2 == 1 ? 4 : 3));
        for (unsigned n = 1; n <= 8; ++n) {
            const std::uint64_t q = std::uint64_t(1) << n;
            REQUIRE(reg.eval(reg.phi(m), Dyadic(q - 1, n)) <= num / (Rat(3) * Rat(q)));
        }
    }
}

TEST_CASE("phi peaks at the midpoint among its near-half values", "[xspace][bounds]") {
    GeneratorRegistry reg;
    for (unsigned m = 0; m <= 6; ++m) {
        const Rat mid = reg.eval(reg.phi(m), Dyadic(1, 1));
        for (unsigned n = 1; n <= 8; ++n) {
            const std::uint64_t q = std::uint64_t(1) << n;
            REQUIRE(reg.eval(reg.phi(m), Dyadic(q + 1, n + 1)) <= mid);
            REQUIRE(reg.eval(reg.phi(m), Dyadic(q - 1, n + 1)) <= mid);
        }
    }
}

TEST_CASE("phi is midpoint convex with bounded slopes", "[xspace][bounds]") {
    GeneratorRegistry reg;
    for (unsigned m = 0; m <= 6; ++m) {
        XFunction f = reg.as_function(reg.phi(m));
        const std::vector<Rat> values = grid_values(f, 8);
        REQUIRE(is_convex_on_grid(values));
        REQUIRE(slope_bound_on_grid(values) <= Rat(4 * std::uint64_t(m) + 4, 3));
    }
}

TEST_CASE("multiplicity estimates of the cubic model grow toward the limit", "[xspace]") {
    GeneratorRegistry reg;
    XFunction f = reg.as_function(reg.t() + reg.phi(0));
    const std::vector<Rat> mu = mu_estimate_sequence(f, 5);
    REQUIRE(mu == std::vector<Rat>{Rat(1), Rat(7, 4), Rat(35, 16), Rat(145, 64), Rat(591, 256)});
    for (std::size_t n = 1; n < mu.size(); ++n) REQUIRE(mu[n] >= mu[n - 1]);
    REQUIRE(Rat(7, 3) - mu.back() == Rat(19, 768));
}

TEST_CASE("element algebra and rendering", "[xspace]") {
    GeneratorRegistry reg;
    XElement e = Rat(2) * reg.t() - Rat(1, 2) * reg.eps() + reg.phi(1);
    REQUIRE(e.coeff("t") == 2);
    REQUIRE(e.coeff("eps") == Rat(-1, 2));
    REQUIRE(e.coeff("phi1") == 1);
    REQUIRE(e.coeff("absent") == 0);
    REQUIRE(e - e == XElement());
    REQUIRE(reg.eval(e, Dyadic(1, 1)) ==
            Rat(2) * Rat(1, 2) - Rat(1, 2) * Rat(1, 4) + Rat(7, 8));
}

TEST_CASE("element expressions parse into linear combinations", "[xspace]") {
    REQUIRE(parse_element("t+phi0") == XElement::single("t") + XElement::single("phi0"));
    REQUIRE(parse_element("2*t - 1/2*eps + phi1") ==
            XElement::single("t", Rat(2)) + XElement::single("eps", Rat(-1, 2)) +
                XElement::single("phi1"));
    REQUIRE(parse_element("-eps") == XElement::single("eps", Rat(-1)));
    REQUIRE(parse_element("3/4") == XElement::single("1", Rat(3, 4)));
    REQUIRE(parse_element("sharp[eps|phi0]") == XElement::single("sharp[eps|phi0]"));
    REQUIRE_THROWS_AS(parse_element(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_element("t +"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_element("2 * * t"), std::invalid_argument);
}

TEST_CASE("custom generators are guarded against collisions", "[xspace]") {
    GeneratorRegistry reg;
    reg.add_custom("walker", Rat(0), Rat(1), XElement::single("t"), XElement::single("t"));
    REQUIRE_THROWS(reg.add_custom("walker", Rat(0), Rat(0), XElement(), XElement()));
    REQUIRE_THROWS(reg.add_custom("t", Rat(0), Rat(0), XElement(), XElement()));
    REQUIRE_THROWS(reg.eval(XElement::single("no_such_generator"), Dyadic(1, 1)));
}
