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

#ifndef HK2_SEXTIC_REP_HPP
#define HK2_SEXTIC_REP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hk2/colength.hpp"
#include "hk2/dyadic.hpp"
#include "hk2/matrix.hpp"
#include "hk2/polynomial.hpp"
#include "hk2/rational.hpp"
#include "hk2/rep_system.hpp"
#include "hk2/xfunction.hpp"

namespace hk2 {

// Transition data of the five-generator magnification family attached to
// the sextic u^6 + u^3*v^3 + v^6.  Writing J0 and J1 for the matrices of
// the scaled operators 4*T0 and 4*T1 on the span of beta_1..beta_5 modulo
// constants and t, the arrows are
//   J0: beta_1 -> beta_2 -> beta_3 -> beta_1,  beta_4 -> beta_5 -> 0
//   J1: beta_5 -> beta_4 -> beta_3 -> beta_5,  beta_2 -> beta_1 -> 0
// and both matrices act by columns (column j holds the image of beta_j).
struct SexticRep {
    static constexpr unsigned dim = 5;

    static std::string source_polynomial() { return "u^6+u^3*v^3+v^6"; }

    static RatMatrix j0() {
        RatMatrix m(5, 5);
        m.at(1, 0) = Rat(1);
        m.at(2, 1) = Rat(1);
        m.at(0, 2) = Rat(1);
        m.at(4, 3) = Rat(1);
        return m;
    }

    static RatMatrix j1() {
        RatMatrix m(5, 5);
        m.at(3, 4) = Rat(1);
        m.at(2, 3) = Rat(1);
        m.at(4, 2) = Rat(1);
        m.at(0, 1) = Rat(1);
        return m;
    }

    // Midpoint values c_j = beta_j(1/2) of the normalized chain; the fit in
    // fit_beta_chain recovers these from colength data.
    static std::vector<Rat> reference_c() {
        return {Rat(1, 2), Rat(7, 4), Rat(13, 4), Rat(7, 4), Rat(1, 2)};
    }

    // The family as a strongly rational representation: T0 acts through
    // j0/4 and T1 through j1/4, with the midpoint values as t-coefficients.
    static StronglyRationalRep rep() {
        StronglyRationalRep r;
        r.l = dim;
        r.R = j0() * Rat(1, 4);
        r.S = j1() * Rat(1, 4);
        r.c = reference_c();
        return r;
    }
};

// det(xI - w^2 (J0 + x J1)(J1 + x J0)) as a polynomial in x whose
// coefficients are integer polynomials in w.
inline BiPoly psi_polynomial(const RatMatrix& j0, const RatMatrix& j1) {
    if (j0.rows() != j0.cols() || j1.rows() != j1.cols() || j0.rows() != j1.rows())
        throw std::invalid_argument("psi needs two square matrices of equal size");
    const std::size_t n = j0.rows();
    Matrix<BiPoly> left(n, n), right(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            left.at(i, j) = BiPoly(std::vector<UniPoly>{UniPoly(j0.at(i, j)), UniPoly(j1.at(i, j))});
            right.at(i, j) = BiPoly(std::vector<UniPoly>{UniPoly(j1.at(i, j)), UniPoly(j0.at(i, j))});
        }
    }
    const BiPoly w2 = BiPoly::monomial(0, UniPoly::monomial(2, Rat(1)));
    Matrix<BiPoly> m = (left * right) * (-w2);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.at(i, i) + bi_x();
    return poly_det(m);
}

// Reference reciprocal factor: psi_polynomial(j0, j1) for the sextic data
// equals -x^2 times this degree-six polynomial.
inline BiPoly psi_star_reference() {
    auto w_poly = [](std::initializer_list<std::pair<std::size_t, Rat>> terms) {
        UniPoly p;
        for (const auto& [deg, c] : terms) p = p + UniPoly::monomial(deg, c);
        return p;
    };
    const UniPoly outer = w_poly({{10, Rat(1)}});                              // w^10
    const UniPoly fifth = w_poly({{8, Rat(-2)}, {4, Rat(-1)}});                // -(2w^8 + w^4)
    const UniPoly fourth = w_poly({{8, Rat(-2)}, {6, Rat(3)}, {2, Rat(2)}});   // -(2w^8 - 3w^6 - 2w^2)
    const UniPoly center =
        w_poly({{10, Rat(2)}, {8, Rat(-1)}, {6, Rat(2)}, {4, Rat(-4)}, {0, Rat(-1)}});
    return BiPoly(std::vector<UniPoly>{outer, fifth, fourth, center, fourth, fifth, outer});
}

// Fold a reciprocal polynomial of even degree 2k: returns the polynomial Q
// of degree k with p(x) / x^k = Q(x + 1/x), using the recursion
// p_0 = 2, p_1 = y, p_{j+1} = y p_j - p_{j-1} for x^j + x^{-j}.
inline BiPoly fold_reciprocal(const BiPoly& p) {
    if (p.is_zero()) return BiPoly();
    if (p.reversed() != p) throw std::invalid_argument("polynomial is not reciprocal");
    if (p.degree() % 2 != 0) throw std::invalid_argument("reciprocal fold needs even degree");
    const std::size_t k = static_cast<std::size_t>(p.degree()) / 2;
    const BiPoly y = bi_x();
    BiPoly prev = bi_constant(Rat(2));
    BiPoly cur = y;
    BiPoly out = BiPoly::monomial(0, p.coeff(k));
    for (std::size_t j = 1; j <= k; ++j) {
        out = out + BiPoly::monomial(0, p.coeff(k + j)) * cur;
        BiPoly next = y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

// Product of the evaluations at y = 2 and y = -2 of a cubic w^10 y^3 + ...
// For a folded reciprocal polynomial with root pairs (x, 1/x) this equals
// w^20 prod (x - 1/x)^2 over the three pairs, the square of the skew root
// product u_1.
inline UniPoly u1_squared_from_cubic(const BiPoly& cubic_in_y) {
    return eval_outer(cubic_in_y, Rat(2)) * eval_outer(cubic_in_y, Rat(-2));
}

// (w^2 - 1)^2 (w^2 + 1)^4 ((1 - w^2)^2 - 4 w^6)
inline UniPoly u1_squared_reference() {
    const UniPoly w2 = UniPoly::monomial(2, Rat(1));
    const UniPoly w6 = UniPoly::monomial(6, Rat(1));
    const UniPoly one = UniPoly(Rat(1));
    const UniPoly a = (w2 - one) * (w2 - one);
    const UniPoly b = (w2 + one) * (w2 + one);
    const UniPoly inner = (one - w2) * (one - w2) - UniPoly(Rat(4)) * w6;
    return a * (b * b) * inner;
}

// Square root shape of a rational value: value = (scale^2) * radicand with
// the radicand squarefree, plus the radicand's factorization.
struct ResidueReport {
    Rat point;
    Rat value;
    Rat scale;
    Int radicand = 1;
    std::vector<std::pair<Int, int>> factors;
};

inline ResidueReport residue_field_report(const UniPoly& u1sq, const Rat& w = Rat(1, 16)) {
    ResidueReport rep;
    rep.point = w;
    rep.value = u1sq.eval(w);
    if (rep.value < 0) throw std::domain_error("negative value has no real square root");
    sqrt_decompose(rep.value, rep.scale, rep.radicand);
    if (rep.radicand > 1) rep.factors = factor_int(rep.radicand);
    return rep;
}

// Monic quartic whose roots are the four sums P + 1/P, where P runs over
// products x1 x2 x3 with one member chosen from each of three reciprocal
// root pairs.  e1, e2, e3 are the elementary symmetric functions of the
// pair sums y_i = x_i + 1/x_i.  Derivation: grouping the eight products
// into reciprocal pairs gives root sums g*c and h*c with g + h = y1 y2 and
// g h = y1^2 + y2^2 - 4, and expanding the symmetric functions of the four
// roots in e1, e2, e3 yields the closed forms below.
template <class T>
inline Poly<T> triple_product_quartic(const T& e1, const T& e2, const T& e3, const T& one) {
    const T two = one + one;
    const T four = two + two;
    const T eight = four + four;
    const T s1 = e3;
    const T s2 = e2 * e2 + four * e2 - two * e1 * e1 - two * e1 * e3;
    const T s3 = e3 * (e1 * e1 - two * e2 - eight);
    const T s4 = e1 * e1 * e1 * e1 - four * e1 * e1 * e2 + eight * e1 * e3 + e3 * e3;
    return Poly<T>(std::vector<T>{s4, -s3, s2, -s1, one});
}

// Integral form of the quartic satisfied by u_2 = w^10 (P + 1/P): scale the
// roots by w^10 and clear denominators.  With E_i = w^10 e_i read off a
// cubic with leading coefficient w^10, the substitution z = U / w^10 into
// the monic quartic above and multiplication by w^40 give coefficients
//   U^3: -E3
//   U^2: E2^2 + 4 w^10 E2 - 2 E1^2 - 2 E1 E3
//   U^1: -E1^2 E3 + 2 w^10 E2 E3 + 8 w^20 E3
//   U^0: E1^4 - 4 w^10 E1^2 E2 + 8 w^20 E1 E3 + w^20 E3^2
// each a polynomial with integer coefficients.
inline BiPoly u2_quartic_from_cubic(const BiPoly& cubic_in_y) {
    if (cubic_in_y.degree() != 3) throw std::invalid_argument("expected a cubic in y");
    if (cubic_in_y.lead() != UniPoly::monomial(10, Rat(1)))
        throw std::invalid_argument("expected leading coefficient w^10");
    const UniPoly e1 = -cubic_in_y.coeff(2);
    const UniPoly e2 = cubic_in_y.coeff(1);
    const UniPoly e3 = -cubic_in_y.coeff(0);
    const UniPoly w10 = UniPoly::monomial(10, Rat(1));
    const UniPoly w20 = UniPoly::monomial(20, Rat(1));
    const UniPoly a3 = -e3;
    const UniPoly a2 =
        e2 * e2 + UniPoly(Rat(4)) * w10 * e2 - UniPoly(Rat(2)) * e1 * e1 - UniPoly(Rat(2)) * e1 * e3;
    const UniPoly a1 = -(e1 * e1 * e3) + UniPoly(Rat(2)) * w10 * e2 * e3 + UniPoly(Rat(8)) * w20 * e3;
    const UniPoly a0 = e1 * e1 * e1 * e1 - UniPoly(Rat(4)) * w10 * e1 * e1 * e2 +
                       UniPoly(Rat(8)) * w20 * e1 * e3 + w20 * e3 * e3;
    return BiPoly(std::vector<UniPoly>{a0, a1, a2, a3, UniPoly(Rat(1))});
}

// Discriminant of the quartic in the outer variable, as a polynomial in w.
inline UniPoly u2_discriminant(const BiPoly& quartic) {
    Poly<UniPoly> p = quartic;
    return poly_discriminant(p, UniPoly(Rat(1)));
}

// Polynomials in w expected to divide the quartic discriminant.
inline std::vector<UniPoly> ramified_prime_reference() {
    auto w_poly = [](std::initializer_list<std::pair<std::size_t, Rat>> terms) {
        UniPoly p;
        for (const auto& [deg, c] : terms) p = p + UniPoly::monomial(deg, c);
        return p;
    };
    return {
        w_poly({{0, Rat(1)}, {2, Rat(-1)}, {3, Rat(2)}}),
        w_poly({{0, Rat(1)}, {2, Rat(-1)}, {3, Rat(-2)}}),
        w_poly({{0, Rat(4)},
                {2, Rat(8)},
                {4, Rat(-4)},
                {6, Rat(-12)},
                {8, Rat(-23)},
                {10, Rat(-18)},
                {12, Rat(81)},
                {14, Rat(108)}}),
    };
}

// The chain of normalized generators built on top of colength data for the
// sextic: beta_1 = phi - t, then successive scaled magnifications with the
// t part stripped so every beta vanishes at both endpoints.
struct BetaChain {
    std::vector<XFunction> beta;
    std::vector<Rat> c;
};

namespace detail {

inline Dyadic lower_half_preimage(const Dyadic& t) { return Dyadic(t.numerator(), t.level() + 1); }

inline Dyadic upper_half_preimage(const Dyadic& t) {
    return Dyadic(t.numerator() + (std::uint64_t(1) << t.level()), t.level() + 1);
}

}  // namespace detail

inline BetaChain fit_beta_chain(ColengthCache* cache = nullptr) {
    const F2MultiPoly g = F2MultiPoly::parse(SexticRep::source_polynomial());
    const XFunction phi = normalized_colength_function(g, cache);

    BetaChain chain;
    XFunction beta1("beta1", [phi](const Dyadic& t) { return phi(t) - t.to_rat(); });
    const Rat c1 = beta1(1, 1);

    // Left magnification: (T0 f)(t) = f(t/2).
    XFunction beta2("beta2", [beta1, c1](const Dyadic& t) {
        return 4 * (beta1(detail::lower_half_preimage(t)) - c1 * t.to_rat());
    });
    const Rat c2 = beta2(1, 1);

    XFunction beta3("beta3", [beta2, c2](const Dyadic& t) {
        return 4 * (beta2(detail::lower_half_preimage(t)) - c2 * t.to_rat());
    });
    const Rat c3 = beta3(1, 1);

    // Right magnification: (T1 f)(t) = f((1+t)/2).
    XFunction beta5("beta5", [beta3, c3](const Dyadic& t) {
        return 4 * (beta3(detail::upper_half_preimage(t)) - c3 * (Rat(1) - t.to_rat()));
    });
    const Rat c5 = beta5(1, 1);

    XFunction beta4("beta4", [beta5, c5](const Dyadic& t) {
        return 4 * (beta5(detail::upper_half_preimage(t)) - c5 * (Rat(1) - t.to_rat()));
    });
    const Rat c4 = beta4(1, 1);

    chain.beta = {beta1, beta2, beta3, beta4, beta5};
    chain.c = {c1, c2, c3, c4, c5};
    return chain;
}

// One verified transition arrow: the scaled magnification of a chain
// generator compared against its expansion in the chain.
struct ClosureCheck {
    std::string relation;
    Dyadic point;
    Rat lhs;
    Rat rhs;
    bool ok = false;
};

// Verify the six transition arrows that the chain construction does not use
// directly.  The beta_4 relations probe a coarser grid because each beta_4
// evaluation needs colength data four levels deeper than its argument.
inline std::vector<ClosureCheck> closure_checks(const BetaChain& chain, unsigned level = 2) {
    if (chain.beta.size() != 5 || chain.c.size() != 5)
        throw std::invalid_argument("chain must hold five generators");
    const auto& b = chain.beta;
    const auto& c = chain.c;
    std::vector<ClosureCheck> out;

    struct Relation {
        std::string name;
        unsigned source;       // beta index being magnified, 0-based
        bool right;            // false: 4*T0, true: 4*T1
        int target;            // beta index of the image, -1 for zero
        unsigned c_index;      // constant carried along
        unsigned level;
    };
    const unsigned coarse = level > 1 ? level - 1 : 1;
    const std::vector<Relation> relations = {
        {"4*T0(beta3) = beta1 + 4*c3*t", 2, false, 0, 2, level},
        {"4*T0(beta4) = beta5 + 4*c4*t", 3, false, 4, 3, coarse},
        {"4*T0(beta5) = 4*c5*t", 4, false, -1, 4, level},
        {"4*T1(beta1) = 4*c1*(1-t)", 0, true, -1, 0, level},
        {"4*T1(beta2) = beta1 + 4*c2*(1-t)", 1, true, 0, 1, level},
        {"4*T1(beta4) = beta3 + 4*c4*(1-t)", 3, true, 2, 3, coarse},
    };

    for (const auto& rel : relations) {
        const std::uint64_t q = std::uint64_t(1) << rel.level;
        for (std::uint64_t i = 0; i <= q; ++i) {
            const Dyadic t(i, rel.level);
            const Dyadic pre =
                rel.right ? detail::upper_half_preimage(t) : detail::lower_half_preimage(t);
            const Rat lhs = 4 * b[rel.source](pre);
            Rat rhs = rel.target >= 0 ? b[static_cast<unsigned>(rel.target)](t) : Rat(0);
            rhs += 4 * c[rel.c_index] * (rel.right ? Rat(1) - t.to_rat() : t.to_rat());
            out.push_back({rel.name, t, lhs, rhs, lhs == rhs});
        }
    }
    return out;
}

}  // namespace hk2

#endif
