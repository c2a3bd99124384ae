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

#ifndef HK2_POLYNOMIAL_HPP
#define HK2_POLYNOMIAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hk2/rational.hpp"

namespace hk2 {

inline bool is_zero_value(const Rat& v) { return v == 0; }

// Dense univariate polynomial over a commutative ring T.  Canonical form has
// no trailing zero coefficients; the zero polynomial is the empty vector and
// reports degree -1.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit Poly(const T& constant) : c_{constant} { normalize(); }

    static Poly monomial(std::size_t deg, const T& coeff) {
        std::vector<T> v(deg + 1);
        v[deg] = coeff;
        return Poly(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    // Coefficient of x^k, defaulting past the end.
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T{}; }
    const T& lead() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size()) v[i] = v[i] + a.c_[i];
            if (i < b.c_.size()) v[i] = v[i] + b.c_[i];
        }
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<T> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> v(a.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.c_[i] * s;
        return Poly(std::move(v));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly r = monomial(0, unit());
        Poly base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    // Horner evaluation; U must absorb products with T.
    template <class U>
    U eval(const U& x) const {
        U acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            T k{};
            for (std::size_t j = 0; j < i; ++j) k = k + unit();
            v[i - 1] = c_[i] * k;
        }
        return Poly(std::move(v));
    }

    // x^degree * p(1/x); meaningful for reciprocal-symmetry checks.
    Poly reversed() const {
        std::vector<T> v(c_.rbegin(), c_.rend());
        return Poly(std::move(v));
    }

private:
    static T unit() {
        // Works for Rat and recursively for Poly coefficients.
        return unit_value(static_cast<T*>(nullptr));
    }
    static Rat unit_value(Rat*) { return Rat(1); }
    template <class U>
    static Poly<U> unit_value(Poly<U>*) { return Poly<U>::monomial(0, Poly<U>::unit()); }

    void normalize() {
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;

    template <class U>
    friend class Poly;
    template <class U>
    friend bool is_zero_value(const Poly<U>&);
    template <class U>
    friend Poly<U> exact_div(const Poly<U>&, const Poly<U>&);
};

template <class T>
inline bool is_zero_value(const Poly<T>& p) { return p.is_zero(); }

// Exact polynomial division in the outer variable.  Succeeds iff b divides a
// in the polynomial ring (coefficient divisions are recursively exact); a
// non-divisor raises domain_error.
template <class T>
inline Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return Poly<T>();
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    Poly<T> r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        T t = exact_div(r.lead(), b.lead());
        q[k] = t;
        r = r - Poly<T>::monomial(k, t) * b;
        if (!r.is_zero() && r.degree() >= static_cast<long>(k) + b.degree())
            throw std::domain_error("inexact polynomial division");
    }
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return Poly<T>(std::move(q));
}

template <class T>
inline bool divides(const Poly<T>& b, const Poly<T>& a) {
    try {
        exact_div(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// Univariate over Q in one named variable; bivariate as x-major with
// UniPoly coefficients in w.
using UniPoly = Poly<Rat>;
using BiPoly = Poly<UniPoly>;

inline UniPoly uni_from(std::initializer_list<Rat> coeffs) {
    return UniPoly(std::vector<Rat>(coeffs));
}

inline BiPoly bi_constant(const Rat& v) { return BiPoly::monomial(0, UniPoly(v)); }
inline BiPoly bi_x() { return BiPoly::monomial(1, UniPoly(Rat(1))); }
inline BiPoly bi_w() { return BiPoly::monomial(0, UniPoly::monomial(1, Rat(1))); }

// Substitute a rational for the outer variable, leaving a polynomial in w.
inline UniPoly eval_outer(const BiPoly& p, const Rat& x) {
    UniPoly acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * UniPoly(x) + p.coeffs()[i];
    return acc;
}

// Substitute a rational for the inner variable, leaving a polynomial in x.
inline UniPoly eval_inner(const BiPoly& p, const Rat& w) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const auto& cw : p.coeffs()) v.push_back(cw.eval(w));
    return UniPoly(std::move(v));
}

struct PolyTerm {
    Rat coeff;
    std::size_t xdeg = 0;
    std::size_t wdeg = 0;
};

inline std::vector<PolyTerm> bi_terms(const BiPoly& p) {
    std::vector<PolyTerm> out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const UniPoly& cw = p.coeffs()[i];
        for (std::size_t j = 0; j < cw.coeffs().size(); ++j) {
            if (cw.coeffs()[j] != 0) out.push_back({cw.coeffs()[j], i, j});
        }
    }
    return out;
}

inline std::string uni_to_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Rat& c = p.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Rat a = c > 0 ? c : Rat(-c);
        if (a != 1 || i == 0) out += rat_to_string(a);
        if (i > 0) {
            if (a != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace hk2

#endif
