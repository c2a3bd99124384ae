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

#ifndef HK2_RATIONAL_HPP
#define HK2_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hk2 {

// Exact arithmetic lives on arbitrary-precision integers and rationals.
// cpp_rational keeps values in lowest terms with a positive denominator,
// which is exactly the canonical form required of every serialized value.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Int& v) { return v.str(); }

// Canonical "p/q" form; integers print without the "/1".
inline std::string rat_to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    return Rat(int_pow(num(base), e), int_pow(den(base), e));
}

// Division in a field is always exact; this overload lets generic
// fraction-free algorithms treat Rat like any other coefficient domain.
inline Rat exact_div(const Rat& a, const Rat& b) {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
}

// Floor square root; exact iff the returned root squares back.
inline Int int_sqrt(const Int& v) {
    if (v < 0) throw std::domain_error("int_sqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

inline bool is_perfect_square(const Int& v) {
    if (v < 0) return false;
    Int r = int_sqrt(v);
    return r * r == v;
}

// Exact rational square root, or failure when no rational root exists.
inline bool try_rat_sqrt(const Rat& v, Rat& out) {
    if (v < 0) return false;
    Int p = num(v), q = den(v);
    if (!is_perfect_square(p) || !is_perfect_square(q)) return false;
    out = Rat(int_sqrt(p), int_sqrt(q));
    return true;
}

// Trial division; inputs stay desk-scale so this is plenty.
inline std::vector<std::pair<Int, int>> factor_int(Int v) {
    if (v <= 0) throw std::domain_error("factor_int expects a positive integer");
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (v % p == 0) { v /= p; ++e; }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= v; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

inline Int squarefree_part(const Int& v) {
    Int out = 1;
    for (const auto& [p, e] : factor_int(v)) {
        if (e % 2) out *= p;
    }
    return out;
}

// Writes r = s^2 * d with d a squarefree positive integer, so sqrt(r) = s*sqrt(d).
// Requires r >= 0; d = 1 means the root is rational.
inline void sqrt_decompose(const Rat& r, Rat& s, Int& d) {
    if (r < 0) throw std::domain_error("sqrt_decompose of negative value");
    if (r == 0) { s = 0; d = 1; return; }
    Int p = num(r), q = den(r);
    Int dp = squarefree_part(p), dq = squarefree_part(q);
    Int sp = int_sqrt(p / dp), sq = int_sqrt(q / dq);
    // p/q = (sp/sq)^2 * dp/dq and dp/dq = dp*dq / dq^2.
    d = dp * dq;
    s = Rat(sp, sq * dq);
}

}  // namespace hk2

#endif
