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

#ifndef HK2_SHARP_HPP
#define HK2_SHARP_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>

#include "hk2/dyadic.hpp"
#include "hk2/rational.hpp"
#include "hk2/xfunction.hpp"

namespace hk2 {

// (a # b)(1) depends only on total increments.
inline Rat sharp_value_at_one(const XFunction& a, const XFunction& b) {
    return (a(1, 0) - a(0, 0)) * (b(1, 0) - b(0, 0));
}

// (a # b)(1/2) split over the two half-interval restrictions.
inline Rat sharp_value_at_half_direct(const XFunction& a, const XFunction& b) {
    return (a(1, 1) - a(0, 0)) * (b(1, 1) - b(0, 0)) +
           (a(1, 0) - a(1, 1)) * (b(1, 0) - b(1, 1));
}

// Evaluates the # product of two arbitrary dyadic functions purely from
// their values, by the subdivision recursion
//   (a#b)(s)   = (a0#b0)(2s) + (a1#b1)(2s)                   for s <= 1/2,
//   (a#b)(s)   = (a0#b0)(1) + (a1#b1)(1)
//              + (a0#b1)(2s-1) + (a1#b0)(2s-1)               for s >= 1/2,
// where a0, a1 are the rescaled restrictions of a to the two halves, with
// base values (a#b)(0) = 0 and (a#b)(1) = (a(1)-a(0)) (b(1)-b(0)).  The
// work grows like 2^level, so points deeper than max_level are refused.
// This engine never looks at how a and b are represented, which makes it a
// fair referee for the symbolic product.
class SharpBlackbox {
public:
    SharpBlackbox(XFunction a, XFunction b, unsigned max_level = 24, bool memoize = false)
        : a_(std::move(a)), b_(std::move(b)), max_level_(max_level), memoize_(memoize) {}

    Rat eval(const Dyadic& t) {
        if (t.level() > max_level_)
            throw std::invalid_argument("point is deeper than the configured level cap");
        return eval_rec(View{0, 0}, View{0, 0}, t);
    }
    Rat eval(std::uint64_t num, unsigned level) { return eval(Dyadic(num, level)); }

    // Work counters, mostly for cache-behavior checks.
    std::uint64_t calls() const { return calls_; }
    std::uint64_t memo_hits() const { return memo_hits_; }
    bool memoize() const { return memoize_; }

private:
    // s -> f((j + s) / 2^k), a rescaled dyadic subinterval of f.
    struct View {
        std::uint64_t j;
        unsigned k;
        View child0() const { return View{2 * j, k + 1}; }
        View child1() const { return View{2 * j + 1, k + 1}; }
    };

    Rat at(const XFunction& f, const View& v, bool right) const {
        return f(v.j + (right ? 1 : 0), v.k);
    }

    Rat increments_product(const View& va, const View& vb) const {
        return (at(a_, va, true) - at(a_, va, false)) * (at(b_, vb, true) - at(b_, vb, false));
    }

    Rat eval_rec(const View& va, const View& vb, const Dyadic& t) {
        ++calls_;
        if (t.is_zero()) return Rat(0);
        if (t.is_one()) return increments_product(va, vb);
        using Key = std::tuple<std::uint64_t, unsigned, std::uint64_t, std::uint64_t, unsigned>;
        Key key{va.j, va.k, vb.j, t.numerator(), t.level()};
        if (memoize_) {
            auto hit = memo_.find(key);
            if (hit != memo_.end()) {
                ++memo_hits_;
                return hit->second;
            }
        }
        Rat v;
        if (t.leq_half()) {
            const Dyadic u = t.doubled();
            v = eval_rec(va.child0(), vb.child0(), u) + eval_rec(va.child1(), vb.child1(), u);
        } else {
            const Dyadic u = t.doubled_minus_one();
            v = increments_product(va.child0(), vb.child0()) +
                increments_product(va.child1(), vb.child1()) +
                eval_rec(va.child0(), vb.child1(), u) + eval_rec(va.child1(), vb.child0(), u);
        }
        if (memoize_) memo_.emplace(key, v);
        return v;
    }

    XFunction a_;
    XFunction b_;
    unsigned max_level_;
    bool memoize_;
    std::uint64_t calls_ = 0;
    std::uint64_t memo_hits_ = 0;
    std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t, std::uint64_t, unsigned>, Rat>
        memo_;
};

// One-shot evaluation without keeping an engine around.
inline Rat sharp_blackbox_value(const XFunction& a, const XFunction& b, const Dyadic& t,
                                unsigned max_level = 24) {
    SharpBlackbox engine(a, b, max_level, false);
    return engine.eval(t);
}

}  // namespace hk2

#endif
