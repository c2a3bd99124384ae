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

#ifndef HK2_DYADIC_HPP
#define HK2_DYADIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hk2/rational.hpp"

namespace hk2 {

// Dyadic rational i/2^n in [0,1], kept canonical: either n = 0 (endpoints)
// or i odd.  Levels beyond 62 would overflow the packed numerator.
class Dyadic {
public:
    Dyadic() : num_(0), level_(0) {}
    Dyadic(std::uint64_t num, unsigned level) : num_(num), level_(level) {
        if (level_ > 62) throw std::invalid_argument("dyadic level too deep");
        if (num_ > (std::uint64_t(1) << level_))
            throw std::invalid_argument("dyadic value outside [0,1]");
        while (level_ > 0 && num_ % 2 == 0) {
            num_ /= 2;
            --level_;
        }
    }

    static Dyadic from_rat(const Rat& r) {
        if (r < 0 || r > 1) throw std::invalid_argument("dyadic value outside [0,1]");
        Int d = den(r);
        unsigned level = 0;
        while (d > 1) {
            if (d % 2 != 0) throw std::invalid_argument("not a dyadic rational: " + rat_to_string(r));
            d /= 2;
            ++level;
        }
        return Dyadic(num(r).convert_to<std::uint64_t>(), level);
    }

    std::uint64_t numerator() const { return num_; }
    unsigned level() const { return level_; }
    std::uint64_t denominator() const { return std::uint64_t(1) << level_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return level_ == 0 && num_ == 1; }
    bool is_endpoint() const { return is_zero() || is_one(); }

    // Comparison against 1/2 without leaving integers.
    bool leq_half() const { return (num_ << 1) <= denominator(); }

    // Magnified coordinates: t <= 1/2 maps to 2t, t >= 1/2 maps to 2t-1.
    Dyadic doubled() const {
        if (!leq_half()) throw std::domain_error("doubling needs t <= 1/2");
        return level_ == 0 ? *this : Dyadic(num_, level_ - 1);
    }
    Dyadic doubled_minus_one() const {
        if (leq_half() && !(num_ * 2 == denominator()))
            throw std::domain_error("2t-1 needs t >= 1/2");
        return level_ == 0 ? Dyadic(num_ == 1 ? 1 : 0, 0)
                           : Dyadic(num_ - (std::uint64_t(1) << (level_ - 1)), level_ - 1);
    }

    Rat to_rat() const { return Rat(Int(num_), Int(denominator())); }
    std::string str() const {
        if (level_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(denominator());
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ == b.num_ && a.level_ == b.level_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        // compare a.num/2^a.level with b.num/2^b.level
        const unsigned l = a.level_ > b.level_ ? a.level_ : b.level_;
        return (a.num_ << (l - a.level_)) < (b.num_ << (l - b.level_));
    }

private:
    std::uint64_t num_;
    unsigned level_;
};

inline Dyadic make_dyadic(std::uint64_t num, unsigned level) { return Dyadic(num, level); }

}  // namespace hk2

#endif
