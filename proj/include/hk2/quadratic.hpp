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

#ifndef HK2_QUADRATIC_HPP
#define HK2_QUADRATIC_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "hk2/rational.hpp"

namespace hk2 {

// Element a + b*sqrt(d) of a real quadratic field; d is a fixed squarefree
// positive integer per value. Mixed-field arithmetic is rejected unless one
// operand is rational (b = 0), whose d is then irrelevant.
class QuadraticNumber {
public:
    QuadraticNumber() : a_(0), b_(0), d_(1) {}
    explicit QuadraticNumber(const Rat& a) : a_(a), b_(0), d_(1) {}
    QuadraticNumber(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ <= 0) throw std::domain_error("radicand must be positive");
        if (b_ != 0 && squarefree_part(d_) != d_)
            throw std::domain_error("radicand must be squarefree");
        if (b_ == 0) d_ = 1;
        if (d_ == 1) { a_ += b_; b_ = 0; }
    }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Int& d() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    // Exact square root of a nonnegative rational, expressed as s*sqrt(d).
    static QuadraticNumber sqrt_of(const Rat& r) {
        Rat s;
        Int d;
        sqrt_decompose(r, s, d);
        return QuadraticNumber(Rat(0), s, d);
    }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
        Int d = merged_d(x, y);
        return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
        Int d = merged_d(x, y);
        return QuadraticNumber(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, d_); }
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
        Int d = merged_d(x, y);
        return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d),
                               x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
        Rat n = y.norm();
        if (n == 0) throw std::domain_error("division by zero");
        // 1/(a+b*sqrt(d)) = (a-b*sqrt(d))/norm
        QuadraticNumber conj(y.a_ / n, -y.b_ / n, y.d_);
        return x * conj;
    }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

    Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

    // Exact sign without leaving the field: compare a^2 against d*b^2.
    int sign() const {
        if (b_ == 0) return a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
        if (a_ == 0) return b_ > 0 ? 1 : -1;
        if (a_ > 0 && b_ > 0) return 1;
        if (a_ < 0 && b_ < 0) return -1;
        const Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(d_);
        const int big = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
        // a and b disagree in sign; whichever term dominates decides.
        if (big == 0) return 0;
        return (a_ > 0 ? 1 : -1) * big;
    }
    bool operator<(const QuadraticNumber& y) const { return (*this - y).sign() < 0; }
    bool operator>(const QuadraticNumber& y) const { return (*this - y).sign() > 0; }

    QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const {
        return hk2::to_double(a_) + hk2::to_double(b_) * std::sqrt(d_.convert_to<double>());
    }

    std::string str() const {
        if (b_ == 0) return rat_to_string(a_);
        std::string out = rat_to_string(a_);
        out += (b_ > 0 ? " + " : " - ");
        Rat babs = b_ > 0 ? b_ : Rat(-b_);
        if (babs != 1) {
            const std::string s = rat_to_string(babs);
            out += (denominator(babs) == 1 ? s : "(" + s + ")") + "*";
        }
        out += "sqrt(" + d_.str() + ")";
        return out;
    }

private:
    static Int merged_d(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw std::domain_error("mixed quadratic fields");
        return x.d_;
    }

    Rat a_, b_;
    Int d_;
};

}  // namespace hk2

#endif
