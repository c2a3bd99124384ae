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

#ifndef HK2_XFUNCTION_HPP
#define HK2_XFUNCTION_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hk2/dyadic.hpp"
#include "hk2/rational.hpp"

namespace hk2 {

// A function on dyadic points of [0,1] with exact rational values.  This is
// the common currency between the symbolic side (generator combinations) and
// the numeric side (normalized colength data).
class XFunction {
public:
    XFunction() = default;
    XFunction(std::string name, std::function<Rat(const Dyadic&)> fn)
        : name_(std::move(name)), fn_(std::move(fn)) {}

    const std::string& name() const { return name_; }
    bool valid() const { return static_cast<bool>(fn_); }

    Rat operator()(const Dyadic& t) const {
        if (!fn_) throw std::logic_error("evaluating an empty XFunction");
        return fn_(t);
    }
    Rat operator()(std::uint64_t num, unsigned level) const {
        return (*this)(Dyadic(num, level));
    }

private:
    std::string name_;
    std::function<Rat(const Dyadic&)> fn_;
};

// Values at i/2^n for i = 0..2^n.
inline std::vector<Rat> grid_values(const XFunction& f, unsigned level) {
    const std::uint64_t q = std::uint64_t(1) << level;
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(q) + 1);
    for (std::uint64_t i = 0; i <= q; ++i) out.push_back(f(i, level));
    return out;
}

// Midpoint concavity on the level-n grid: 2 f(i/q) >= f((i-1)/q) + f((i+1)/q)
// for every interior node.  (This is the shape condition the delta criterion
// in the Grothendieck-ring layer detects.)
inline bool is_convex_on_grid(const std::vector<Rat>& values) {
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (2 * values[i] < values[i - 1] + values[i + 1]) return false;
    }
    return true;
}
inline bool is_convex_on_grid(const XFunction& f, unsigned level) {
    return is_convex_on_grid(grid_values(f, level));
}

// Largest |q * (f((i+1)/q) - f(i/q))| over the level-n grid; a Lipschitz
// witness for grid data.
inline Rat slope_bound_on_grid(const std::vector<Rat>& values) {
    if (values.size() < 2) return Rat(0);
    const Int q = Int(values.size() - 1);
    Rat best(0);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        Rat s = (values[i + 1] - values[i]) * q;
        if (s < 0) s = -s;
        if (s > best) best = s;
    }
    return best;
}
inline Rat slope_bound_on_grid(const XFunction& f, unsigned level) {
    return slope_bound_on_grid(grid_values(f, level));
}

// 2^n f(1/2^n); for the normalized colength function of a polynomial this is
// the standard multiplicity estimate at depth n.
inline Rat mu_estimate(const XFunction& f, unsigned level) {
    return Rat(Int(1) << level) * f(1, level);
}

// The sequence (2^n f(1/2^n))_{n=0..count-1}.
inline std::vector<Rat> mu_estimate_sequence(const XFunction& f, unsigned count) {
    std::vector<Rat> out;
    out.reserve(count);
    for (unsigned n = 0; n < count; ++n) out.push_back(mu_estimate(f, n));
    return out;
}

}  // namespace hk2

#endif
