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

#ifndef HK2_XSPACE_HPP
#define HK2_XSPACE_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hk2/dyadic.hpp"
#include "hk2/rational.hpp"
#include "hk2/xfunction.hpp"

namespace hk2 {

// A finite rational combination of named generators.  The two distinguished
// names "1" and "t" denote the constant function and the identity function;
// everything else is defined by its magnification rules in the registry.
class XElement {
public:
    XElement() = default;
    explicit XElement(std::map<std::string, Rat> terms) : terms_(std::move(terms)) { trim(); }

    static XElement single(const std::string& name, const Rat& coeff = Rat(1)) {
        XElement e;
        e.terms_[name] = coeff;
        e.trim();
        return e;
    }

    const std::map<std::string, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const std::string& name) const {
        auto it = terms_.find(name);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const std::string& name, const Rat& c) {
        if (c == 0) return;
        Rat& slot = terms_[name];
        slot += c;
        if (slot == 0) terms_.erase(name);
    }

    XElement& operator+=(const XElement& o) {
        for (const auto& [name, c] : o.terms_) add_term(name, c);
        return *this;
    }
    XElement& operator-=(const XElement& o) {
        for (const auto& [name, c] : o.terms_) add_term(name, -c);
        return *this;
    }
    XElement& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [name, c] : terms_) c *= s;
        return *this;
    }

    friend XElement operator+(XElement a, const XElement& b) { return a += b; }
    friend XElement operator-(XElement a, const XElement& b) { return a -= b; }
    friend XElement operator*(const Rat& s, XElement a) { return a *= s; }
    friend XElement operator*(XElement a, const Rat& s) { return a *= s; }
    friend XElement operator-(XElement a) { return a *= Rat(-1); }
    friend bool operator==(const XElement& a, const XElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const XElement& a, const XElement& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [name, c] : terms_) {
            Rat a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1 || name == "1") {
                out << rat_to_string(a);
                if (name != "1") out << "*";
            }
            if (name != "1") out << name;
            first = false;
        }
        return out.str();
    }

private:
    void trim() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    std::map<std::string, Rat> terms_;
};

// Table of generators closed under the two magnification operators
//   (T0 f)(t) = f(t/2),   (T1 f)(t) = f((1+t)/2).
// Built-in generators: "1", "t", the staircase deviation "eps", and the
// family "phi0", "phi1", ... with its ladder of magnification rules.
// Products under the # operation appear as composite generators named
// "sharp[a|b]" whose rules are derived on first use.
class GeneratorRegistry {
public:
    struct Generator {
        std::string name;
        Rat val0;
        Rat val1;
        XElement t0;  // expansion of T0(gen)
        XElement t1;  // expansion of T1(gen)
    };

    GeneratorRegistry() {
        install("1", Rat(1), Rat(1), XElement::single("1"), XElement::single("1"));
        install("t", Rat(0), Rat(1), XElement::single("t", Rat(1, 2)),
                XElement::single("1", Rat(1, 2)) + XElement::single("t", Rat(1, 2)));
        XElement eps_t0 = XElement::single("eps", Rat(1, 4)) + XElement::single("t", Rat(1, 4));
        XElement eps_t1 = XElement::single("eps", Rat(1, 4)) + XElement::single("1", Rat(1, 4)) -
                          XElement::single("t", Rat(1, 4));
        install("eps", Rat(0), Rat(0), eps_t0, eps_t1);
    }

    bool known(const std::string& name) const { return table_.count(name) != 0; }

    const Generator& generator(const std::string& name) {
        auto it = table_.find(name);
        if (it != table_.end()) return it->second;
        materialize(name);
        return table_.at(name);
    }

    // Register a user generator with explicit endpoint values and rules.
    // Rules may reference generators that are added later; unknown names
    // only fault when an evaluation actually needs them.
    void add_custom(const std::string& name, const Rat& val0, const Rat& val1,
                    const XElement& t0, const XElement& t1) {
        if (table_.count(name) != 0)
            throw std::invalid_argument("generator already defined: " + name);
        if (name.empty() || name == "0")
            throw std::invalid_argument("invalid generator name");
        install(name, val0, val1, t0, t1);
    }

    XElement apply_T0(const XElement& e) {
        XElement out;
        for (const auto& [name, c] : e.terms()) out += c * generator(name).t0;
        return out;
    }
    XElement apply_T1(const XElement& e) {
        XElement out;
        for (const auto& [name, c] : e.terms()) out += c * generator(name).t1;
        return out;
    }

    Rat eval(const XElement& e, const Dyadic& at) {
        Rat acc(0);
        for (const auto& [name, c] : e.terms()) acc += c * eval_generator(name, at);
        return acc;
    }
    Rat eval(const XElement& e, std::uint64_t num, unsigned level) {
        return eval(e, Dyadic(num, level));
    }

    // The # product expanded over generator pairs.  Constants are
    // annihilated, t # t = t, and t # g contributes (g(1)-g(0)) * t; a pair
    // of non-affine generators becomes a composite generator.
    XElement sharp(const XElement& a, const XElement& b) {
        XElement out;
        Rat t_coeff = a.coeff("t") * b.coeff("t");
        for (const auto& [ga, ca] : a.terms()) {
            if (ga == "1" || ga == "t") continue;
            const Generator& gen_a = generator(ga);
            t_coeff += b.coeff("t") * ca * (gen_a.val1 - gen_a.val0);
            for (const auto& [gb, cb] : b.terms()) {
                if (gb == "1" || gb == "t") continue;
                out.add_term(pair_name(ga, gb), ca * cb);
            }
        }
        for (const auto& [gb, cb] : b.terms()) {
            if (gb == "1" || gb == "t") continue;
            const Generator& gen_b = generator(gb);
            t_coeff += a.coeff("t") * cb * (gen_b.val1 - gen_b.val0);
        }
        out.add_term("t", t_coeff);
        return out;
    }

    // Value of (a # b) at 1/2 straight from the magnification identity:
    // (T0 of the product at 1) splits over the two half-interval products.
    Rat sharp_value_at_half(const XElement& a, const XElement& b) {
        const Rat a0 = eval(a, Dyadic(0, 0));
        const Rat ah = eval(a, Dyadic(1, 1));
        const Rat a1 = eval(a, Dyadic(1, 0));
        const Rat b0 = eval(b, Dyadic(0, 0));
        const Rat bh = eval(b, Dyadic(1, 1));
        const Rat b1 = eval(b, Dyadic(1, 0));
        return (ah - a0) * (bh - b0) + (a1 - ah) * (b1 - bh);
    }

    XFunction as_function(const XElement& e, const std::string& name = std::string()) {
        return XFunction(name.empty() ? e.str() : name,
                         [this, e](const Dyadic& t) { return eval(e, t); });
    }

    // Convenience handles.
    XElement one() { return XElement::single("1"); }
    XElement t() { return XElement::single("t"); }
    XElement eps() { return XElement::single("eps"); }
    XElement phi(unsigned m) { return XElement::single(phi_name(m)); }

    static std::string phi_name(unsigned m) { return "phi" + std::to_string(m); }
    static std::string pair_name(std::string a, std::string b) {
        if (b < a) std::swap(a, b);
        return "sharp[" + a + "|" + b + "]";
    }

private:
    void install(const std::string& name, const Rat& v0, const Rat& v1, const XElement& t0,
                 const XElement& t1) {
        Generator g;
        g.name = name;
        g.val0 = v0;
        g.val1 = v1;
        g.t0 = t0;
        g.t1 = t1;
        table_.emplace(name, std::move(g));
    }

    static std::optional<unsigned> parse_phi(const std::string& name) {
        if (name.size() < 4 || name.compare(0, 3, "phi") != 0) return std::nullopt;
        unsigned m = 0;
        for (std::size_t k = 3; k < name.size(); ++k) {
            const char c = name[k];
            if (c < '0' || c > '9') return std::nullopt;
            if (m > 100000) return std::nullopt;
            m = m * 10 + unsigned(c - '0');
        }
        if (name != "phi" + std::to_string(m)) return std::nullopt;  // reject leading zeros
        return m;
    }

    // Split "sharp[a|b]" at the top-level bar, honoring nested brackets.
    static std::optional<std::pair<std::string, std::string>> parse_pair(const std::string& name) {
        if (name.size() < 9 || name.compare(0, 6, "sharp[") != 0 || name.back() != ']')
            return std::nullopt;
        int depth = 0;
        for (std::size_t k = 6; k + 1 < name.size(); ++k) {
            if (name[k] == '[') ++depth;
            if (name[k] == ']') --depth;
            if (name[k] == '|' && depth == 0)
                return std::make_pair(name.substr(6, k - 6), name.substr(k + 1, name.size() - k - 2));
        }
        return std::nullopt;
    }

    void materialize(const std::string& name) {
        if (auto m = parse_phi(name)) {
            materialize_phi(*m);
            return;
        }
        if (auto parts = parse_pair(name)) {
            materialize_pair(parts->first, parts->second);
            return;
        }
        throw std::invalid_argument("unknown generator: " + name);
    }

    void materialize_phi(unsigned m) {
        const std::string name = phi_name(m);
        if (table_.count(name)) return;
        const Rat c(4 * std::uint64_t(m) + 3, 8);
        XElement t0, t1;
        if (m == 0) {
            t0 = XElement::single("phi1", Rat(1, 8)) + XElement::single("t", c);
            t1 = XElement::single("phi0", Rat(1, 8)) + XElement::single("1", c) -
                 XElement::single("t", c);
        } else if (m % 2 == 0) {
            t0 = XElement::single(phi_name(m + 1), Rat(1, 8)) + XElement::single("t", c);
            t1 = XElement::single(phi_name(m - 1), Rat(1, 8)) +
                 XElement::single("eps", Rat(1, 8)) + XElement::single("1", c) -
                 XElement::single("t", c);
        } else {
            t0 = XElement::single(phi_name(m - 1), Rat(1, 8)) +
                 XElement::single("eps", Rat(1, 8)) + XElement::single("t", c);
            t1 = XElement::single(phi_name(m + 1), Rat(1, 8)) + XElement::single("1", c) -
                 XElement::single("t", c);
        }
        install(name, Rat(0), Rat(0), t0, t1);
    }

    void materialize_pair(const std::string& a, const std::string& b) {
        const std::string name = pair_name(a, b);
        if (table_.count(name)) return;
        // Copies, so recursive installs cannot touch what we read from.
        const Generator ga = generator(a);
        const Generator gb = generator(b);
        const XElement ea = XElement::single(a);
        const XElement eb = XElement::single(b);
        const Rat half = sharp_value_at_half(ea, eb);
        const Rat val1 = (ga.val1 - ga.val0) * (gb.val1 - gb.val0);

        // Placeholder first so the product rules may mention the pair itself.
        install(name, Rat(0), val1, XElement(), XElement());

        XElement t0 = sharp(ga.t0, gb.t0) + sharp(ga.t1, gb.t1);
        XElement t1 = XElement::single("1", half) + sharp(ga.t0, gb.t1) + sharp(ga.t1, gb.t0);
        table_.at(name).t0 = t0;
        table_.at(name).t1 = t1;
    }

    Rat eval_generator(const std::string& name, const Dyadic& at) {
        const Generator& g = generator(name);
        if (at.is_zero()) return g.val0;
        if (at.is_one()) return g.val1;
        const auto key = std::make_tuple(name, at.numerator(), at.level());
        auto hit = eval_memo_.find(key);
        if (hit != eval_memo_.end()) return hit->second;
        if (++eval_depth_ > 128) {
            --eval_depth_;
            throw std::runtime_error("magnification recursion too deep for " + name);
        }
        Rat v;
        try {
            if (at.leq_half()) {
                v = eval(g.t0, at.doubled());
            } else {
                v = eval(g.t1, at.doubled_minus_one());
            }
        } catch (...) {
            --eval_depth_;
            throw;
        }
        --eval_depth_;
        eval_memo_.emplace(key, v);
        return v;
    }

    std::map<std::string, Generator> table_;
    std::map<std::tuple<std::string, std::uint64_t, unsigned>, Rat> eval_memo_;
    int eval_depth_ = 0;
};

}  // namespace hk2

#endif
