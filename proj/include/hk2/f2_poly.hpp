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

#ifndef HK2_F2_POLY_HPP
#define HK2_F2_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk2 {

// Multivariate polynomial over F2: a set of monomials (duplicates cancel in
// pairs).  Exponents are packed one byte per variable, so up to 8 variables
// with exponents below 256; products stay within a lane because every use
// reduces exponents below a modulus q <= 128 first.
class F2MultiPoly {
public:
    using Mono = std::uint64_t;

    F2MultiPoly() = default;
    F2MultiPoly(std::vector<std::string> vars, std::vector<Mono> monos)
        : vars_(std::move(vars)), monos_(std::move(monos)) {
        if (vars_.size() > 8) throw std::invalid_argument("at most 8 variables supported");
        canonicalize();
    }

    static unsigned exp_of(Mono m, std::size_t var) {
        return static_cast<unsigned>((m >> (8 * var)) & 0xff);
    }
    static Mono with_exp(Mono m, std::size_t var, unsigned e) {
        m &= ~(Mono(0xff) << (8 * var));
        return m | (Mono(e & 0xff) << (8 * var));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Mono>& monomials() const { return monos_; }
    std::size_t nvars() const { return vars_.size(); }
    bool is_zero() const { return monos_.empty(); }
    bool has_constant_term() const {
        return std::find(monos_.begin(), monos_.end(), Mono(0)) != monos_.end();
    }

    friend bool operator==(const F2MultiPoly& a, const F2MultiPoly& b) {
        return a.vars_ == b.vars_ && a.monos_ == b.monos_;
    }

    // Grammar: poly = term ('+' term)*, term = factor ('*' factor)*,
    // factor = var ('^' exponent)? | '1' | '0'.  Characteristic 2 set
    // semantics: "x+x" parses to the zero polynomial.
    static F2MultiPoly parse(const std::string& text) {
        std::size_t pos = 0;
        auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
        skip_ws();
        if (pos == text.size()) throw std::invalid_argument("empty polynomial");

        struct RawTerm { std::vector<std::pair<std::string, unsigned>> factors; bool constant_zero = false; };
        std::vector<RawTerm> terms;
        std::set<std::string> var_names;
        while (true) {
            RawTerm term;
            bool first_factor = true;
            while (true) {
                skip_ws();
                if (pos < text.size() && (text[pos] == '1' || text[pos] == '0') &&
                    (pos + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
                    if (text[pos] == '0') term.constant_zero = true;
                    ++pos;
                } else {
                    std::string name;
                    while (pos < text.size() && (std::islower(static_cast<unsigned char>(text[pos])) ||
                                                 std::isdigit(static_cast<unsigned char>(text[pos])))) {
                        if (name.empty() && std::isdigit(static_cast<unsigned char>(text[pos])))
                            throw std::invalid_argument("variable names start with a letter");
                        name.push_back(text[pos++]);
                    }
                    if (name.empty())
                        throw std::invalid_argument(first_factor ? "expected a term" : "expected a variable");
                    unsigned e = 1;
                    skip_ws();
                    if (pos < text.size() && text[pos] == '^') {
                        ++pos;
                        skip_ws();
                        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                            throw std::invalid_argument("expected an exponent after '^'");
                        e = 0;
                        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                            e = e * 10 + static_cast<unsigned>(text[pos++] - '0');
                        if (e > 255) throw std::invalid_argument("exponent too large");
                    }
                    var_names.insert(name);
                    term.factors.emplace_back(name, e);
                }
                first_factor = false;
                skip_ws();
                if (pos < text.size() && text[pos] == '*') { ++pos; continue; }
                break;
            }
            terms.push_back(std::move(term));
            skip_ws();
            if (pos < text.size() && text[pos] == '+') { ++pos; continue; }
            break;
        }
        skip_ws();
        if (pos != text.size())
            throw std::invalid_argument(std::string("unexpected character '") + text[pos] + "'");

        std::vector<std::string> vars(var_names.begin(), var_names.end());
        auto var_index = [&](const std::string& n) {
            return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), n) - vars.begin());
        };
        std::vector<Mono> monos;
        for (const auto& term : terms) {
            if (term.constant_zero && term.factors.empty()) continue;
            Mono m = 0;
            for (const auto& [name, e] : term.factors) {
                const std::size_t vi = var_index(name);
                const unsigned total = exp_of(m, vi) + e;
                if (total > 255) throw std::invalid_argument("exponent too large");
                m = with_exp(m, vi, total);
            }
            monos.push_back(m);
        }
        return F2MultiPoly(std::move(vars), std::move(monos));
    }

    // Deterministic text form, also the cache identity of the polynomial.
    std::string canonical_string() const {
        if (monos_.empty()) return "0";
        std::string out;
        for (std::size_t k = monos_.size(); k-- > 0;) {
            // monos_ is sorted ascending; print descending so leading terms come first
            if (!out.empty()) out += "+";
            out += mono_string(monos_[k]);
        }
        return out;
    }

    std::string mono_string(Mono m) const {
        if (m == 0) return "1";
        std::string out;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            const unsigned e = exp_of(m, v);
            if (!e) continue;
            if (!out.empty()) out += "*";
            out += vars_[v];
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    // Disjoint-variable sum used by the additivity theorem checks.
    static F2MultiPoly disjoint_sum(const F2MultiPoly& f, const F2MultiPoly& g) {
        for (const auto& v : f.vars_)
            if (std::binary_search(g.vars_.begin(), g.vars_.end(), v))
                throw std::invalid_argument("variable sets are not disjoint: " + v);
        std::vector<std::string> vars = f.vars_;
        vars.insert(vars.end(), g.vars_.begin(), g.vars_.end());
        std::sort(vars.begin(), vars.end());
        if (vars.size() > 8) throw std::invalid_argument("at most 8 variables supported");
        auto remap = [&](const F2MultiPoly& p) {
            std::vector<std::size_t> where(p.vars_.size());
            for (std::size_t v = 0; v < p.vars_.size(); ++v)
                where[v] = static_cast<std::size_t>(
                    std::lower_bound(vars.begin(), vars.end(), p.vars_[v]) - vars.begin());
            std::vector<Mono> out;
            for (Mono m : p.monos_) {
                Mono t = 0;
                for (std::size_t v = 0; v < p.vars_.size(); ++v)
                    t = with_exp(t, where[v], exp_of(m, v));
                out.push_back(t);
            }
            return out;
        };
        std::vector<Mono> monos = remap(f);
        const std::vector<Mono> gm = remap(g);
        monos.insert(monos.end(), gm.begin(), gm.end());
        return F2MultiPoly(std::move(vars), std::move(monos));
    }

private:
    void canonicalize() {
        std::sort(monos_.begin(), monos_.end());
        // cancel duplicate pairs (characteristic 2)
        std::vector<Mono> out;
        for (std::size_t i = 0; i < monos_.size();) {
            std::size_t j = i;
            while (j < monos_.size() && monos_[j] == monos_[i]) ++j;
            if ((j - i) % 2) out.push_back(monos_[i]);
            i = j;
        }
        monos_ = std::move(out);
    }

    std::vector<std::string> vars_;
    std::vector<Mono> monos_;
};

}  // namespace hk2

#endif
