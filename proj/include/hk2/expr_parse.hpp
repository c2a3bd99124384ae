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

#ifndef HK2_EXPR_PARSE_HPP
#define HK2_EXPR_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>

#include "hk2/rational.hpp"
#include "hk2/xspace.hpp"

namespace hk2 {

namespace detail {

inline bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '[' || c == ']' ||
           c == '|';
}

}  // namespace detail

// Parse a linear combination of generator names, e.g. "t+phi0" or
// "2*t - 1/2*eps + phi1".  A bare number is a multiple of the constant
// function "1".
inline XElement parse_element(const std::string& text) {
    XElement out;
    std::size_t pos = 0;
    const auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (pos == text.size()) throw std::invalid_argument("empty expression");
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip_space();
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
                throw std::invalid_argument("expected + or - in expression: " + text);
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_space();
        }
        first = false;
        if (pos >= text.size()) throw std::invalid_argument("dangling sign in expression: " + text);

        Rat coeff(sign);
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                ++pos;
            coeff = Rat(sign) * rat_from_string(text.substr(start, pos - start));
            skip_space();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_space();
            } else {
                out.add_term("1", coeff);
                skip_space();
                continue;
            }
        }

        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("expected a generator name in expression: " + text);
        std::size_t start = pos;
        while (pos < text.size() && detail::is_name_char(text[pos])) ++pos;
        out.add_term(text.substr(start, pos - start), coeff);
        skip_space();
    }
    return out;
}

}  // namespace hk2

#endif
