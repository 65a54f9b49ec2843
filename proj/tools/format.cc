// Copyright 2026 The Braket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "format.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace braket::cli {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw std::invalid_argument("malformed complex literal '" + std::string(whole) + "'");
    }
    return negative ? -value : value;
}

// Coefficient of i: empty or a bare sign means +-1.
double parse_imag_coefficient(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+") {
        return 1;
    }
    if (s == "-") {
        return -1;
    }
    return parse_real(s, whole);
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    if (s.empty()) {
        throw std::invalid_argument("empty complex literal");
    }
    if (s.back() != 'i') {
        return {parse_real(s, text), 0};
    }
    s.remove_suffix(1);
    // Split at the last sign that is neither leading nor part of an exponent.
    size_t split = std::string_view::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0, parse_imag_coefficient(s, text)};
    }
    return {parse_real(s.substr(0, split), text), parse_imag_coefficient(s.substr(split), text)};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        out.push_back(parse_complex(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string format_double(double x) {
    if (x == 0) {
        return "0";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
    double re = z.real();
    double im = z.imag();
    if (im == 0) {
        return format_double(re);
    }
    std::string imag = (im == 1) ? "" : (im == -1) ? "-" : format_double(im);
    if (re == 0) {
        return imag + "i";
    }
    if (im > 0) {
        return format_double(re) + "+" + imag + "i";
    }
    return format_double(re) + imag + "i";
}

std::string format_vector(std::span<const Complex> v) {
    std::string out = "(";
    for (size_t k = 0; k < v.size(); k++) {
        if (k > 0) {
            out += ", ";
        }
        out += format_complex(v[k]);
    }
    return out + ")";
}

}  // namespace braket::cli
