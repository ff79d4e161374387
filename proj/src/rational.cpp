// Copyright 2026 The conid Authors
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

#include "conid/rational.hpp"

#include <cctype>

#include "conid/error.hpp"

namespace conid {

namespace {

bool is_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num_text = text.substr(0, slash);
    auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num_text) || !is_integer_text(den_text) || den_text[0] == '-' ||
        den_text[0] == '+') {
        throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class den = parse_integer(den_text);
    if (den == 0) {
        throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(parse_integer(num_text), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

mpz_class ceil(const Rational &value) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

Rational ratio(const mpz_class &num, const mpz_class &den) {
    if (den == 0) {
        throw Error(ErrorCode::invalid_parameter, "zero denominator");
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational pow(const Rational &base, unsigned exponent) {
    Rational out(1);
    for (unsigned i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

}  // namespace conid
