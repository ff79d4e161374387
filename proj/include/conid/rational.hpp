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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace conid {

/// Exact rational; every probability and LP quantity in conid is one of these.
using Rational = mpq_class;

/// num/den in lowest terms. Throws Error(invalid_parameter) when den == 0.
Rational ratio(const mpz_class &num, const mpz_class &den);

/// Parses "p/q" or "p" (optional sign, decimal digits only). The result is
/// canonicalized. Throws Error(parse_error) on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational &value);

/// Smallest integer >= value.
mpz_class ceil(const Rational &value);

/// base^exponent, exact.
Rational pow(const Rational &base, unsigned exponent);

}  // namespace conid
