// Copyright 2026 The otdp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OTDP_RATIONAL_HPP_
#define OTDP_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace otdp {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "a", "a/b", "-a/b". A leading U+2212 minus sign is accepted too.
/// Throws ParseError on anything else, including a zero or signed denominator.
Rational parse_rational(std::string_view text);

/// Renders as "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& r);

/// Nearest binary64 value, ties to even.
double to_double(const Rational& r);

Integer floor_integer(const Rational& r);
Integer ceil_integer(const Rational& r);

/// Nearest integer with exact halves rounded away from zero.
Integer round_half_away(const Rational& r);

/// Largest positive rational g such that a/g and b/g are both integers.
/// gcd(0, b) = |b|; gcd(0, 0) = 0.
Rational rational_gcd(const Rational& a, const Rational& b);

/// True when r has denominator 1.
bool is_integer(const Rational& r);

Rational abs(const Rational& r);

/// r^e for a nonnegative machine exponent.
Rational pow(const Rational& r, unsigned e);

}  // namespace otdp

#endif  // OTDP_RATIONAL_HPP_
