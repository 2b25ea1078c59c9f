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

#include "otdp/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <string>

#include "otdp/errors.hpp"

namespace otdp {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

Integer parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  Integer value;
  // Base 10 explicitly: a leading zero must not switch to octal.
  mpz_set_str(value.backend().data(), std::string(digits).c_str(), 10);
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (rest.starts_with('-')) {
    negative = true;
    rest.remove_prefix(1);
  } else if (rest.starts_with(kUnicodeMinus)) {
    negative = true;
    rest.remove_prefix(kUnicodeMinus.size());
  }
  const auto slash = rest.find('/');
  Integer num = parse_digits(rest.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_digits(rest.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, r.backend().data(), MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

Integer floor_integer(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.backend().data(), numerator(r).backend().data(),
             denominator(r).backend().data());
  return q;
}

Integer ceil_integer(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.backend().data(), numerator(r).backend().data(),
             denominator(r).backend().data());
  return q;
}

Integer round_half_away(const Rational& r) {
  const Rational half(1, 2);
  if (r >= 0) return floor_integer(r + half);
  return -floor_integer(-r + half);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  const Integer da = denominator(a);
  const Integer db = denominator(b);
  const Integer common = boost::multiprecision::lcm(da, db);
  const Integer na = boost::multiprecision::abs(numerator(a)) * (common / da);
  const Integer nb = boost::multiprecision::abs(numerator(b)) * (common / db);
  return Rational(boost::multiprecision::gcd(na, nb), common);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational pow(const Rational& r, unsigned e) {
  Rational result = 1;
  Rational base = r;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace otdp
