// Copyright 2026 The fusionhg Authors
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

#include "fusionhg/rational.hpp"

#include <cctype>
#include <string>

#include "fusionhg/error.hpp"

namespace fusionhg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  fail(ErrorKind::usage, "not a rational number: '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) bad_number(whole);
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

Integer pow10(unsigned long exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_number(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) bad_number(text);
    Integer den = parse_integer(den_text, text);
    if (den == 0) fail(ErrorKind::usage, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  // Decimal with optional exponent.
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    std::string_view exp_digits = exp_text;
    if (!exp_digits.empty() && (exp_digits.front() == '-' || exp_digits.front() == '+')) {
      exp_digits.remove_prefix(1);
    }
    if (!all_digits(exp_digits) || exp_digits.size() > 6) bad_number(text);
    exponent = std::stol(std::string(exp_text));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) || (int_part.empty() && frac_part.empty())) {
      bad_number(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) bad_number(text);
    digits = std::string(mantissa);
  }
  Rational r{Integer(digits, 10)};
  long shift = exponent - fraction_digits;
  if (shift > 0) {
    r *= Rational(pow10(static_cast<unsigned long>(shift)));
  } else if (shift < 0) {
    r /= Rational(pow10(static_cast<unsigned long>(-shift)));
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Integer rn = sqrt(num);
  Integer rd = sqrt(den);
  return Rational(rn, rd);
}

Rational abs(const Rational& value) { return sgn(value) < 0 ? Rational(-value) : value; }

}  // namespace fusionhg
