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

#ifndef FUSIONHG_RATIONAL_HPP_
#define FUSIONHG_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace fusionhg {

using Integer = mpz_class;
using Rational = mpq_class;

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

// Accepts "p/q", "p", and finite decimals such as "-0.125" or "1e-3"; the
// decimal forms are converted exactly (0.1 == 1/10).
Rational parse_rational(std::string_view text);

// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

// The rational square root, if the argument is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

Rational abs(const Rational& value);

// Exact Gaussian rational re + i*im.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational conj() const { return {re, -im}; }
  Rational norm_squared() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& s, const GaussianRational& a) {
    return {s * a.re, s * a.im};
  }
  GaussianRational& operator+=(const GaussianRational& other) {
    re += other.re;
    im += other.im;
    return *this;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace fusionhg

#endif  // FUSIONHG_RATIONAL_HPP_
