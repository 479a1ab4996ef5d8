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

#include "fusionhg/central_function.hpp"

#include <cmath>

#include "fusionhg/error.hpp"

namespace fusionhg {

namespace {

std::size_t irrep_index(const FiniteDual& dual, const Label& x) {
  if (!dual.contains(x)) {
    fail(ErrorKind::label_domain, "label " + x.debug_string() + " is not an irrep of " + dual.name());
  }
  return static_cast<std::size_t>(x[0]);
}

template <class Scalar>
std::vector<std::complex<double>> float_values(const FiniteDual& dual,
                                               const FiniteFunction<Scalar>& v) {
  const CharacterTable& t = dual.table();
  std::vector<std::complex<double>> out(t.num_classes());
  for (const auto& [x, value] : v) {
    const auto& irrep = t.irreps[irrep_index(dual, x)];
    double w;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      w = to_double(value);
    } else {
      w = value;
    }
    w *= static_cast<double>(irrep.dim);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += w * irrep.values[c];
  }
  return out;
}

template <class Scalar>
std::vector<double> su2_coefficients(const FiniteFunction<Scalar>& v) {
  std::vector<double> coeffs;
  for (const auto& [x, value] : v) {
    if (x.arity() != 1 || x[0] < 0) {
      fail(ErrorKind::label_domain, "label " + x.debug_string() + " is not an SU(2) irrep");
    }
    const auto n = static_cast<std::size_t>(x[0]);
    if (coeffs.size() <= n) coeffs.resize(n + 1, 0.0);
    double w;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      w = to_double(value);
    } else {
      w = value;
    }
    coeffs[n] = w * static_cast<double>(n + 1);
  }
  return coeffs;
}

}  // namespace

FiniteClassFunction::FiniteClassFunction(const FiniteDual& dual, const ExactFunction& v)
    : values_(float_values(dual, v)) {
  const CharacterTable& t = dual.table();
  if (!t.exact()) return;
  std::vector<GaussianRational> exact(t.num_classes());
  for (const auto& [x, value] : v) {
    const auto& irrep = t.irreps[irrep_index(dual, x)];
    const Rational w = value * Rational(irrep.dim);
    for (std::size_t c = 0; c < exact.size(); ++c) exact[c] += w * irrep.exact_values[c];
  }
  exact_ = std::move(exact);
}

FiniteClassFunction::FiniteClassFunction(const FiniteDual& dual, const RealFunction& v)
    : values_(float_values(dual, v)) {}

Su2ClassFunction::Su2ClassFunction(const ExactFunction& v) : coeffs_(su2_coefficients(v)) {}
Su2ClassFunction::Su2ClassFunction(const RealFunction& v) : coeffs_(su2_coefficients(v)) {}

double Su2ClassFunction::operator()(double theta) const {
  // Clenshaw recurrence for sum c_n U_n(x), U_{n+1} = 2x U_n - U_{n-1}.
  const double x = std::cos(theta);
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    const double b0 = coeffs_[n] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

double Su2ClassFunction::weighted(double theta) const {
  const double s = std::sin(theta);
  return (*this)(theta) * s * s;
}

FiniteClassFunction central_function(const FiniteDual& dual, const ExactFunction& v) {
  return FiniteClassFunction(dual, v);
}

Su2ClassFunction central_function(const Su2Dual&, const ExactFunction& v) {
  return Su2ClassFunction(v);
}

}  // namespace fusionhg
