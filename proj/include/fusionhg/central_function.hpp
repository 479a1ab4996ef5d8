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

#ifndef FUSIONHG_CENTRAL_FUNCTION_HPP_
#define FUSIONHG_CENTRAL_FUNCTION_HPP_

#include <complex>
#include <optional>
#include <vector>

#include "fusionhg/finite_dual.hpp"
#include "fusionhg/function.hpp"
#include "fusionhg/rational.hpp"
#include "fusionhg/su2_dual.hpp"

namespace fusionhg {

// sum_pi v(pi) d_pi chi_pi on the conjugacy classes of a finite group.
class FiniteClassFunction {
 public:
  FiniteClassFunction(const FiniteDual& dual, const ExactFunction& v);
  FiniteClassFunction(const FiniteDual& dual, const RealFunction& v);

  std::size_t num_classes() const { return values_.size(); }
  std::complex<double> operator()(std::size_t cls) const { return values_.at(cls); }
  // Present when both the table and v are exact.
  const std::optional<std::vector<GaussianRational>>& exact_values() const { return exact_; }

 private:
  std::vector<std::complex<double>> values_;
  std::optional<std::vector<GaussianRational>> exact_;
};

// sum_n v(n) (n+1) chi_n(theta) with chi_n(theta) = sin((n+1)theta) / sin(theta)
// on the maximal torus of SU(2).
class Su2ClassFunction {
 public:
  explicit Su2ClassFunction(const ExactFunction& v);
  explicit Su2ClassFunction(const RealFunction& v);

  double operator()(double theta) const;
  // f(theta) sin^2(theta), the integrand of the Weyl integration formula.
  double weighted(double theta) const;
  // Highest n in the support; the weighted integrand is a trigonometric
  // polynomial of degree bandwidth() + 2.
  int bandwidth() const { return static_cast<int>(coeffs_.size()) - 1; }

 private:
  // coeffs_[n] = v(n) (n+1), the coefficient of U_n(cos theta).
  std::vector<double> coeffs_;
};

FiniteClassFunction central_function(const FiniteDual& dual, const ExactFunction& v);
Su2ClassFunction central_function(const Su2Dual& dual, const ExactFunction& v);

}  // namespace fusionhg

#endif  // FUSIONHG_CENTRAL_FUNCTION_HPP_
