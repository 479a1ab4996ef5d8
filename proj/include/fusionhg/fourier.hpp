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

#ifndef FUSIONHG_FOURIER_HPP_
#define FUSIONHG_FOURIER_HPP_

#include <limits>
#include <optional>

#include "fusionhg/finite_dual.hpp"
#include "fusionhg/function.hpp"
#include "fusionhg/hypergroup.hpp"
#include "fusionhg/quadrature.hpp"
#include "fusionhg/rational.hpp"
#include "fusionhg/su2_dual.hpp"

namespace fusionhg {

// u = (1/h(V)) 1_{K*V} *_h ~1_V.
struct BumpFunction {
  ExactFunction u;
  LabelSet K;
  LabelSet V;
  // K*V and K*V*~V.
  LabelSet KV;
  LabelSet KVV;
  Rational haar_V;
  // h(K*V) / h(V), the square of the A-norm bound.
  Rational bound_squared;

  double a_norm_bound() const;
};

// Builds u and verifies exactly: u >= 0, u = 1 on K, supp u within K*V*~V,
// and bound_squared equal to the leptin ratio. A failed check is an
// internal-invariant error.
BumpFunction bump(const Hypergroup& hg, const LabelSet& K, const LabelSet& V);

struct NormValue {
  double value = 0.0;
  // The norm itself when it is rational.
  std::optional<Rational> exact;
  // value^p when p is a positive integer and the input is exact.
  std::optional<Rational> exact_power;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// (sum_x h(x) |f(x)|^p)^(1/p); max |f| for p = infinity.
NormValue lp_h_norm(const Hypergroup& hg, const ExactFunction& f, double p);
double lp_h_norm(const Hypergroup& hg, const RealFunction& f, double p);

// ||T^-1(v)||_1 = (1/|G|) sum_c |c| |sum_pi v(pi) d_pi chi_pi(c)|.
NormValue a_norm_exact_finite(const FiniteDual& dual, const ExactFunction& v);

// (2/pi) int_0^pi |T^-1(v)(theta)| sin^2(theta) d theta.
double a_norm_su2(const ExactFunction& v, const QuadratureConfig& config = {});

// A_N(theta) = sum_{j=1}^N j sin(j theta), accurate for large N.
class SineKernel {
 public:
  explicit SineKernel(long n);
  long double operator()(double theta) const;
  long order() const { return n_; }

 private:
  long n_;
  // power_sums_[k] = sum_j j^(2k+2).
  long double power_sums_[8];
};

// A-norm of a bump. When K*V and V are balls in the SU(2) dual the central
// function factors as A_{|K*V|}(theta) A_{|V|}(theta) / (h(V) sin^2 theta).
double a_norm_bump(const Hypergroup& hg, const BumpFunction& b, const QuadratureConfig& config = {});

// A-norm by dual family: exact for finite duals, quadrature for SU(2).
double a_norm(const Hypergroup& hg, const ExactFunction& v, const QuadratureConfig& config = {});

// Central C^p norm (sum_pi d_pi^2 |v(pi)|^p)^(1/p), p in [1, 2].
NormValue segal_cp_norm_central(const Hypergroup& hg, const ExactFunction& v, double p);

}  // namespace fusionhg

#endif  // FUSIONHG_FOURIER_HPP_
