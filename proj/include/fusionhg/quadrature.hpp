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

#ifndef FUSIONHG_QUADRATURE_HPP_
#define FUSIONHG_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace fusionhg {

enum class QuadratureScheme { gauss_legendre, adaptive_simpson };

std::string_view to_string(QuadratureScheme scheme);
QuadratureScheme parse_scheme(std::string_view text);

struct QuadratureConfig {
  // Minimum number of cells used to bracket sign changes.
  std::size_t nodes = 2048;
  // Absolute error target on the returned value.
  double tolerance = 1e-9;
  QuadratureScheme scheme = QuadratureScheme::gauss_legendre;

  // Throws ErrorKind::usage.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t pieces = 0;
  std::size_t evaluations = 0;
};

// Nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre_rule(int order);

// Integral of |f| over [a, b]. `frequency` bounds how fast f oscillates (for a
// trigonometric polynomial, its degree); sign changes are bracketed on a grid
// of max(config.nodes, frequency) cells and refined, and each sign-definite
// piece is integrated adaptively. Throws NumericError with the residual
// estimate when the tolerance is not met.
QuadratureResult integrate_abs(const std::function<double(double)>& f, double a, double b,
                               std::size_t frequency, const QuadratureConfig& config);

// Integral of |f_1 ... f_k|; sign changes are bracketed per factor so that
// nearby roots of different factors are not missed.
QuadratureResult integrate_abs(std::span<const std::function<double(double)>> factors, double a,
                               double b, std::size_t frequency, const QuadratureConfig& config);

}  // namespace fusionhg

#endif  // FUSIONHG_QUADRATURE_HPP_
