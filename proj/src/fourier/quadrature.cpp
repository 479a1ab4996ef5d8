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

#include "fusionhg/quadrature.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <span>
#include <string>

#include "fusionhg/error.hpp"

namespace fusionhg {

namespace {

constexpr int kLowOrder = 8;
constexpr int kHighOrder = 16;
// Refinement stops with a NumericError after this many evaluations per cell.
constexpr std::size_t kEvaluationsPerCell = 4096;

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1;
      long double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    const long double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>(-x);
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  return rule;
}

struct Piece {
  double a;
  double b;
  long double value;
  long double error;

  bool operator<(const Piece& other) const { return error < other.error; }
};

struct Integrator {
  const std::function<double(double)>& f;
  const QuadratureConfig& config;
  std::size_t evaluations = 0;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  long double gauss(const GaussRule& rule, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    long double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * std::fabs(eval(mid + half * rule.nodes[i]));
    }
    return sum * half;
  }

  long double simpson(double a, double b) {
    const double m = 0.5 * (a + b);
    const double fa = std::fabs(eval(a));
    const double fl = std::fabs(eval(0.5 * (a + m)));
    const double fm = std::fabs(eval(m));
    const double fr = std::fabs(eval(0.5 * (m + b)));
    const double fb = std::fabs(eval(b));
    return (b - a) / 12.0L * (fa + 4.0L * fl + 2.0L * fm + 4.0L * fr + fb);
  }

  Piece estimate(double a, double b) {
    long double value;
    long double coarse;
    if (config.scheme == QuadratureScheme::gauss_legendre) {
      coarse = gauss(gauss_legendre_rule(kLowOrder), a, b);
      value = gauss(gauss_legendre_rule(kHighOrder), a, b);
    } else {
      const double m = 0.5 * (a + b);
      coarse = (b - a) / 6.0L * (std::fabs(eval(a)) + 4.0L * std::fabs(eval(m)) + std::fabs(eval(b)));
      value = simpson(a, b);
      value += (value - coarse) / 15;
    }
    long double error = std::fabs(value - coarse);
    // Differences at rounding level carry no information.
    if (error <= 64 * std::numeric_limits<double>::epsilon() * std::fabs(value)) error = 0;
    return {a, b, value, error};
  }
};
}  // namespace

std::string_view to_string(QuadratureScheme scheme) {
  return scheme == QuadratureScheme::gauss_legendre ? "gauss-legendre" : "adaptive-simpson";
}

QuadratureScheme parse_scheme(std::string_view text) {
  if (text == "gauss-legendre" || text == "legendre") return QuadratureScheme::gauss_legendre;
  if (text == "adaptive-simpson" || text == "simpson") return QuadratureScheme::adaptive_simpson;
  fail(ErrorKind::usage, "unknown quadrature scheme '" + std::string(text) + "'");
}

void QuadratureConfig::validate() const {
  if (nodes == 0) fail(ErrorKind::usage, "quadrature nodes must be positive");
  if (!(tolerance > 0) || !std::isfinite(tolerance)) {
    fail(ErrorKind::usage, "quadrature tolerance must be a positive number");
  }
}

const GaussRule& gauss_legendre_rule(int order) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  if (order < 1) fail(ErrorKind::usage, "Gauss-Legendre order must be positive");
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

QuadratureResult integrate_abs(const std::function<double(double)>& f, double a, double b,
                               std::size_t frequency, const QuadratureConfig& config) {
  return integrate_abs(std::span(&f, 1), a, b, frequency, config);
}

QuadratureResult integrate_abs(std::span<const std::function<double(double)>> factors, double a,
                               double b, std::size_t frequency, const QuadratureConfig& config) {
  config.validate();
  if (!(b > a)) fail(ErrorKind::usage, "integration interval must be nonempty");
  if (factors.empty()) fail(ErrorKind::usage, "integrand needs at least one factor");
  const std::function<double(double)> product = [&factors](double x) {
    double v = 1.0;
    for (const auto& g : factors) v *= g(x);
    return v;
  };
  Integrator in{product, config};

  const std::size_t cells = std::max(config.nodes, frequency);
  const double h = (b - a) / static_cast<double>(cells);
  std::vector<double> breaks{a, b};
  for (const auto& g : factors) {
    auto counted = [&](double x) {
      ++in.evaluations;
      return g(x);
    };
    double x0 = a;
    double f0 = counted(a);
    for (std::size_t i = 1; i <= cells; ++i) {
      const double x1 = i == cells ? b : a + h * static_cast<double>(i);
      const double f1 = counted(x1);
      if ((f0 < 0 && f1 > 0) || (f0 > 0 && f1 < 0)) {
        std::uintmax_t iters = 64;
        auto root = boost::math::tools::toms748_solve(
            counted, x0, x1, f0, f1, boost::math::tools::eps_tolerance<double>(44), iters);
        breaks.push_back(0.5 * (root.first + root.second));
      } else if (f1 == 0 && i != cells) {
        breaks.push_back(x1);
      }
      x0 = x1;
      f0 = f1;
    }
  }
  std::sort(breaks.begin(), breaks.end());

  std::priority_queue<Piece> heap;
  long double error = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    Piece p = in.estimate(breaks[i], breaks[i + 1]);
    error += p.error;
    heap.push(p);
  }
  const std::size_t budget = in.evaluations + kEvaluationsPerCell * cells;
  while (error > config.tolerance && !heap.empty() && heap.top().error > 0 &&
         in.evaluations < budget) {
    Piece worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    heap.pop();
    Piece left = in.estimate(worst.a, mid);
    Piece right = in.estimate(mid, worst.b);
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  long double total = 0;
  error = 0;
  QuadratureResult result;
  result.pieces = heap.size();
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  result.value = static_cast<double>(total);
  result.error_estimate = static_cast<double>(error);
  result.evaluations = in.evaluations;
  if (!(error <= config.tolerance) || !std::isfinite(result.value)) {
    throw NumericError("quadrature missed the tolerance " + std::to_string(config.tolerance) +
                           " (residual estimate " + std::to_string(result.error_estimate) + ")",
                       result.error_estimate);
  }
  return result;
}

}  // namespace fusionhg
