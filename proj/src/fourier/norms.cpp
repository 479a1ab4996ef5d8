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

#include <cmath>
#include <numbers>
#include <string>

#include "fusionhg/central_function.hpp"
#include "fusionhg/core.hpp"
#include "fusionhg/error.hpp"
#include "fusionhg/fourier.hpp"

namespace fusionhg {

namespace {

void check_p(double p) {
  if (std::isnan(p) || p < 1) {
    fail(ErrorKind::usage, "p must be at least 1, got " + std::to_string(p));
  }
}

std::optional<int> integer_exponent(double p) {
  if (std::isfinite(p) && p == std::floor(p) && p <= 64) return static_cast<int>(p);
  return std::nullopt;
}

Rational rational_power(const Rational& base, int p) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(p));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(p));
  return r;
}

constexpr long double kTwoOverPi = 2 / std::numbers::pi_v<long double>;

}  // namespace

NormValue lp_h_norm(const Hypergroup& hg, const ExactFunction& f, double p) {
  check_p(p);
  NormValue out;
  if (std::isinf(p)) {
    Rational best = 0;
    for (const auto& [x, v] : f) {
      hg.require(x);
      if (abs(v) > best) best = abs(v);
    }
    out.exact = best;
    out.value = to_double(best);
    return out;
  }
  if (auto k = integer_exponent(p)) {
    Rational sum = 0;
    for (const auto& [x, v] : f) sum += hg.haar(x) * rational_power(abs(v), *k);
    out.exact_power = sum;
    if (*k == 1) {
      out.exact = sum;
    } else if (*k == 2) {
      out.exact = exact_sqrt(sum);
    }
    out.value = out.exact ? to_double(*out.exact) : std::pow(to_double(sum), 1.0 / p);
    return out;
  }
  long double sum = 0;
  for (const auto& [x, v] : f) {
    sum += static_cast<long double>(to_double(hg.haar(x))) *
           std::pow(static_cast<long double>(std::fabs(to_double(v))), static_cast<long double>(p));
  }
  out.value = static_cast<double>(std::pow(sum, 1 / static_cast<long double>(p)));
  return out;
}

double lp_h_norm(const Hypergroup& hg, const RealFunction& f, double p) {
  check_p(p);
  long double acc = 0;
  for (const auto& [x, v] : f) {
    if (std::isinf(p)) {
      hg.require(x);
      acc = std::max<long double>(acc, std::fabs(v));
    } else {
      acc += static_cast<long double>(to_double(hg.haar(x))) *
             std::pow(static_cast<long double>(std::fabs(v)), static_cast<long double>(p));
    }
  }
  if (std::isinf(p)) return static_cast<double>(acc);
  return static_cast<double>(std::pow(acc, 1 / static_cast<long double>(p)));
}

NormValue a_norm_exact_finite(const FiniteDual& dual, const ExactFunction& v) {
  const FiniteClassFunction f = central_function(dual, v);
  const CharacterTable& t = dual.table();
  NormValue out;
  if (const auto& exact = f.exact_values()) {
    Rational sum = 0;
    bool rational = true;
    for (std::size_t c = 0; c < exact->size() && rational; ++c) {
      auto modulus = exact_sqrt((*exact)[c].norm_squared());
      if (!modulus) {
        rational = false;
      } else {
        sum += Rational(t.class_sizes[c]) * *modulus;
      }
    }
    if (rational) {
      out.exact = sum / Rational(t.group_order);
      out.value = to_double(*out.exact);
      return out;
    }
  }
  long double sum = 0;
  for (std::size_t c = 0; c < f.num_classes(); ++c) {
    const std::complex<long double> z(f(c).real(), f(c).imag());
    sum += static_cast<long double>(t.class_sizes[c]) * std::abs(z);
  }
  out.value = static_cast<double>(sum / static_cast<long double>(t.group_order));
  return out;
}

double a_norm_su2(const ExactFunction& v, const QuadratureConfig& config) {
  const Su2ClassFunction f(v);
  QuadratureConfig scaled = config;
  scaled.tolerance = config.tolerance / static_cast<double>(kTwoOverPi);
  auto r = integrate_abs([&f](double t) { return f.weighted(t); }, 0.0, std::numbers::pi,
                         static_cast<std::size_t>(f.bandwidth() + 2), scaled);
  return static_cast<double>(kTwoOverPi * r.value);
}

SineKernel::SineKernel(long n) : n_(n), power_sums_{} {
  if (n < 0) fail(ErrorKind::usage, "kernel order must be nonnegative");
  for (long j = 1; j <= n; ++j) {
    const long double j2 = static_cast<long double>(j) * j;
    long double term = j2;
    for (long double& s : power_sums_) {
      s += term;
      term *= j2;
    }
  }
}

long double SineKernel::operator()(double theta) const {
  const long double nt = static_cast<long double>(n_) * theta;
  if (nt < 0.5L) {
    // sum_k (-1)^k theta^(2k+1) / (2k+1)! sum_j j^(2k+2)
    const long double t2 = static_cast<long double>(theta) * theta;
    long double term = theta;
    long double sum = 0;
    for (int k = 0; k < 8; ++k) {
      sum += term * power_sums_[k];
      term *= -t2 / ((2 * k + 2) * (2 * k + 3));
    }
    return sum;
  }
  // ((N+1) sin(N t) - N sin((N+1) t)) / (4 sin^2(t/2)), with the numerator
  // rewritten as sin(N t) (1 + 2N sin^2(t/2)) - N cos(N t) sin(t) to avoid
  // cancellation. N t is reduced in extended precision.
  constexpr long double kTwoPi = 2 * std::numbers::pi_v<long double>;
  const double r = static_cast<double>(nt - std::nearbyint(nt / kTwoPi) * kTwoPi);
  const double sn = std::sin(r);
  const double cn = std::cos(r);
  const long double sh = std::sin(0.5 * theta);
  const long double sh2 = sh * sh;
  return (sn * (1 + 2 * n_ * sh2) - static_cast<long double>(n_) * cn * std::sin(theta)) /
         (4 * sh2);
}

double a_norm_bump(const Hypergroup& hg, const BumpFunction& b, const QuadratureConfig& config) {
  if (dynamic_cast<const Su2Dual*>(&hg) != nullptr) {
    auto nf = Su2Dual::ball_bound(b.KV);
    auto ng = Su2Dual::ball_bound(b.V);
    if (nf && ng) {
      const SineKernel F(*nf + 1);
      const SineKernel G(*ng + 1);
      const long double scale = kTwoOverPi / static_cast<long double>(to_double(b.haar_V));
      QuadratureConfig scaled = config;
      scaled.tolerance = static_cast<double>(config.tolerance / scale);
      const std::function<double(double)> factors[] = {
          [&F](double t) { return static_cast<double>(F(t)); },
          [&G](double t) { return static_cast<double>(G(t)); }};
      auto r = integrate_abs(factors, 0.0, std::numbers::pi,
                             static_cast<std::size_t>(F.order() + G.order()), scaled);
      return static_cast<double>(scale * r.value);
    }
  }
  return a_norm(hg, b.u, config);
}

double a_norm(const Hypergroup& hg, const ExactFunction& v, const QuadratureConfig& config) {
  if (const auto* finite = dynamic_cast<const FiniteDual*>(&hg)) {
    return a_norm_exact_finite(*finite, v).value;
  }
  if (dynamic_cast<const Su2Dual*>(&hg) != nullptr) {
    for (const auto& [x, value] : v) hg.require(x);
    return a_norm_su2(v, config);
  }
  fail(ErrorKind::usage, "no A-norm evaluator for " + hg.name() +
                             "; SU(2) and finite group duals are supported");
}

NormValue segal_cp_norm_central(const Hypergroup& hg, const ExactFunction& v, double p) {
  if (std::isnan(p) || p < 1 || p > 2) {
    fail(ErrorKind::usage, "central Segal norm needs p in [1, 2], got " + std::to_string(p));
  }
  return lp_h_norm(hg, v, p);
}

}  // namespace fusionhg
