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

#ifndef FUSIONHG_LEPTIN_HPP_
#define FUSIONHG_LEPTIN_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "fusionhg/hypergroup.hpp"
#include "fusionhg/label.hpp"
#include "fusionhg/product_dual.hpp"
#include "fusionhg/rational.hpp"
#include "fusionhg/su2_dual.hpp"

namespace fusionhg {

enum class LeptinStrategy { interval, greedy, exhaustive, product };

std::string_view to_string(LeptinStrategy strategy);
LeptinStrategy parse_strategy(std::string_view text);

struct LeptinCertificate {
  LabelSet K;
  LabelSet V;
  Rational ratio;
  Rational epsilon;
  LeptinStrategy strategy = LeptinStrategy::interval;
};

// h(K*V) / h(V).
Rational leptin_ratio(const Hypergroup& hg, const LabelSet& K, const LabelSet& V);

// Closed form of leptin_ratio for K = ball(k), V = ball(m) in the SU(2) dual:
// S(2m+2k+1) / S(2m+1) with S(N) = 1^2 + ... + N^2.
Rational su2_interval_ratio(Spin k, Spin m);

// Smallest m >= k, in half-integer steps, with su2_interval_ratio(k, m) < 1 + epsilon.
LeptinCertificate leptin_search_interval(Spin k, const Rational& epsilon);

struct GreedyOptions {
  std::size_t max_size = 64;
  // Candidates examined per step, taken in label order.
  std::size_t pool_limit = 256;
};

std::optional<LeptinCertificate> leptin_search_greedy(const Hypergroup& hg, const LabelSet& K,
                                                      const Rational& epsilon,
                                                      GreedyOptions options = {});

inline constexpr std::size_t kExhaustiveCap = 20;

// Minimum ratio over all nonempty V in the universe; the smallest minimizer
// (by size, then label order) is returned. The certificate's epsilon is the
// requested one, so the ratio may exceed 1 + epsilon: check satisfied().
LeptinCertificate leptin_search_exhaustive(const Hypergroup& hg, const LabelSet& K,
                                           const Rational& epsilon,
                                           std::size_t cap = kExhaustiveCap,
                                           unsigned threads = 0);

// Combines one certificate per factor into a certificate for V = prod V_i,
// K = prod K_i. The ratio is recomputed in the product and must not exceed
// the product of factor ratios; epsilon is prod (1 + eps_i) - 1.
LeptinCertificate leptin_product(const ProductDual& product,
                                 const std::vector<LeptinCertificate>& certs);

bool satisfied(const LeptinCertificate& cert);

// Recomputes the ratio from scratch; true iff it reproduces cert.ratio exactly
// and ratio < 1 + epsilon.
bool verify_certificate(const Hypergroup& hg, const LeptinCertificate& cert);

}  // namespace fusionhg

#endif  // FUSIONHG_LEPTIN_HPP_
