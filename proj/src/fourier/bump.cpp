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

#include "fusionhg/core.hpp"
#include "fusionhg/error.hpp"
#include "fusionhg/fourier.hpp"
#include "fusionhg/leptin.hpp"

namespace fusionhg {

double BumpFunction::a_norm_bound() const { return std::sqrt(to_double(bound_squared)); }

BumpFunction bump(const Hypergroup& hg, const LabelSet& K, const LabelSet& V) {
  if (K.empty() || V.empty()) fail(ErrorKind::usage, "bump needs nonempty K and V");
  for (const Label& x : K) hg.require(x);
  for (const Label& x : V) hg.require(x);

  BumpFunction b;
  b.K = K;
  b.V = V;
  b.KV = support_product(hg, K, V);
  const LabelSet V_inv = involute(hg, V);
  b.KVV = support_product(hg, b.KV, V_inv);
  b.haar_V = haar_mass(hg, V);
  b.bound_squared = haar_mass(hg, b.KV) / b.haar_V;

  if (auto closed = hg.indicator_convolution(b.KV, V)) {
    b.u = std::move(*closed);
  } else {
    b.u = convolve_h(hg, ExactFunction::indicator(b.KV), ExactFunction::indicator(V_inv));
  }
  b.u *= 1 / b.haar_V;

  for (const auto& [x, value] : b.u) {
    if (sgn(value) < 0) {
      fail(ErrorKind::internal_invariant, "bump is negative at " + hg.format_label(x));
    }
  }
  for (const Label& x : K) {
    if (b.u(x) != 1) {
      fail(ErrorKind::internal_invariant, "bump is " + to_string(b.u(x)) + " at " +
                                              hg.format_label(x) + " in K, expected 1");
    }
  }
  for (const auto& [x, value] : b.u) {
    if (!b.KVV.contains(x)) {
      fail(ErrorKind::internal_invariant,
           "bump support leaves K*V*~V at " + hg.format_label(x));
    }
  }
  if (leptin_ratio(hg, K, V) != b.bound_squared) {
    fail(ErrorKind::internal_invariant, "bump bound differs from the leptin ratio");
  }
  return b;
}

}  // namespace fusionhg
