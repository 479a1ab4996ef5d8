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

// Brute-force reference computations shared by the tests. Nothing here calls
// the fast paths it is used to check.

#ifndef FUSIONHG_TESTS_ORACLES_HPP_
#define FUSIONHG_TESTS_ORACLES_HPP_

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <vector>

#include "fusionhg/character_table.hpp"
#include "fusionhg/hypergroup.hpp"
#include "fusionhg/rational.hpp"

namespace oracle {

using fusionhg::Label;
using fusionhg::LabelSet;
using fusionhg::Rational;

// Owned copy of a finite universe, safe as a range-for initializer.
inline std::vector<Label> universe(const fusionhg::Hypergroup& hg) { return *hg.universe(); }

// Clebsch-Gordan: pi_a (x) pi_b = sum_{r=|a-b|, step 2}^{a+b} pi_r, masses d_r/(d_a d_b).
inline std::map<int, Rational> su2_fuse(int a, int b) {
  std::map<int, Rational> out;
  for (int r = std::abs(a - b); r <= a + b; r += 2) {
    Rational m(r + 1, (a + 1) * (b + 1));
    m.canonicalize();
    out[r] = m;
  }
  return out;
}

// Union of supp(delta_x * delta_y) over all pairs, through fuse() only.
inline LabelSet support_product(const fusionhg::Hypergroup& hg, const LabelSet& A,
                                const LabelSet& B) {
  std::set<Label> acc;
  for (const Label& x : A) {
    for (const Label& y : B) {
      for (const auto& [z, c] : hg.fuse(x, y)) acc.insert(z);
    }
  }
  return LabelSet(acc.begin(), acc.end());
}

inline Rational haar_sum(const fusionhg::Hypergroup& hg, const LabelSet& s) {
  Rational sum = 0;
  for (const Label& x : s) sum += 1 / hg.fusion_coefficient(hg.involution(x), x, hg.identity());
  return sum;
}

inline Rational leptin_ratio(const fusionhg::Hypergroup& hg, const LabelSet& K,
                             const LabelSet& V) {
  return oracle::haar_sum(hg, oracle::support_product(hg, K, V)) / oracle::haar_sum(hg, V);
}

// 1^2 + ... + n^2 by summation.
inline Rational square_sum(long n) {
  Rational s = 0;
  for (long j = 1; j <= n; ++j) s += Rational(j * j);
  return s;
}

// <chi_i chi_j, chi_k> in floating point.
inline double multiplicity(const fusionhg::CharacterTable& t, std::size_t i, std::size_t j,
                           std::size_t k) {
  std::complex<double> sum = 0;
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    sum += static_cast<double>(t.class_sizes[c]) * t.irreps[i].values[c] *
           t.irreps[j].values[c] * std::conj(t.irreps[k].values[c]);
  }
  return sum.real() / static_cast<double>(t.group_order);
}

// sum_{j=1}^N j sin(j theta).
inline long double sine_sum(long n, long double theta) {
  long double s = 0;
  for (long j = 1; j <= n; ++j) s += j * std::sin(j * theta);
  return s;
}

// Composite Simpson on [a, b] with n (even) panels.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
  return s * h / 3;
}

}  // namespace oracle

#endif  // FUSIONHG_TESTS_ORACLES_HPP_
