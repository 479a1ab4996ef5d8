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

#ifndef FUSIONHG_CORE_HPP_
#define FUSIONHG_CORE_HPP_

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "fusionhg/function.hpp"
#include "fusionhg/hypergroup.hpp"
#include "fusionhg/label.hpp"

namespace fusionhg {

// delta_x * delta_y; masses are nonnegative and sum to exactly one.
FiniteMeasure convolve_points(const Hypergroup& hg, const Label& x, const Label& y);

Rational haar(const Hypergroup& hg, const Label& x);

// Total Haar mass of a finite set.
Rational haar_mass(const Hypergroup& hg, const LabelSet& set);

// Bilinear extension of the point fusion to finite measures.
FiniteMeasure convolve_measures(const Hypergroup& hg, const FiniteMeasure& mu,
                                const FiniteMeasure& nu);

// Weighted convolution of L^1(H, h):
//   (f *_h g)(z) = sum_{x,y} f(x) g(y) h(x) h(y) / h(z) * (delta_x * delta_y)(z).
template <class Scalar>
FiniteFunction<Scalar> convolve_h(const Hypergroup& hg, const FiniteFunction<Scalar>& f,
                                  const FiniteFunction<Scalar>& g);

extern template ExactFunction convolve_h(const Hypergroup&, const ExactFunction&,
                                         const ExactFunction&);
extern template RealFunction convolve_h(const Hypergroup&, const RealFunction&,
                                        const RealFunction&);

// ~f(x) = f(~x).
template <class Scalar>
FiniteFunction<Scalar> involute(const Hypergroup& hg, const FiniteFunction<Scalar>& f) {
  std::vector<std::pair<Label, Scalar>> entries;
  entries.reserve(f.size());
  for (const auto& [x, v] : f) entries.emplace_back(hg.involution(x), v);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return FiniteFunction<Scalar>::from_sorted(std::move(entries));
}

LabelSet involute(const Hypergroup& hg, const LabelSet& set);

LabelSet support_product(const Hypergroup& hg, const LabelSet& a, const LabelSet& b);

// Result of check_axioms. Failures are data: each one names the violated law
// and the labels that witness it.
struct AxiomFailure {
  std::string check;
  std::vector<Label> witness;
  std::string detail;
};

struct AxiomReport {
  std::size_t sample_size = 0;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::vector<AxiomFailure> failures;

  bool ok() const { return failures.empty(); }
  bool failed(std::string_view check) const;
};

// Exact verification of the hypergroup laws over all pairs and triples drawn
// from `sample`: mass normalization, identity laws, associativity,
// (delta_x * delta_y)~ = delta_~y * delta_~x, e in supp(delta_~x * delta_x),
// involutivity of ~, and commutativity when the hypergroup claims it.
// `threads` = 0 selects default_threads().
AxiomReport check_axioms(const Hypergroup& hg, std::span<const Label> sample,
                         unsigned threads = 0);

}  // namespace fusionhg

#endif  // FUSIONHG_CORE_HPP_
