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

#include <map>

#include "fusionhg/core.hpp"
#include "fusionhg/error.hpp"

namespace fusionhg {

FiniteMeasure convolve_points(const Hypergroup& hg, const Label& x, const Label& y) {
  return hg.fuse(x, y);
}

Rational haar(const Hypergroup& hg, const Label& x) { return hg.haar(x); }

Rational haar_mass(const Hypergroup& hg, const LabelSet& set) {
  Rational sum;
  for (const Label& x : set) sum += hg.haar(x);
  return sum;
}

FiniteMeasure convolve_measures(const Hypergroup& hg, const FiniteMeasure& mu,
                                const FiniteMeasure& nu) {
  std::map<Label, Rational> acc;
  for (const auto& [x, mx] : mu) {
    for (const auto& [y, my] : nu) {
      Rational w = mx * my;
      for (const auto& [z, c] : hg.fuse(x, y)) acc[z] += w * c;
    }
  }
  FiniteMeasure out;
  for (const auto& [z, m] : acc) out.add(z, m);
  return out;
}

namespace {

template <class Scalar>
Scalar haar_as(const Hypergroup& hg, const Label& x) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return hg.haar(x);
  } else {
    return hg.haar(x).get_d();
  }
}

template <class Scalar>
Scalar coefficient_as(const Rational& c) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return c;
  } else {
    return c.get_d();
  }
}

}  // namespace

template <class Scalar>
FiniteFunction<Scalar> convolve_h(const Hypergroup& hg, const FiniteFunction<Scalar>& f,
                                  const FiniteFunction<Scalar>& g) {
  std::map<Label, Scalar> acc;
  for (const auto& [x, fx] : f) {
    Scalar wx = fx * haar_as<Scalar>(hg, x);
    for (const auto& [y, gy] : g) {
      Scalar wxy = wx * gy * haar_as<Scalar>(hg, y);
      for (const auto& [z, c] : hg.fuse(x, y)) {
        acc[z] += wxy * coefficient_as<Scalar>(c);
      }
    }
  }
  std::vector<std::pair<Label, Scalar>> entries;
  entries.reserve(acc.size());
  for (auto& [z, v] : acc) {
    Scalar value = v / haar_as<Scalar>(hg, z);
    entries.emplace_back(z, std::move(value));
  }
  return FiniteFunction<Scalar>::from_sorted(std::move(entries));
}

template ExactFunction convolve_h(const Hypergroup&, const ExactFunction&, const ExactFunction&);
template RealFunction convolve_h(const Hypergroup&, const RealFunction&, const RealFunction&);

LabelSet involute(const Hypergroup& hg, const LabelSet& set) {
  std::vector<Label> out;
  out.reserve(set.size());
  for (const Label& x : set) out.push_back(hg.involution(x));
  return make_label_set(std::move(out));
}

LabelSet support_product(const Hypergroup& hg, const LabelSet& a, const LabelSet& b) {
  for (const Label& x : a) hg.require(x);
  for (const Label& y : b) hg.require(y);
  return hg.support_product(a, b);
}

}  // namespace fusionhg
