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

#ifndef FUSIONHG_CHARACTER_TABLE_HPP_
#define FUSIONHG_CHARACTER_TABLE_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fusionhg/rational.hpp"

namespace fusionhg {

// Character table of a finite group. Class 0 must be the identity class.
// A table is exact when every value is a Gaussian rational; otherwise all
// arithmetic on it is done in floating point with kMultiplicityTolerance.
struct CharacterTable {
  struct Irrep {
    std::string name;
    std::int64_t dim = 0;
    std::vector<std::complex<double>> values;
    // One entry per class when the table is exact, otherwise empty.
    std::vector<GaussianRational> exact_values;
  };

  static constexpr double kMultiplicityTolerance = 1e-6;

  std::string name;
  std::int64_t group_order = 0;
  std::vector<std::int64_t> class_sizes;
  std::vector<Irrep> irreps;

  bool exact() const;
  std::size_t num_classes() const { return class_sizes.size(); }

  // Throws InvalidTableError on: size mismatches, class sizes not summing to
  // the group order, sum of dim^2 != |G|, chi(identity) != dim, and failure of
  // row orthogonality (the message names the offending pair of rows).
  void validate() const;

  // Table of the direct product; classes and irreps are ordered
  // lexicographically by (a-index, b-index).
  static CharacterTable product(const CharacterTable& a, const CharacterTable& b);
};

// Bundled tables.
CharacterTable cyclic_table(int n);
CharacterTable symmetric3_table();
CharacterTable quaternion8_table();
CharacterTable klein4_table();

}  // namespace fusionhg

#endif  // FUSIONHG_CHARACTER_TABLE_HPP_
