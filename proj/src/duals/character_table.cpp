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

#include "fusionhg/character_table.hpp"

#include <cmath>
#include <numbers>

#include "fusionhg/error.hpp"

namespace fusionhg {

namespace {

std::complex<double> to_complex(const GaussianRational& z) { return {z.re.get_d(), z.im.get_d()}; }

CharacterTable::Irrep exact_irrep(std::string name, std::vector<GaussianRational> values) {
  CharacterTable::Irrep irrep;
  irrep.name = std::move(name);
  irrep.dim = values.front().re.get_num().get_si();
  for (const auto& v : values) irrep.values.push_back(to_complex(v));
  irrep.exact_values = std::move(values);
  return irrep;
}

std::string row_location(std::size_t i) { return "irreps[" + std::to_string(i) + "]"; }

}  // namespace

bool CharacterTable::exact() const {
  for (const auto& irrep : irreps) {
    if (irrep.exact_values.size() != class_sizes.size()) return false;
  }
  return !irreps.empty();
}

void CharacterTable::validate() const {
  if (group_order <= 0) throw InvalidTableError("group order must be positive", "group_order");
  if (class_sizes.empty()) throw InvalidTableError("no conjugacy classes", "classes");
  std::int64_t class_total = 0;
  for (std::size_t c = 0; c < class_sizes.size(); ++c) {
    if (class_sizes[c] <= 0) {
      throw InvalidTableError("class size must be positive", "classes[" + std::to_string(c) + "]");
    }
    class_total += class_sizes[c];
  }
  if (class_total != group_order) {
    throw InvalidTableError("class sizes sum to " + std::to_string(class_total) +
                                " but group order is " + std::to_string(group_order),
                            "classes");
  }
  if (class_sizes.front() != 1) throw InvalidTableError("class 0 must be the identity class", "classes[0]");
  if (irreps.size() != class_sizes.size()) {
    throw InvalidTableError("number of irreps (" + std::to_string(irreps.size()) +
                                ") differs from number of classes (" +
                                std::to_string(class_sizes.size()) + ")",
                            "irreps");
  }
  std::int64_t dim_squares = 0;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const Irrep& r = irreps[i];
    if (r.dim <= 0) throw InvalidTableError("dimension must be positive", row_location(i) + ".dim");
    if (r.values.size() != class_sizes.size()) {
      throw InvalidTableError("expected one value per class", row_location(i) + ".values");
    }
    if (!r.exact_values.empty() && r.exact_values.size() != class_sizes.size()) {
      throw InvalidTableError("expected one value per class", row_location(i) + ".values");
    }
    if (std::abs(r.values.front() - std::complex<double>(static_cast<double>(r.dim))) >
        kMultiplicityTolerance) {
      throw InvalidTableError("character at the identity differs from dim", row_location(i) + ".values[0]");
    }
    dim_squares += r.dim * r.dim;
  }
  if (dim_squares != group_order) {
    throw InvalidTableError("sum of squared dimensions is " + std::to_string(dim_squares) +
                                ", not the group order " + std::to_string(group_order),
                            "irreps");
  }

  const bool is_exact = exact();
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    for (std::size_t j = i; j < irreps.size(); ++j) {
      bool ok = true;
      if (is_exact) {
        GaussianRational sum;
        for (std::size_t c = 0; c < class_sizes.size(); ++c) {
          sum += Rational(class_sizes[c]) * (irreps[i].exact_values[c] * irreps[j].exact_values[c].conj());
        }
        ok = sum == GaussianRational(Rational(i == j ? group_order : 0));
      } else {
        std::complex<double> sum = 0;
        for (std::size_t c = 0; c < class_sizes.size(); ++c) {
          sum += static_cast<double>(class_sizes[c]) * irreps[i].values[c] * std::conj(irreps[j].values[c]);
        }
        sum /= static_cast<double>(group_order);
        ok = std::abs(sum - std::complex<double>(i == j ? 1.0 : 0.0)) <= kMultiplicityTolerance;
      }
      if (!ok) {
        throw InvalidTableError("rows " + std::to_string(i) + " and " + std::to_string(j) +
                                    " violate orthogonality",
                                row_location(i) + "," + row_location(j));
      }
    }
  }
}

CharacterTable CharacterTable::product(const CharacterTable& a, const CharacterTable& b) {
  CharacterTable t;
  t.name = a.name + "x" + b.name;
  t.group_order = a.group_order * b.group_order;
  for (auto sa : a.class_sizes) {
    for (auto sb : b.class_sizes) t.class_sizes.push_back(sa * sb);
  }
  const bool both_exact = a.exact() && b.exact();
  for (const auto& ra : a.irreps) {
    for (const auto& rb : b.irreps) {
      Irrep r;
      r.name = "(" + ra.name + "," + rb.name + ")";
      r.dim = ra.dim * rb.dim;
      for (std::size_t i = 0; i < ra.values.size(); ++i) {
        for (std::size_t j = 0; j < rb.values.size(); ++j) {
          r.values.push_back(ra.values[i] * rb.values[j]);
          if (both_exact) r.exact_values.push_back(ra.exact_values[i] * rb.exact_values[j]);
        }
      }
      t.irreps.push_back(std::move(r));
    }
  }
  return t;
}

CharacterTable cyclic_table(int n) {
  if (n <= 0) fail(ErrorKind::usage, "cyclic group order must be positive");
  CharacterTable t;
  t.name = "Z" + std::to_string(n);
  t.group_order = n;
  t.class_sizes.assign(static_cast<std::size_t>(n), 1);
  // Roots of unity are Gaussian rationals exactly when n divides 4.
  const bool exact = 4 % n == 0;
  for (int j = 0; j < n; ++j) {
    CharacterTable::Irrep r;
    r.name = "chi" + std::to_string(j);
    r.dim = 1;
    for (int k = 0; k < n; ++k) {
      const int e = (j * k) % n;
      if (exact) {
        // i^(4e/n)
        static const GaussianRational powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const auto& z = powers[(4 / n) * e % 4];
        r.exact_values.push_back(z);
        r.values.push_back(to_complex(z));
      } else {
        const double angle = 2.0 * std::numbers::pi * e / n;
        r.values.emplace_back(std::cos(angle), std::sin(angle));
      }
    }
    if (!exact) r.values.front() = 1.0;
    t.irreps.push_back(std::move(r));
  }
  return t;
}

CharacterTable symmetric3_table() {
  CharacterTable t;
  t.name = "S3";
  t.group_order = 6;
  t.class_sizes = {1, 3, 2};  // identity, transpositions, 3-cycles
  t.irreps.push_back(exact_irrep("triv", {1, 1, 1}));
  t.irreps.push_back(exact_irrep("sgn", {1, -1, 1}));
  t.irreps.push_back(exact_irrep("rho", {2, 0, -1}));
  return t;
}

CharacterTable quaternion8_table() {
  CharacterTable t;
  t.name = "Q8";
  t.group_order = 8;
  t.class_sizes = {1, 1, 2, 2, 2};  // 1, -1, {+-i}, {+-j}, {+-k}
  t.irreps.push_back(exact_irrep("triv", {1, 1, 1, 1, 1}));
  t.irreps.push_back(exact_irrep("chi_i", {1, 1, 1, -1, -1}));
  t.irreps.push_back(exact_irrep("chi_j", {1, 1, -1, 1, -1}));
  t.irreps.push_back(exact_irrep("chi_k", {1, 1, -1, -1, 1}));
  t.irreps.push_back(exact_irrep("rho", {2, -2, 0, 0, 0}));
  return t;
}

CharacterTable klein4_table() {
  CharacterTable t = CharacterTable::product(cyclic_table(2), cyclic_table(2));
  t.name = "V4";
  return t;
}

}  // namespace fusionhg
