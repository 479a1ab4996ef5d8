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

#include "fusionhg/finite_dual.hpp"

#include <cmath>

#include "fusionhg/error.hpp"

namespace fusionhg {

namespace {

std::size_t find_trivial(const CharacterTable& t) {
  for (std::size_t i = 0; i < t.irreps.size(); ++i) {
    bool trivial = true;
    for (const auto& v : t.irreps[i].values) {
      if (std::abs(v - std::complex<double>(1.0)) > CharacterTable::kMultiplicityTolerance) {
        trivial = false;
        break;
      }
    }
    if (trivial) return i;
  }
  throw InvalidTableError("no trivial (all-ones) row", "irreps");
}

const CharacterTable& validated(const CharacterTable& t) {
  t.validate();
  return t;
}

}  // namespace

FiniteDual::FiniteDual(CharacterTable table)
    : Hypergroup(Label(static_cast<Label::Part>(find_trivial(validated(table)))), true, 1),
      table_(std::move(table)) {
  const std::size_t n = table_.irreps.size();
  const std::size_t classes = table_.num_classes();
  const bool exact = table_.exact();
  multiplicities_.assign(n * n * n, 0);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::string where = "multiplicity of irreps[" + std::to_string(k) + "] in irreps[" +
                                  std::to_string(i) + "] (x) irreps[" + std::to_string(j) + "]";
        std::int64_t m = 0;
        if (exact) {
          GaussianRational sum;
          for (std::size_t c = 0; c < classes; ++c) {
            const auto& ri = table_.irreps[i].exact_values[c];
            const auto& rj = table_.irreps[j].exact_values[c];
            const auto& rk = table_.irreps[k].exact_values[c];
            sum += Rational(table_.class_sizes[c]) * (ri * rj * rk.conj());
          }
          Rational value = sum.re / table_.group_order;
          if (sum.im != 0 || value.get_den() != 1 || sgn(value) < 0) {
            throw InvalidTableError(where + " is " + to_string(value) + " (not a nonnegative integer)");
          }
          m = value.get_num().get_si();
        } else {
          std::complex<double> sum = 0;
          for (std::size_t c = 0; c < classes; ++c) {
            sum += static_cast<double>(table_.class_sizes[c]) * table_.irreps[i].values[c] *
                   table_.irreps[j].values[c] * std::conj(table_.irreps[k].values[c]);
          }
          sum /= static_cast<double>(table_.group_order);
          const double rounded = std::round(sum.real());
          if (std::abs(sum - std::complex<double>(rounded)) > CharacterTable::kMultiplicityTolerance ||
              rounded < 0) {
            throw InvalidTableError(where + " is not a nonnegative integer");
          }
          m = static_cast<std::int64_t>(rounded);
        }
        multiplicities_[(i * n + j) * n + k] = m;
      }
    }
  }

  conjugate_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool match = true;
      for (std::size_t c = 0; c < classes && match; ++c) {
        if (exact) {
          match = table_.irreps[j].exact_values[c] == table_.irreps[i].exact_values[c].conj();
        } else {
          match = std::abs(table_.irreps[j].values[c] - std::conj(table_.irreps[i].values[c])) <=
                  CharacterTable::kMultiplicityTolerance;
        }
      }
      if (!match) continue;
      if (conjugate_[i] != n) {
        throw InvalidTableError("ambiguous conjugate: rows " + std::to_string(conjugate_[i]) +
                                    " and " + std::to_string(j) + " both match",
                                "irreps[" + std::to_string(i) + "]");
      }
      conjugate_[i] = j;
    }
    if (conjugate_[i] == n) {
      throw InvalidTableError("no conjugate row found", "irreps[" + std::to_string(i) + "]");
    }
  }
}

std::int64_t FiniteDual::multiplicity(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = size();
  return multiplicities_.at((i * n + j) * n + k);
}

bool FiniteDual::contains(const Label& x) const {
  return x.arity() == 1 && x[0] >= 0 && static_cast<std::size_t>(x[0]) < size();
}

Label FiniteDual::involution(const Label& x) const {
  require(x);
  return Label(static_cast<Label::Part>(conjugate_[static_cast<std::size_t>(x[0])]));
}

std::optional<std::vector<Label>> FiniteDual::universe() const {
  std::vector<Label> all;
  for (std::size_t i = 0; i < size(); ++i) all.emplace_back(static_cast<Label::Part>(i));
  return all;
}

std::string FiniteDual::format_label(const Label& x) const {
  if (!contains(x)) return x.debug_string();
  return table_.irreps[static_cast<std::size_t>(x[0])].name;
}

Label FiniteDual::parse_label(std::string_view text) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (table_.irreps[i].name == text) return Label(static_cast<Label::Part>(i));
  }
  return Hypergroup::parse_label(text);
}

FiniteMeasure FiniteDual::compute_fusion(const Label& x, const Label& y) const {
  const auto i = static_cast<std::size_t>(x[0]);
  const auto j = static_cast<std::size_t>(y[0]);
  const Rational denom = Rational(table_.irreps[i].dim) * table_.irreps[j].dim;
  FiniteMeasure m;
  for (std::size_t k = 0; k < size(); ++k) {
    const std::int64_t mult = multiplicity(i, j, k);
    if (mult > 0) {
      m.add(Label(static_cast<Label::Part>(k)), Rational(mult * table_.irreps[k].dim) / denom);
    }
  }
  return m;
}

std::shared_ptr<const FiniteDual> finite_group_dual(CharacterTable table) {
  return std::make_shared<const FiniteDual>(std::move(table));
}

}  // namespace fusionhg
