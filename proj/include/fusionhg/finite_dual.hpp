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

#ifndef FUSIONHG_FINITE_DUAL_HPP_
#define FUSIONHG_FINITE_DUAL_HPP_

#include <memory>
#include <string>
#include <vector>

#include "fusionhg/character_table.hpp"
#include "fusionhg/hypergroup.hpp"

namespace fusionhg {

// Dual of a finite group built from its character table. Point i is irrep i;
// delta_i * delta_j = sum_k m_ijk d_k / (d_i d_j) delta_k, where
// m_ijk = <chi_i chi_j, chi_k> is computed from the table and must be a
// nonnegative integer. The involution sends an irrep to the one whose row is
// the complex conjugate.
class FiniteDual final : public Hypergroup {
 public:
  // Validates `table`; throws InvalidTableError on bad multiplicities, a
  // missing trivial row, or a missing or ambiguous conjugate row.
  explicit FiniteDual(CharacterTable table);

  const CharacterTable& table() const { return table_; }
  std::size_t size() const { return table_.irreps.size(); }
  std::int64_t multiplicity(std::size_t i, std::size_t j, std::size_t k) const;

  std::string name() const override { return table_.name; }
  bool contains(const Label& x) const override;
  Label involution(const Label& x) const override;
  std::optional<std::vector<Label>> universe() const override;
  std::string format_label(const Label& x) const override;
  Label parse_label(std::string_view text) const override;

 protected:
  FiniteMeasure compute_fusion(const Label& x, const Label& y) const override;

 private:
  CharacterTable table_;
  std::vector<std::int64_t> multiplicities_;  // n^3, row-major (i, j, k)
  std::vector<std::size_t> conjugate_;
};

std::shared_ptr<const FiniteDual> finite_group_dual(CharacterTable table);

}  // namespace fusionhg

#endif  // FUSIONHG_FINITE_DUAL_HPP_
