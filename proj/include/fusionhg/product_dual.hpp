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

#ifndef FUSIONHG_PRODUCT_DUAL_HPP_
#define FUSIONHG_PRODUCT_DUAL_HPP_

#include <memory>
#include <string>
#include <vector>

#include "fusionhg/hypergroup.hpp"

namespace fusionhg {

// Finite product H_1 x ... x H_k. A label is the concatenation of factor
// labels; fusion is the componentwise product measure, so Haar masses
// multiply and the product is commutative iff every factor is.
class ProductDual final : public Hypergroup {
 public:
  explicit ProductDual(std::vector<HypergroupPtr> factors);

  std::size_t num_factors() const { return factors_.size(); }
  const Hypergroup& factor(std::size_t i) const { return *factors_.at(i); }
  const HypergroupPtr& factor_ptr(std::size_t i) const { return factors_.at(i); }

  std::vector<Label> split(const Label& x) const;
  Label join(const std::vector<Label>& components) const;
  // prod_i sets[i].
  LabelSet cartesian(const std::vector<LabelSet>& sets) const;

  std::string name() const override;
  bool contains(const Label& x) const override;
  Label involution(const Label& x) const override;
  std::optional<std::vector<Label>> universe() const override;
  std::string format_label(const Label& x) const override;
  // "(a,b,...)" with one factor label per component.
  Label parse_label(std::string_view text) const override;

  Rational fusion_coefficient(const Label& x, const Label& y, const Label& z) const override;
  std::vector<Label> growth_generators() const override;

 protected:
  FiniteMeasure compute_fusion(const Label& x, const Label& y) const override;

 private:
  std::vector<HypergroupPtr> factors_;
  std::vector<std::size_t> offsets_;
};

std::shared_ptr<const ProductDual> product_dual(std::vector<HypergroupPtr> factors);

// Splits "a,b,(c,d)" at top-level commas.
std::vector<std::string> split_top_level(std::string_view text, char separator = ',');

}  // namespace fusionhg

#endif  // FUSIONHG_PRODUCT_DUAL_HPP_
