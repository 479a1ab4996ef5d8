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

#ifndef FUSIONHG_TABLE_HYPERGROUP_HPP_
#define FUSIONHG_TABLE_HYPERGROUP_HPP_

#include <memory>
#include <string>
#include <vector>

#include "fusionhg/hypergroup.hpp"

namespace fusionhg {

// Finite hypergroup given by an explicit fusion table on points {0..n-1}.
// No validation beyond shape: check_axioms() decides whether the table is a
// hypergroup. Used for snapshots and for deliberately broken tables.
class TableHypergroup final : public Hypergroup {
 public:
  TableHypergroup(std::string name, std::vector<std::string> point_names,
                  std::vector<std::size_t> involution, std::size_t identity,
                  std::vector<std::vector<FiniteMeasure>> table, bool commutative);

  // Copies the fusion table of a finite hypergroup; point i is the i-th
  // element of hg.universe().
  static std::shared_ptr<TableHypergroup> snapshot(const Hypergroup& hg);

  // Copy with (delta_x * delta_y)({z}) replaced by `mass`.
  std::shared_ptr<TableHypergroup> with_coefficient(std::size_t x, std::size_t y, std::size_t z,
                                                    const Rational& mass) const;

  std::string name() const override { return name_; }
  bool contains(const Label& x) const override;
  Label involution(const Label& x) const override;
  std::optional<std::vector<Label>> universe() const override;
  std::string format_label(const Label& x) const override;
  Label parse_label(std::string_view text) const override;

 protected:
  FiniteMeasure compute_fusion(const Label& x, const Label& y) const override;

 private:
  std::string name_;
  std::vector<std::string> point_names_;
  std::vector<std::size_t> involution_;
  std::vector<std::vector<FiniteMeasure>> table_;
};

}  // namespace fusionhg

#endif  // FUSIONHG_TABLE_HYPERGROUP_HPP_
