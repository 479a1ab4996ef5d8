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

#include "fusionhg/table_hypergroup.hpp"

#include "fusionhg/error.hpp"

namespace fusionhg {

TableHypergroup::TableHypergroup(std::string name, std::vector<std::string> point_names,
                                 std::vector<std::size_t> involution, std::size_t identity,
                                 std::vector<std::vector<FiniteMeasure>> table, bool commutative)
    : Hypergroup(Label(static_cast<Label::Part>(identity)), commutative, 1),
      name_(std::move(name)),
      point_names_(std::move(point_names)),
      involution_(std::move(involution)),
      table_(std::move(table)) {
  const std::size_t n = point_names_.size();
  if (n == 0 || identity >= n || involution_.size() != n || table_.size() != n) {
    fail(ErrorKind::usage, "fusion table shape does not match its point list");
  }
  for (const auto& row : table_) {
    if (row.size() != n) fail(ErrorKind::usage, "fusion table is not square");
  }
  for (std::size_t t : involution_) {
    if (t >= n) fail(ErrorKind::usage, "involution maps outside the table");
  }
}

std::shared_ptr<TableHypergroup> TableHypergroup::snapshot(const Hypergroup& hg) {
  auto points = hg.universe();
  if (!points) fail(ErrorKind::capacity, hg.name() + " is infinite; cannot tabulate it");
  const std::size_t n = points->size();
  auto index_of = [&](const Label& x) {
    auto it = std::lower_bound(points->begin(), points->end(), x);
    return static_cast<std::size_t>(it - points->begin());
  };
  std::vector<std::string> names;
  std::vector<std::size_t> inv;
  std::vector<std::vector<FiniteMeasure>> table(n, std::vector<FiniteMeasure>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(hg.format_label((*points)[i]));
    inv.push_back(index_of(hg.involution((*points)[i])));
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [z, m] : hg.fuse((*points)[i], (*points)[j])) {
        table[i][j].add(Label(static_cast<Label::Part>(index_of(z))), m);
      }
    }
  }
  return std::make_shared<TableHypergroup>(hg.name(), std::move(names), std::move(inv),
                                           index_of(hg.identity()), std::move(table),
                                           hg.commutative());
}

std::shared_ptr<TableHypergroup> TableHypergroup::with_coefficient(std::size_t x, std::size_t y,
                                                                   std::size_t z,
                                                                   const Rational& mass) const {
  auto table = table_;
  FiniteMeasure& cell = table.at(x).at(y);
  FiniteMeasure replaced;
  const Label zl(static_cast<Label::Part>(z));
  for (const auto& [w, m] : cell) {
    if (w != zl) replaced.add(w, m);
  }
  replaced.add(zl, mass);
  cell = std::move(replaced);
  return std::make_shared<TableHypergroup>(name_ + " (modified)", point_names_, involution_,
                                           static_cast<std::size_t>(identity()[0]),
                                           std::move(table), commutative());
}

bool TableHypergroup::contains(const Label& x) const {
  return x.arity() == 1 && x[0] >= 0 && static_cast<std::size_t>(x[0]) < point_names_.size();
}

Label TableHypergroup::involution(const Label& x) const {
  require(x);
  return Label(static_cast<Label::Part>(involution_[static_cast<std::size_t>(x[0])]));
}

std::optional<std::vector<Label>> TableHypergroup::universe() const {
  std::vector<Label> all;
  for (std::size_t i = 0; i < point_names_.size(); ++i) {
    all.emplace_back(static_cast<Label::Part>(i));
  }
  return all;
}

std::string TableHypergroup::format_label(const Label& x) const {
  if (!contains(x)) return x.debug_string();
  return point_names_[static_cast<std::size_t>(x[0])];
}

Label TableHypergroup::parse_label(std::string_view text) const {
  for (std::size_t i = 0; i < point_names_.size(); ++i) {
    if (point_names_[i] == text) return Label(static_cast<Label::Part>(i));
  }
  return Hypergroup::parse_label(text);
}

FiniteMeasure TableHypergroup::compute_fusion(const Label& x, const Label& y) const {
  return table_[static_cast<std::size_t>(x[0])][static_cast<std::size_t>(y[0])];
}

}  // namespace fusionhg
