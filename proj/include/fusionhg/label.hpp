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

#ifndef FUSIONHG_LABEL_HPP_
#define FUSIONHG_LABEL_HPP_

#include <boost/container/flat_set.hpp>
#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fusionhg {

// Name of a point of a discrete hypergroup. A label is a short tuple of
// integers whose meaning is owned by the hypergroup family: twice the spin
// for the SU(2) dual, an irrep index for finite duals, and the concatenation
// of factor labels for products. Labels compare lexicographically; that order
// breaks every tie in the library.
class Label {
 public:
  using Part = std::int32_t;

  Label() = default;
  explicit Label(Part part) : parts_{part} {}
  Label(std::initializer_list<Part> parts) : parts_(parts) {}
  explicit Label(std::span<const Part> parts) : parts_(parts.begin(), parts.end()) {}

  std::size_t arity() const { return parts_.size(); }
  Part operator[](std::size_t i) const { return parts_[i]; }
  std::span<const Part> parts() const { return {parts_.data(), parts_.size()}; }

  // Components [offset, offset + count).
  Label slice(std::size_t offset, std::size_t count) const;
  Label& append(const Label& tail);

  friend bool operator==(const Label& a, const Label& b) {
    return std::equal(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
  }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
  }

  // Debug form "(p0,p1,...)"; hypergroups provide the presentation form.
  std::string debug_string() const;

 private:
  boost::container::small_vector<Part, 3> parts_;
};

struct LabelHash {
  std::size_t operator()(const Label& label) const noexcept;
};

using LabelSet = boost::container::flat_set<Label>;

LabelSet make_label_set(std::vector<Label> labels);
bool is_subset(const LabelSet& inner, const LabelSet& outer);
LabelSet set_union(const LabelSet& a, const LabelSet& b);

}  // namespace fusionhg

#endif  // FUSIONHG_LABEL_HPP_
