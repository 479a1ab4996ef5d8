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

#include "fusionhg/label.hpp"

#include <algorithm>
#include <iterator>

#include "fusionhg/function.hpp"

namespace fusionhg {

Label Label::slice(std::size_t offset, std::size_t count) const {
  return Label(parts().subspan(offset, count));
}

Label& Label::append(const Label& tail) {
  parts_.insert(parts_.end(), tail.parts_.begin(), tail.parts_.end());
  return *this;
}

std::string Label::debug_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::size_t LabelHash::operator()(const Label& label) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ label.arity();
  for (Label::Part p : label.parts()) {
    h ^= std::hash<Label::Part>{}(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LabelSet make_label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return LabelSet(boost::container::ordered_unique_range, labels.begin(), labels.end());
}

bool is_subset(const LabelSet& inner, const LabelSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  std::vector<Label> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return LabelSet(boost::container::ordered_unique_range, out.begin(), out.end());
}

RealFunction to_real(const ExactFunction& f) {
  std::vector<std::pair<Label, double>> entries;
  entries.reserve(f.size());
  for (const auto& [x, v] : f) entries.emplace_back(x, v.get_d());
  return RealFunction::from_sorted(std::move(entries));
}

Rational FiniteMeasure::total() const {
  Rational sum;
  for (const auto& [x, m] : masses_) sum += m;
  return sum;
}

}  // namespace fusionhg
