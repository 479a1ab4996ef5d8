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

#include "fusionhg/hypergroup.hpp"

#include <charconv>
#include <mutex>

#include "fusionhg/error.hpp"

namespace fusionhg {

std::size_t Hypergroup::PairHash::operator()(const std::pair<Label, Label>& p) const noexcept {
  LabelHash h;
  return h(p.first) * 1000003u ^ h(p.second);
}

Label Hypergroup::parse_label(std::string_view text) const {
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Label::Part> parts;
  while (true) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    Label::Part value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      fail(ErrorKind::label_domain, "cannot parse label '" + std::string(text) + "' for " + name());
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  Label label{std::span<const Label::Part>(parts)};
  require(label);
  return label;
}

void Hypergroup::require(const Label& x) const {
  if (!contains(x)) {
    fail(ErrorKind::label_domain, "label " + x.debug_string() + " is not a point of " + name());
  }
}

const FiniteMeasure& Hypergroup::fuse(const Label& x, const Label& y) const {
  auto key = std::make_pair(x, y);
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  require(x);
  require(y);
  FiniteMeasure m = compute_fusion(x, y);
  std::unique_lock lock(cache_mutex_);
  // unordered_map never invalidates references on insert, so handing out
  // references into the cache is safe for concurrent readers.
  auto [it, inserted] = cache_.emplace(std::move(key), std::move(m));
  return it->second;
}

Rational Hypergroup::fusion_coefficient(const Label& x, const Label& y, const Label& z) const {
  return fuse(x, y).mass(z);
}

Rational Hypergroup::haar(const Label& x) const {
  require(x);
  Rational at_identity = fusion_coefficient(involution(x), x, identity_);
  if (sgn(at_identity) <= 0) {
    fail(ErrorKind::axiom_violation,
         "identity is not in supp(delta_~x * delta_x) for x = " + format_label(x));
  }
  return 1 / at_identity;
}

LabelSet Hypergroup::support_product(const LabelSet& a, const LabelSet& b) const {
  std::vector<Label> out;
  for (const Label& x : a) {
    for (const Label& y : b) {
      for (const auto& [z, mass] : fuse(x, y)) out.push_back(z);
    }
  }
  return make_label_set(std::move(out));
}

std::optional<ExactFunction> Hypergroup::indicator_convolution(const LabelSet&,
                                                               const LabelSet&) const {
  return std::nullopt;
}

std::vector<Label> Hypergroup::growth_generators() const {
  std::vector<Label> gens;
  if (auto all = universe()) {
    for (Label& x : *all) {
      if (x != identity_) gens.push_back(std::move(x));
    }
  }
  return gens;
}

}  // namespace fusionhg
