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

#include "fusionhg/product_dual.hpp"

#include "fusionhg/error.hpp"

namespace fusionhg {

namespace {

Label identity_of(const std::vector<HypergroupPtr>& factors) {
  if (factors.empty()) fail(ErrorKind::usage, "a product needs at least one factor");
  Label e;
  for (const auto& f : factors) {
    if (!f) fail(ErrorKind::usage, "null factor in product");
    e.append(f->identity());
  }
  return e;
}

bool all_commutative(const std::vector<HypergroupPtr>& factors) {
  for (const auto& f : factors) {
    if (!f->commutative()) return false;
  }
  return true;
}

std::size_t total_arity(const std::vector<HypergroupPtr>& factors) {
  std::size_t n = 0;
  for (const auto& f : factors) n += f->arity();
  return n;
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == separator && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  for (auto& s : out) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
  }
  return out;
}

ProductDual::ProductDual(std::vector<HypergroupPtr> factors)
    : Hypergroup(identity_of(factors), all_commutative(factors), total_arity(factors)),
      factors_(std::move(factors)) {
  std::size_t offset = 0;
  for (const auto& f : factors_) {
    offsets_.push_back(offset);
    offset += f->arity();
  }
}

std::vector<Label> ProductDual::split(const Label& x) const {
  if (x.arity() != arity()) {
    fail(ErrorKind::label_domain, "label " + x.debug_string() + " has the wrong arity for " + name());
  }
  std::vector<Label> parts;
  parts.reserve(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    parts.push_back(x.slice(offsets_[i], factors_[i]->arity()));
  }
  return parts;
}

Label ProductDual::join(const std::vector<Label>& components) const {
  if (components.size() != factors_.size()) fail(ErrorKind::usage, "component count mismatch");
  Label x;
  for (const Label& c : components) x.append(c);
  return x;
}

LabelSet ProductDual::cartesian(const std::vector<LabelSet>& sets) const {
  if (sets.size() != factors_.size()) fail(ErrorKind::usage, "one set per factor required");
  std::vector<Label> acc{Label()};
  for (const LabelSet& s : sets) {
    std::vector<Label> next;
    next.reserve(acc.size() * s.size());
    for (const Label& prefix : acc) {
      for (const Label& x : s) {
        Label joined = prefix;
        next.push_back(joined.append(x));
      }
    }
    acc = std::move(next);
  }
  return make_label_set(std::move(acc));
}

std::string ProductDual::name() const {
  std::string n;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) n += "*";
    n += factors_[i]->name();
  }
  return n;
}

bool ProductDual::contains(const Label& x) const {
  if (x.arity() != arity()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i]->contains(x.slice(offsets_[i], factors_[i]->arity()))) return false;
  }
  return true;
}

Label ProductDual::involution(const Label& x) const {
  require(x);
  Label out;
  auto parts = split(x);
  for (std::size_t i = 0; i < factors_.size(); ++i) out.append(factors_[i]->involution(parts[i]));
  return out;
}

std::optional<std::vector<Label>> ProductDual::universe() const {
  std::vector<LabelSet> sets;
  for (const auto& f : factors_) {
    auto u = f->universe();
    if (!u) return std::nullopt;
    sets.push_back(make_label_set(std::move(*u)));
  }
  LabelSet all = cartesian(sets);
  return std::vector<Label>(all.begin(), all.end());
}

std::string ProductDual::format_label(const Label& x) const {
  if (!contains(x)) return x.debug_string();
  auto parts = split(x);
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += factors_[i]->format_label(parts[i]);
  }
  return s + ")";
}

Label ProductDual::parse_label(std::string_view text) const {
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  auto items = split_top_level(body);
  if (items.size() != factors_.size()) {
    fail(ErrorKind::label_domain, "expected " + std::to_string(factors_.size()) +
                                      " components in label '" + std::string(text) + "'");
  }
  Label x;
  for (std::size_t i = 0; i < items.size(); ++i) x.append(factors_[i]->parse_label(items[i]));
  return x;
}

Rational ProductDual::fusion_coefficient(const Label& x, const Label& y, const Label& z) const {
  auto xs = split(x);
  auto ys = split(y);
  auto zs = split(z);
  Rational c = 1;
  for (std::size_t i = 0; i < factors_.size() && sgn(c) != 0; ++i) {
    c *= factors_[i]->fusion_coefficient(xs[i], ys[i], zs[i]);
  }
  return c;
}

FiniteMeasure ProductDual::compute_fusion(const Label& x, const Label& y) const {
  auto xs = split(x);
  auto ys = split(y);
  std::vector<std::pair<Label, Rational>> acc{{Label(), Rational(1)}};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::vector<std::pair<Label, Rational>> next;
    for (const auto& [prefix, mass] : acc) {
      for (const auto& [z, c] : factors_[i]->fuse(xs[i], ys[i])) {
        Label joined = prefix;
        joined.append(z);
        next.emplace_back(std::move(joined), mass * c);
      }
    }
    acc = std::move(next);
  }
  FiniteMeasure m;
  for (const auto& [z, mass] : acc) m.add(z, mass);
  return m;
}

std::vector<Label> ProductDual::growth_generators() const {
  std::vector<Label> gens;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (const Label& g : factors_[i]->growth_generators()) {
      Label x;
      for (std::size_t j = 0; j < factors_.size(); ++j) x.append(j == i ? g : factors_[j]->identity());
      gens.push_back(std::move(x));
    }
  }
  return gens;
}

std::shared_ptr<const ProductDual> product_dual(std::vector<HypergroupPtr> factors) {
  return std::make_shared<const ProductDual>(std::move(factors));
}

}  // namespace fusionhg
