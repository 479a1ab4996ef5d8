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

#ifndef FUSIONHG_HYPERGROUP_HPP_
#define FUSIONHG_HYPERGROUP_HPP_

#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fusionhg/function.hpp"
#include "fusionhg/label.hpp"
#include "fusionhg/rational.hpp"

namespace fusionhg {

// A discrete hypergroup given by its fusion oracle (x, y) -> delta_x * delta_y,
// an involution and an identity. Instances are immutable after construction;
// the fusion cache is internally synchronized, so a const Hypergroup may be
// shared between threads.
//
// Subclasses implement compute_fusion() and may override the virtual queries
// below with closed forms; every override must agree exactly with the generic
// definition in terms of fuse().
class Hypergroup {
 public:
  Hypergroup(Label identity, bool commutative, std::size_t arity)
      : identity_(std::move(identity)), commutative_(commutative), arity_(arity) {}
  virtual ~Hypergroup() = default;

  Hypergroup(const Hypergroup&) = delete;
  Hypergroup& operator=(const Hypergroup&) = delete;

  const Label& identity() const { return identity_; }
  bool commutative() const { return commutative_; }
  // Number of integer components in every label of this hypergroup.
  std::size_t arity() const { return arity_; }

  virtual std::string name() const = 0;
  virtual bool contains(const Label& x) const = 0;
  virtual Label involution(const Label& x) const = 0;
  // All points, sorted, when the hypergroup is finite.
  virtual std::optional<std::vector<Label>> universe() const { return std::nullopt; }

  virtual std::string format_label(const Label& x) const { return x.debug_string(); }
  virtual Label parse_label(std::string_view text) const;

  // delta_x * delta_y. Throws ErrorKind::label_domain for foreign labels.
  const FiniteMeasure& fuse(const Label& x, const Label& y) const;

  // (delta_x * delta_y)({z}).
  virtual Rational fusion_coefficient(const Label& x, const Label& y, const Label& z) const;

  // Haar mass normalized by h(e) = 1: h(x) = 1 / (delta_{~x} * delta_x)({e}).
  Rational haar(const Label& x) const;

  // A * B, the union of supp(delta_x * delta_y) over x in A, y in B.
  virtual LabelSet support_product(const LabelSet& a, const LabelSet& b) const;

  // 1_A *_h ~1_B when a closed form is available; nullopt otherwise.
  virtual std::optional<ExactFunction> indicator_convolution(const LabelSet& a,
                                                             const LabelSet& b) const;

  // Points that, together with the identity, generate the hypergroup under
  // support products. Used to enlarge nested chains of compact sets.
  virtual std::vector<Label> growth_generators() const;

  // Throws ErrorKind::label_domain unless contains(x).
  void require(const Label& x) const;

 protected:
  virtual FiniteMeasure compute_fusion(const Label& x, const Label& y) const = 0;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Label, Label>& p) const noexcept;
  };

  Label identity_;
  bool commutative_;
  std::size_t arity_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<std::pair<Label, Label>, FiniteMeasure, PairHash> cache_;
};

using HypergroupPtr = std::shared_ptr<const Hypergroup>;

}  // namespace fusionhg

#endif  // FUSIONHG_HYPERGROUP_HPP_
