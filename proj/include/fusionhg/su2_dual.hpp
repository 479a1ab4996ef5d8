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

#ifndef FUSIONHG_SU2_DUAL_HPP_
#define FUSIONHG_SU2_DUAL_HPP_

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "fusionhg/hypergroup.hpp"

namespace fusionhg {

// Spin l in {0, 1/2, 1, ...}, stored as the integer n = 2l so that the
// dimension of pi_l is n + 1.
class Spin {
 public:
  constexpr Spin() = default;
  static Spin from_twice(int twice);
  // "3/2", "1.5", "2", ...
  static Spin parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr int dim() const { return twice_ + 1; }
  Rational value() const { return Rational(twice_, 2); }
  std::string to_string() const;

  friend constexpr auto operator<=>(Spin, Spin) = default;

 private:
  constexpr explicit Spin(int twice) : twice_(twice) {}
  int twice_ = 0;
};

// The dual of SU(2): pi_l (x) pi_l' = pi_|l-l'| + ... + pi_(l+l') with
// delta_l * delta_l' = sum_r (2r+1) / ((2l+1)(2l'+1)) delta_r. Self-dual and
// commutative; labels are {n} with n = 2l.
class Su2Dual final : public Hypergroup {
 public:
  Su2Dual();

  static Label label(Spin spin) { return Label(spin.twice()); }
  static Spin spin(const Label& x) { return Spin::from_twice(x[0]); }
  // {pi_l : l <= radius}.
  static LabelSet ball(Spin radius);
  // If `set` is {n : n <= N} returns N.
  static std::optional<int> ball_bound(const LabelSet& set);

  std::string name() const override { return "su2"; }
  bool contains(const Label& x) const override { return x.arity() == 1 && x[0] >= 0; }
  Label involution(const Label& x) const override;
  std::string format_label(const Label& x) const override;
  Label parse_label(std::string_view text) const override;

  Rational fusion_coefficient(const Label& x, const Label& y, const Label& z) const override;

  // Interval arithmetic on runs of consecutive labels; agrees exactly with the
  // pairwise definition.
  LabelSet support_product(const LabelSet& a, const LabelSet& b) const override;

  // Closed form for 1_A *_h ~1_B when A and B are both balls around pi_0.
  std::optional<ExactFunction> indicator_convolution(const LabelSet& a,
                                                     const LabelSet& b) const override;

  std::vector<Label> growth_generators() const override { return {Label(1)}; }

 protected:
  FiniteMeasure compute_fusion(const Label& x, const Label& y) const override;
};

std::shared_ptr<const Su2Dual> su2_dual();

}  // namespace fusionhg

#endif  // FUSIONHG_SU2_DUAL_HPP_
