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

#include "fusionhg/su2_dual.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "fusionhg/error.hpp"

namespace fusionhg {

Spin Spin::from_twice(int twice) {
  if (twice < 0) fail(ErrorKind::label_domain, "negative spin");
  return Spin(twice);
}

Spin Spin::parse(std::string_view text) {
  Rational l = parse_rational(text);
  Rational twice = 2 * l;
  if (twice.get_den() != 1 || sgn(twice) < 0 || twice > Rational(1 << 30)) {
    fail(ErrorKind::label_domain, "not a spin in {0, 1/2, 1, ...}: '" + std::string(text) + "'");
  }
  return Spin(static_cast<int>(twice.get_num().get_si()));
}

std::string Spin::to_string() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Su2Dual::Su2Dual() : Hypergroup(Label(0), /*commutative=*/true, 1) {}

LabelSet Su2Dual::ball(Spin radius) {
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(radius.twice()) + 1);
  for (int n = 0; n <= radius.twice(); ++n) labels.emplace_back(n);
  return LabelSet(boost::container::ordered_unique_range, labels.begin(), labels.end());
}

std::optional<int> Su2Dual::ball_bound(const LabelSet& set) {
  if (set.empty() || set.begin()->arity() != 1 || (*set.begin())[0] != 0) return std::nullopt;
  const Label& last = *set.rbegin();
  if (last.arity() != 1 || static_cast<std::size_t>(last[0]) + 1 != set.size()) return std::nullopt;
  return last[0];
}

Label Su2Dual::involution(const Label& x) const {
  require(x);
  return x;
}

std::string Su2Dual::format_label(const Label& x) const {
  if (!contains(x)) return x.debug_string();
  return spin(x).to_string();
}

Label Su2Dual::parse_label(std::string_view text) const { return label(Spin::parse(text)); }

FiniteMeasure Su2Dual::compute_fusion(const Label& x, const Label& y) const {
  const int a = x[0];
  const int b = y[0];
  const Rational denom = Rational(a + 1) * (b + 1);
  FiniteMeasure m;
  for (int r = std::abs(a - b); r <= a + b; r += 2) m.add(Label(r), Rational(r + 1) / denom);
  return m;
}

Rational Su2Dual::fusion_coefficient(const Label& x, const Label& y, const Label& z) const {
  require(x);
  require(y);
  require(z);
  const long a = x[0], b = y[0], r = z[0];
  if (r < std::labs(a - b) || r > a + b || (a + b - r) % 2 != 0) return 0;
  return Rational(r + 1) / (Rational(a + 1) * (b + 1));
}

namespace {

struct Run {
  int lo;
  int hi;
};

std::vector<Run> runs_of(const LabelSet& set) {
  std::vector<Run> runs;
  for (const Label& x : set) {
    int n = x[0];
    if (!runs.empty() && runs.back().hi + 1 == n) {
      runs.back().hi = n;
    } else {
      runs.push_back({n, n});
    }
  }
  return runs;
}

}  // namespace

LabelSet Su2Dual::support_product(const LabelSet& a, const LabelSet& b) const {
  if (a.empty() || b.empty()) return {};
  const auto ra = runs_of(a);
  const auto rb = runs_of(b);
  const int top = ra.back().hi + rb.back().hi;
  // Coverage of full intervals, and of step-2 progressions split by parity.
  std::vector<int> dense(static_cast<std::size_t>(top) + 2, 0);
  std::array<std::vector<int>, 2> sparse{std::vector<int>(static_cast<std::size_t>(top) / 2 + 2, 0),
                                         std::vector<int>(static_cast<std::size_t>(top) / 2 + 2, 0)};
  for (const Run& x : ra) {
    for (const Run& y : rb) {
      const int hi = x.hi + y.hi;
      if (x.lo == x.hi && y.lo == y.hi) {
        // Single points: |x-y|, |x-y|+2, ..., x+y.
        const int lo = std::abs(x.lo - y.lo);
        auto& diff = sparse[static_cast<std::size_t>(lo % 2)];
        diff[static_cast<std::size_t>(lo / 2)] += 1;
        diff[static_cast<std::size_t>(hi / 2) + 1] -= 1;
      } else {
        // With two consecutive labels on one side both parities occur, and
        // the union is every integer from the gap between the runs to x+y.
        int gap = 0;
        if (x.lo > y.hi) gap = x.lo - y.hi;
        if (y.lo > x.hi) gap = y.lo - x.hi;
        dense[static_cast<std::size_t>(gap)] += 1;
        dense[static_cast<std::size_t>(hi) + 1] -= 1;
      }
    }
  }
  for (auto& diff : sparse) {
    int running = 0;
    for (int& d : diff) d = (running += d);
  }
  std::vector<Label> out;
  int dense_count = 0;
  for (int z = 0; z <= top; ++z) {
    dense_count += dense[static_cast<std::size_t>(z)];
    if (dense_count > 0 || sparse[static_cast<std::size_t>(z % 2)][static_cast<std::size_t>(z / 2)] > 0) {
      out.emplace_back(z);
    }
  }
  return LabelSet(boost::container::ordered_unique_range, out.begin(), out.end());
}

namespace {

Integer to_integer(Int128 v) {
  const bool negative = v < 0;
  UInt128 u = negative ? static_cast<UInt128>(-v) : static_cast<UInt128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & ~0UL));
  Integer r = (hi << 64) + lo;
  return negative ? Integer(-r) : r;
}

Integer to_integer(const Integer& v) { return v; }

// 1 + 4 + ... + n^2.
template <class Int>
Int square_sum(Int n) {
  return n * (n + 1) * (2 * n + 1) / 6;
}

template <class Int>
Int choose(Int s, int k) {
  switch (k) {
    case 1: return s;
    case 2: return s * (s - 1) / 2;
    case 3: return s * (s - 1) * (s - 2) / 6;
    default: return s * (s - 1) * (s - 2) * (s - 3) / 24;
  }
}

// Closed form of (1_A *_h 1_B)(z) * d_z for A = {n <= c}, B = {n <= b}:
//   sum_{y in B} d_y * sum_{x in A, x in z (x) y} d_x.
// Full terms (z + y <= c) sum to d_z d_y^2. Partial terms, for y of a fixed
// parity on one side of z, are a cubic polynomial in y and are summed through
// Newton forward differences: sum_{s<S} Q(s) = sum_j (Delta^j Q)(0) C(S, j+1).
template <class Int>
class BallConvolution {
 public:
  BallConvolution(Int c, Int b) : c_(c), b_(b) {}

  Int weighted_count(Int z) const {
    Int total = 0;
    if (z <= c_) total += (z + 1) * square_sum<Int>(std::min(b_, Int(c_ - z)) + 1);
    const Int y_start = z <= c_ ? Int(c_ - z + 1) : Int(0);
    if (y_start > b_) return total;
    for (int q = 0; q < 2; ++q) {
      const Int hi = Int((c_ - z - q) % 2) == 0 ? c_ : Int(c_ - 1);
      if (hi < 0) continue;
      const Int lo_y = std::max(y_start, Int(z - hi));
      const Int hi_y = std::min(b_, Int(z + hi));
      total += progression(z, hi, q, lo_y, std::min(hi_y, Int(z - 1)), /*below=*/true);
      total += progression(z, hi, q, std::max(lo_y, z), hi_y, /*below=*/false);
    }
    return total;
  }

 private:
  Int progression(Int z, Int hi, int q, Int first, Int last, bool below) const {
    if (first < 0) first = 0;
    if (Int(((first % 2) + 2) % 2) != q) first += 1;
    if (last < first) return 0;
    const Int count = (last - first) / 2 + 1;
    auto term = [&](Int s) -> Int {
      const Int y = first + 2 * s;
      const Int lo = below ? z - y : y - z;
      const Int t = (hi - lo) / 2 + 1;
      return (y + 1) * t * ((lo + hi + 2) / 2);
    };
    std::array<Int, 4> d{term(0), term(1), term(2), term(3)};
    Int sum = 0;
    for (int j = 0; j < 4; ++j) {
      sum += d[0] * choose<Int>(count, j + 1);
      for (int i = 0; i + 1 < 4 - j; ++i) d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i) + 1] - d[static_cast<std::size_t>(i)];
    }
    return sum;
  }

  Int c_;
  Int b_;
};

template <class Int>
ExactFunction ball_convolution(int c, int b) {
  BallConvolution<Int> conv{Int(c), Int(b)};
  std::vector<std::pair<Label, Rational>> entries;
  entries.reserve(static_cast<std::size_t>(c) + static_cast<std::size_t>(b) + 1);
  for (int z = 0; z <= c + b; ++z) {
    Rational value(to_integer(conv.weighted_count(Int(z))), Integer(z + 1));
    value.canonicalize();
    entries.emplace_back(Label(z), std::move(value));
  }
  return ExactFunction::from_sorted(std::move(entries));
}

}  // namespace

std::optional<ExactFunction> Su2Dual::indicator_convolution(const LabelSet& a,
                                                            const LabelSet& b) const {
  auto c = ball_bound(a);
  auto m = ball_bound(b);
  if (!c || !m) return std::nullopt;
  // 128-bit integers cover every intermediate while c + b stays below 2^22.
  if (*c + *m < (1 << 22)) return ball_convolution<Int128>(*c, *m);
  return ball_convolution<Integer>(*c, *m);
}

std::shared_ptr<const Su2Dual> su2_dual() {
  static const auto instance = std::make_shared<const Su2Dual>();
  return instance;
}

}  // namespace fusionhg
