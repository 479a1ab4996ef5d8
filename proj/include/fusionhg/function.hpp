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

#ifndef FUSIONHG_FUNCTION_HPP_
#define FUSIONHG_FUNCTION_HPP_

#include <boost/container/flat_map.hpp>

#include <utility>
#include <vector>

#include "fusionhg/error.hpp"
#include "fusionhg/label.hpp"
#include "fusionhg/rational.hpp"

namespace fusionhg {

// Finitely supported function on hypergroup labels. The support is exactly
// the set of nonzero entries: writes of zero erase. `Scalar` selects the
// arithmetic lane; Rational is the exact lane and double the numeric lane.
// Mixing lanes is a compile-time error.
template <class Scalar>
class FiniteFunction {
 public:
  using Storage = boost::container::flat_map<Label, Scalar>;
  using const_iterator = typename Storage::const_iterator;

  FiniteFunction() = default;

  static FiniteFunction delta(const Label& x, Scalar value = Scalar(1)) {
    FiniteFunction f;
    f.set(x, std::move(value));
    return f;
  }

  static FiniteFunction indicator(const LabelSet& set) {
    std::vector<std::pair<Label, Scalar>> entries;
    entries.reserve(set.size());
    for (const Label& x : set) entries.emplace_back(x, Scalar(1));
    return from_sorted(std::move(entries));
  }

  // `entries` must be strictly increasing in label. Zero values are dropped.
  static FiniteFunction from_sorted(std::vector<std::pair<Label, Scalar>> entries) {
    std::erase_if(entries, [](const auto& e) { return e.second == Scalar(0); });
    FiniteFunction f;
    f.values_ = Storage(boost::container::ordered_unique_range,
                        std::make_move_iterator(entries.begin()),
                        std::make_move_iterator(entries.end()));
    return f;
  }

  Scalar operator()(const Label& x) const {
    auto it = values_.find(x);
    return it == values_.end() ? Scalar(0) : it->second;
  }

  bool contains(const Label& x) const { return values_.contains(x); }

  void set(const Label& x, Scalar value) {
    if (value == Scalar(0)) {
      values_.erase(x);
    } else {
      values_.insert_or_assign(x, std::move(value));
    }
  }

  void add(const Label& x, const Scalar& delta) {
    auto it = values_.find(x);
    if (it == values_.end()) {
      if (delta != Scalar(0)) values_.emplace(x, delta);
      return;
    }
    it->second += delta;
    if (it->second == Scalar(0)) values_.erase(it);
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const_iterator begin() const { return values_.begin(); }
  const_iterator end() const { return values_.end(); }

  LabelSet support() const {
    LabelSet s;
    s.reserve(values_.size());
    for (const auto& [x, v] : values_) s.insert(s.end(), x);
    return s;
  }

  FiniteFunction& operator+=(const FiniteFunction& other) {
    for (const auto& [x, v] : other) add(x, v);
    return *this;
  }
  FiniteFunction& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      values_.clear();
    } else {
      for (auto& entry : values_) entry.second *= s;
    }
    return *this;
  }
  friend FiniteFunction operator+(FiniteFunction a, const FiniteFunction& b) { return a += b; }
  friend FiniteFunction operator*(const Scalar& s, FiniteFunction f) { return f *= s; }

  // Pointwise product.
  friend FiniteFunction pointwise(const FiniteFunction& a, const FiniteFunction& b) {
    std::vector<std::pair<Label, Scalar>> entries;
    for (const auto& [x, v] : a) {
      auto it = b.values_.find(x);
      if (it != b.values_.end()) entries.emplace_back(x, v * it->second);
    }
    return from_sorted(std::move(entries));
  }

  friend bool operator==(const FiniteFunction& a, const FiniteFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  Storage values_;
};

using ExactFunction = FiniteFunction<Rational>;
using RealFunction = FiniteFunction<double>;

RealFunction to_real(const ExactFunction& f);

// Finitely supported nonnegative measure; the result type of point fusion.
class FiniteMeasure {
 public:
  FiniteMeasure() = default;

  static FiniteMeasure point(const Label& x) {
    FiniteMeasure m;
    m.masses_.set(x, Rational(1));
    return m;
  }

  // Negative masses are an internal-invariant error; zero masses are pruned.
  void add(const Label& x, const Rational& mass) {
    if (sgn(mass) < 0) {
      fail(ErrorKind::internal_invariant, "negative mass at " + x.debug_string());
    }
    masses_.add(x, mass);
  }

  Rational mass(const Label& x) const { return masses_(x); }
  Rational total() const;
  std::size_t size() const { return masses_.size(); }
  auto begin() const { return masses_.begin(); }
  auto end() const { return masses_.end(); }
  LabelSet support() const { return masses_.support(); }
  const ExactFunction& as_function() const { return masses_; }

  friend bool operator==(const FiniteMeasure& a, const FiniteMeasure& b) {
    return a.masses_ == b.masses_;
  }

 private:
  ExactFunction masses_;
};

}  // namespace fusionhg

#endif  // FUSIONHG_FUNCTION_HPP_
