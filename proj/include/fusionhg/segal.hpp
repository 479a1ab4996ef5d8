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

#ifndef FUSIONHG_SEGAL_HPP_
#define FUSIONHG_SEGAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fusionhg/fourier.hpp"
#include "fusionhg/hypergroup.hpp"
#include "fusionhg/leptin.hpp"

namespace fusionhg {

struct TermNorms {
  // a_bound^2 = h(K_n * V_n) / h(V_n).
  Rational a_bound_squared;
  double a_bound = 0.0;
  // Measured A-norm; empty when the dual has no evaluator.
  std::optional<double> a_value;
  Rational l1_h;
  double p = 2.0;
  double segal_p = 0.0;
  // segal_p^p when p is an integer.
  std::optional<Rational> segal_p_power;
};

struct WitnessOptions {
  LeptinStrategy strategy = LeptinStrategy::interval;
  double p = 2.0;
  QuadratureConfig quadrature;
  GreedyOptions greedy;
  std::size_t exhaustive_cap = kExhaustiveCap;
  unsigned threads = 0;
};

struct WitnessSequence {
  HypergroupPtr hg;
  Rational D;
  std::vector<LabelSet> K_chain;
  std::vector<LabelSet> V_chain;
  std::vector<LeptinCertificate> certificates;
  std::vector<BumpFunction> terms;
  std::vector<TermNorms> norms;
};

// Stage n searches V_n with h(K_n*V_n)/h(V_n) < D^2, builds u_n = bump(K_n, V_n)
// and sets K_{n+1} = (K_n * V_n * ~V_n) * ({e} + growth generators), so that
// u_{n+1} = 1 on supp u_n and the chain keeps growing. Nesting, the adjacent
// chain law and a_bound_n < D are checked exactly; a failed search is
// reported with its stage index.
WitnessSequence build_witness(HypergroupPtr hg, const LabelSet& K0, const Rational& D, int N,
                              const WitnessOptions& options = {});

struct BlowupRow {
  int n = 0;
  std::size_t K_size = 0;
  std::size_t V_size = 0;
  Rational ratio;
  double a_bound = 0.0;
  std::optional<double> a_value;
  double segal_p = 0.0;
  // h(K_n)^(1/p) and h(K_n).
  double lower_bound = 0.0;
  Rational haar_K;
  bool lower_bound_holds = false;
};

struct BlowupReport {
  double p = 2.0;
  std::vector<BlowupRow> rows;
  // segal_p(u_N) / segal_p(u_1).
  double growth_factor = 1.0;
  // h(K_N)^(1/p) / segal_p(u_1).
  double certified_growth = 1.0;
  bool lower_bound_law = true;
};

// Uses the stored Segal norms when p matches, otherwise recomputes them. The
// lower-bound law is checked on exact p-th powers when p is an integer.
BlowupReport blowup_report(const WitnessSequence& w, double p);

struct MultiplierCheck {
  bool products_ok = true;
  // "n,m: label" for each failing pair.
  std::vector<std::string> product_failures;
  bool bound_ok = true;
  double max_a_value = 0.0;
  double limit = 0.0;
  std::vector<int> missing_a_values;

  bool ok() const { return products_ok && bound_ok; }
};

// u_n u_m = u_n for all n < m, exactly; max a_value <= D + tolerance.
MultiplierCheck check_multiplier_bounded(const WitnessSequence& w, double tolerance = 1e-6);

}  // namespace fusionhg

#endif  // FUSIONHG_SEGAL_HPP_
