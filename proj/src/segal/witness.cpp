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

#include <cmath>

#include "fusionhg/core.hpp"
#include "fusionhg/error.hpp"
#include "fusionhg/parallel.hpp"
#include "fusionhg/segal.hpp"

namespace fusionhg {

namespace {

LeptinCertificate stage_search(const Hypergroup& hg, const LabelSet& K, const Rational& epsilon,
                               const WitnessOptions& options) {
  switch (options.strategy) {
    case LeptinStrategy::interval: {
      if (dynamic_cast<const Su2Dual*>(&hg) == nullptr) {
        fail(ErrorKind::usage, "interval search needs the SU(2) dual");
      }
      auto bound = Su2Dual::ball_bound(K);
      if (!bound) fail(ErrorKind::usage, "interval search needs K to be a ball around pi_0");
      return leptin_search_interval(Spin::from_twice(*bound), epsilon);
    }
    case LeptinStrategy::greedy: {
      auto cert = leptin_search_greedy(hg, K, epsilon, options.greedy);
      if (!cert) {
        fail(ErrorKind::capacity, "greedy search found no V within " +
                                      std::to_string(options.greedy.max_size) + " points");
      }
      return *cert;
    }
    case LeptinStrategy::exhaustive: {
      auto cert = leptin_search_exhaustive(hg, K, epsilon, options.exhaustive_cap, options.threads);
      if (!satisfied(cert)) {
        fail(ErrorKind::capacity, "no V reaches ratio below 1 + " + to_string(epsilon) +
                                      " (best " + to_string(cert.ratio) + ")");
      }
      return cert;
    }
    case LeptinStrategy::product:
      break;
  }
  fail(ErrorKind::usage, "the product strategy combines certificates and cannot drive a witness");
}

TermNorms term_norms(const Hypergroup& hg, const BumpFunction& b, const WitnessOptions& options) {
  TermNorms t;
  t.a_bound_squared = b.bound_squared;
  t.a_bound = b.a_norm_bound();
  try {
    t.a_value = a_norm_bump(hg, b, options.quadrature);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::usage) throw;
  }
  t.l1_h = *lp_h_norm(hg, b.u, 1).exact;
  t.p = options.p;
  const NormValue s = segal_cp_norm_central(hg, b.u, options.p);
  t.segal_p = s.value;
  t.segal_p_power = s.exact_power;
  return t;
}

}  // namespace

WitnessSequence build_witness(HypergroupPtr hg, const LabelSet& K0, const Rational& D, int N,
                              const WitnessOptions& options) {
  if (!hg) fail(ErrorKind::usage, "null hypergroup");
  if (D <= 1) fail(ErrorKind::usage, "D must exceed 1, got " + to_string(D));
  if (N < 1) fail(ErrorKind::usage, "N must be positive");
  if (K0.empty()) fail(ErrorKind::usage, "K0 must be nonempty");
  if (options.p < 1 || options.p > 2) fail(ErrorKind::usage, "p must lie in [1, 2]");
  options.quadrature.validate();

  WitnessSequence w;
  w.hg = hg;
  w.D = D;
  const Rational epsilon = D * D - 1;
  LabelSet growth{hg->identity()};
  for (const Label& g : hg->growth_generators()) growth.insert(g);

  LabelSet K = K0;
  for (int n = 1; n <= N; ++n) {
    try {
      LeptinCertificate cert = stage_search(*hg, K, epsilon, options);
      if (!(cert.ratio < D * D)) {
        fail(ErrorKind::internal_invariant, "search returned ratio " + to_string(cert.ratio));
      }
      BumpFunction b = bump(*hg, K, cert.V);
      if (!w.terms.empty()) {
        const BumpFunction& prev = w.terms.back();
        for (const auto& [x, v] : prev.u) {
          if (!K.contains(x)) {
            fail(ErrorKind::internal_invariant, "K is not nested at " + hg->format_label(x));
          }
        }
        if (pointwise(prev.u, b.u) != prev.u) {
          fail(ErrorKind::internal_invariant, "chain law u_{n-1} u_n = u_{n-1} fails");
        }
      }
      w.K_chain.push_back(K);
      w.V_chain.push_back(cert.V);
      w.certificates.push_back(std::move(cert));
      K = support_product(*hg, b.KVV, growth);
      w.terms.push_back(std::move(b));
    } catch (const NumericError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.kind(), "stage " + std::to_string(n) + ": " + e.what());
    }
  }

  w.norms.resize(w.terms.size());
  const unsigned threads = options.threads ? options.threads : default_threads();
  parallel_for_blocks(w.terms.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) w.norms[i] = term_norms(*hg, w.terms[i], options);
  });
  return w;
}

BlowupReport blowup_report(const WitnessSequence& w, double p) {
  if (std::isnan(p) || p < 1 || p > 2) fail(ErrorKind::usage, "p must lie in [1, 2]");
  BlowupReport r;
  r.p = p;
  const bool integral = p == std::floor(p);
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    const BumpFunction& b = w.terms[i];
    BlowupRow row;
    row.n = static_cast<int>(i + 1);
    row.K_size = w.K_chain[i].size();
    row.V_size = w.V_chain[i].size();
    row.ratio = w.norms[i].a_bound_squared;
    row.a_bound = w.norms[i].a_bound;
    row.a_value = w.norms[i].a_value;
    double segal = w.norms[i].segal_p;
    std::optional<Rational> power = w.norms[i].segal_p_power;
    if (w.norms[i].p != p) {
      const NormValue s = segal_cp_norm_central(*w.hg, b.u, p);
      segal = s.value;
      power = s.exact_power;
    }
    row.segal_p = segal;
    row.haar_K = haar_mass(*w.hg, w.K_chain[i]);
    row.lower_bound = std::pow(to_double(row.haar_K), 1.0 / p);
    if (integral && power) {
      row.lower_bound_holds = *power >= row.haar_K;
    } else {
      row.lower_bound_holds = segal >= row.lower_bound * (1 - 1e-12);
    }
    r.lower_bound_law = r.lower_bound_law && row.lower_bound_holds;
    r.rows.push_back(std::move(row));
  }
  if (!r.rows.empty()) {
    r.growth_factor = r.rows.back().segal_p / r.rows.front().segal_p;
    r.certified_growth = r.rows.back().lower_bound / r.rows.front().segal_p;
  }
  return r;
}

MultiplierCheck check_multiplier_bounded(const WitnessSequence& w, double tolerance) {
  MultiplierCheck c;
  c.limit = to_double(w.D) + tolerance;
  for (std::size_t n = 0; n < w.terms.size(); ++n) {
    const ExactFunction& un = w.terms[n].u;
    for (std::size_t m = n + 1; m < w.terms.size(); ++m) {
      const ExactFunction& um = w.terms[m].u;
      for (const auto& [x, v] : un) {
        if (um(x) != 1) {
          c.products_ok = false;
          c.product_failures.push_back(std::to_string(n + 1) + "," + std::to_string(m + 1) +
                                       ": " + w.hg->format_label(x));
          break;
        }
      }
    }
    if (n < w.norms.size() && w.norms[n].a_value) {
      c.max_a_value = std::max(c.max_a_value, *w.norms[n].a_value);
    } else {
      c.missing_a_values.push_back(static_cast<int>(n + 1));
    }
  }
  c.bound_ok = c.max_a_value <= c.limit && c.missing_a_values.empty();
  return c;
}

}  // namespace fusionhg
