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

#include "fusionhg/leptin.hpp"

#include "fusionhg/core.hpp"
#include "fusionhg/error.hpp"

namespace fusionhg {

namespace {

// 1^2 + 2^2 + ... + n^2.
Integer square_sum(const Integer& n) { return n * (n + 1) * (2 * n + 1) / 6; }

// su2_interval_ratio(k, m) < 1 + epsilon, without building the rational.
bool interval_ratio_below(int k2, int m2, const Rational& bound) {
  const Integer num = square_sum(Integer(m2) + k2 + 1);
  const Integer den = square_sum(Integer(m2) + 1);
  return Integer(num * bound.get_den()) < Integer(den * bound.get_num());
}

}  // namespace

std::string_view to_string(LeptinStrategy strategy) {
  switch (strategy) {
    case LeptinStrategy::interval:
      return "interval";
    case LeptinStrategy::greedy:
      return "greedy";
    case LeptinStrategy::exhaustive:
      return "exhaustive";
    case LeptinStrategy::product:
      return "product";
  }
  return "?";
}

LeptinStrategy parse_strategy(std::string_view text) {
  for (auto s : {LeptinStrategy::interval, LeptinStrategy::greedy, LeptinStrategy::exhaustive,
                 LeptinStrategy::product}) {
    if (text == to_string(s)) return s;
  }
  fail(ErrorKind::usage, "unknown strategy '" + std::string(text) + "'");
}

Rational leptin_ratio(const Hypergroup& hg, const LabelSet& K, const LabelSet& V) {
  if (V.empty()) fail(ErrorKind::usage, "leptin ratio needs a nonempty V");
  if (K.empty()) fail(ErrorKind::usage, "leptin ratio needs a nonempty K");
  return haar_mass(hg, support_product(hg, K, V)) / haar_mass(hg, V);
}

Rational su2_interval_ratio(Spin k, Spin m) {
  if (m < k) {
    fail(ErrorKind::usage, "interval ratio needs m >= k, got k = " + k.to_string() +
                               ", m = " + m.to_string());
  }
  Rational r(square_sum(Integer(m.twice()) + k.twice() + 1), square_sum(Integer(m.twice()) + 1));
  r.canonicalize();
  return r;
}

LeptinCertificate leptin_search_interval(Spin k, const Rational& epsilon) {
  if (sgn(epsilon) <= 0) fail(ErrorKind::usage, "epsilon must be positive");
  const Rational bound = 1 + epsilon;
  // The ratio is nonincreasing in m: bracket by doubling, then bisect.
  int lo = k.twice();
  if (!interval_ratio_below(k.twice(), lo, bound)) {
    long step = 1;
    long hi = lo + step;
    while (!interval_ratio_below(k.twice(), static_cast<int>(hi), bound)) {
      lo = static_cast<int>(hi);
      step *= 2;
      hi = lo + step;
      if (hi > (1L << 30)) fail(ErrorKind::capacity, "interval search exceeded the label range");
    }
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      if (interval_ratio_below(k.twice(), static_cast<int>(mid), bound)) {
        hi = mid;
      } else {
        lo = static_cast<int>(mid);
      }
    }
    lo = static_cast<int>(hi);
  }
  const Spin m = Spin::from_twice(lo);
  LeptinCertificate cert{Su2Dual::ball(k), Su2Dual::ball(m), su2_interval_ratio(k, m), epsilon,
                         LeptinStrategy::interval};
  if (leptin_ratio(*su2_dual(), cert.K, cert.V) != cert.ratio) {
    fail(ErrorKind::internal_invariant,
         "closed-form interval ratio disagrees with enumeration at m = " + m.to_string());
  }
  return cert;
}

std::optional<LeptinCertificate> leptin_search_greedy(const Hypergroup& hg, const LabelSet& K,
                                                      const Rational& epsilon,
                                                      GreedyOptions options) {
  if (sgn(epsilon) <= 0) fail(ErrorKind::usage, "epsilon must be positive");
  if (K.empty()) fail(ErrorKind::usage, "greedy search needs a nonempty K");
  const Rational bound = 1 + epsilon;
  LabelSet V{hg.identity()};
  Rational ratio = leptin_ratio(hg, K, V);
  while (true) {
    if (ratio < bound) return LeptinCertificate{K, V, ratio, epsilon, LeptinStrategy::greedy};
    if (V.size() >= options.max_size) return std::nullopt;
    LabelSet pool = set_union(support_product(hg, K, V), support_product(hg, V, V));
    std::optional<Label> best;
    Rational best_ratio;
    std::size_t examined = 0;
    for (const Label& c : pool) {
      if (V.contains(c)) continue;
      if (examined++ == options.pool_limit) break;
      LabelSet trial = V;
      trial.insert(c);
      Rational r = leptin_ratio(hg, K, trial);
      if (!best || r < best_ratio) {
        best = c;
        best_ratio = std::move(r);
      }
    }
    if (!best) return std::nullopt;
    V.insert(*best);
    ratio = std::move(best_ratio);
  }
}

bool satisfied(const LeptinCertificate& cert) { return cert.ratio < 1 + cert.epsilon; }

bool verify_certificate(const Hypergroup& hg, const LeptinCertificate& cert) {
  return leptin_ratio(hg, cert.K, cert.V) == cert.ratio && satisfied(cert);
}

LeptinCertificate leptin_product(const ProductDual& product,
                                 const std::vector<LeptinCertificate>& certs) {
  if (certs.size() != product.num_factors()) {
    fail(ErrorKind::usage, "expected " + std::to_string(product.num_factors()) +
                               " factor certificates, got " + std::to_string(certs.size()));
  }
  std::vector<LabelSet> ks;
  std::vector<LabelSet> vs;
  Rational ratio_bound = 1;
  Rational eps_plus_one = 1;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    for (const LabelSet* s : {&certs[i].K, &certs[i].V}) {
      for (const Label& x : *s) {
        if (!product.factor(i).contains(x)) {
          fail(ErrorKind::usage, "certificate " + std::to_string(i) + " has label " +
                                     x.debug_string() + " outside factor " +
                                     product.factor(i).name());
        }
      }
    }
    ks.push_back(certs[i].K);
    vs.push_back(certs[i].V);
    ratio_bound *= certs[i].ratio;
    eps_plus_one *= 1 + certs[i].epsilon;
  }
  LeptinCertificate cert;
  cert.K = product.cartesian(ks);
  cert.V = product.cartesian(vs);
  cert.ratio = leptin_ratio(product, cert.K, cert.V);
  cert.epsilon = eps_plus_one - 1;
  cert.strategy = certs.size() == 1 ? certs[0].strategy : LeptinStrategy::product;
  if (cert.ratio > ratio_bound) {
    fail(ErrorKind::internal_invariant, "product ratio " + to_string(cert.ratio) +
                                            " exceeds the product of factor ratios " +
                                            to_string(ratio_bound));
  }
  return cert;
}

}  // namespace fusionhg
