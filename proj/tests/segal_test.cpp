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

#include <catch_amalgamated.hpp>

#include "fusionhg/core.hpp"
#include "fusionhg/finite_dual.hpp"
#include "fusionhg/segal.hpp"
#include "fusionhg/su2_dual.hpp"
#include "oracles.hpp"

using namespace fusionhg;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

std::string message_of(const std::function<void()>& fn, ErrorKind* kind = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (kind) *kind = e.kind();
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("su2 witness invariants", "[segal]") {
  const Rational D = q(11, 10);
  const WitnessSequence w = build_witness(su2_dual(), {Label(0)}, D, 3);
  REQUIRE(w.terms.size() == 3);
  const auto& hg = *w.hg;
  for (std::size_t n = 0; n < w.terms.size(); ++n) {
    const BumpFunction& b = w.terms[n];
    REQUIRE(b.bound_squared < D * D);
    REQUIRE(b.bound_squared == oracle::leptin_ratio(hg, w.K_chain[n], w.V_chain[n]));
    REQUIRE(w.norms[n].a_value.has_value());
    REQUIRE(*w.norms[n].a_value <= 1.1 + 1e-6);
    REQUIRE(w.norms[n].a_value <= w.norms[n].a_bound + 1e-6);
    if (n + 1 < w.terms.size()) {
      REQUIRE(is_subset(b.u.support(), w.K_chain[n + 1]));
      REQUIRE(w.K_chain[n].size() < w.K_chain[n + 1].size());
    }
    for (std::size_t m = n + 1; m < w.terms.size(); ++m) {
      REQUIRE(pointwise(b.u, w.terms[m].u) == b.u);
    }
  }
  const MultiplierCheck check = check_multiplier_bounded(w);
  CHECK(check.ok());
  CHECK(check.max_a_value <= 1.1 + 1e-6);

  const BlowupReport r = blowup_report(w, 2);
  CHECK(r.lower_bound_law);
  for (std::size_t n = 0; n < r.rows.size(); ++n) {
    const BlowupRow& row = r.rows[n];
    REQUIRE(row.haar_K == oracle::haar_sum(hg, w.K_chain[n]));
    REQUIRE(*w.norms[n].segal_p_power >= row.haar_K);
    REQUIRE(row.lower_bound_holds);
  }
  CHECK(r.rows.front().segal_p == Catch::Approx(1.0));
  CHECK(r.growth_factor > 1);

  const BlowupReport r1 = blowup_report(w, 1);
  CHECK(r1.lower_bound_law);
  const BlowupReport r15 = blowup_report(w, 1.5);
  CHECK(r15.lower_bound_law);
}

TEST_CASE("single-stage witness", "[segal]") {
  const WitnessSequence w = build_witness(su2_dual(), {Label(0)}, q(3, 2), 1);
  REQUIRE(w.terms.size() == 1);
  CHECK(w.terms[0].u == ExactFunction::delta(Label(0)));
  const MultiplierCheck check = check_multiplier_bounded(w);
  CHECK(check.products_ok);
  CHECK(check.product_failures.empty());
  CHECK(check.bound_ok);
  const BlowupReport r = blowup_report(w, 2);
  CHECK(r.rows[0].segal_p == 1);
  CHECK(r.rows[0].lower_bound == 1);
}

TEST_CASE("finite witness stabilizes", "[segal]") {
  const auto s3 = finite_group_dual(symmetric3_table());
  WitnessOptions options;
  options.strategy = LeptinStrategy::exhaustive;
  options.p = 1;
  const WitnessSequence w = build_witness(s3, {s3->identity()}, q(11, 10), 3, options);
  const LabelSet all = make_label_set(*s3->universe());
  CHECK(w.K_chain.back() == all);
  CHECK(w.V_chain.back() == all);
  CHECK(w.terms.back().u == ExactFunction::indicator(all));
  CHECK(w.terms.back().bound_squared == 1);
  CHECK(check_multiplier_bounded(w).ok());
  const BlowupReport r = blowup_report(w, 1);
  CHECK(r.lower_bound_law);
  CHECK(r.rows[1].segal_p == r.rows[2].segal_p);

  options.strategy = LeptinStrategy::greedy;
  CHECK(build_witness(s3, {s3->identity()}, q(11, 10), 3, options).terms.back().u ==
        ExactFunction::indicator(all));
}

TEST_CASE("truncated term breaks the chain law", "[segal][negative]") {
  WitnessSequence w = build_witness(su2_dual(), {Label(0)}, q(11, 10), 3);
  REQUIRE(check_multiplier_bounded(w).ok());
  // Drop the largest point of supp u_1 from u_2.
  const Label victim = *w.terms[0].u.support().rbegin();
  w.terms[1].u.set(victim, 0);
  const MultiplierCheck check = check_multiplier_bounded(w);
  CHECK_FALSE(check.products_ok);
  CHECK_FALSE(check.ok());
  REQUIRE_FALSE(check.product_failures.empty());
  CHECK(check.product_failures.front() == "1,2: " + w.hg->format_label(victim));
}

TEST_CASE("missing A-norm bound fails the bound check", "[segal][negative]") {
  WitnessSequence w = build_witness(su2_dual(), {Label(0)}, q(11, 10), 2);
  w.norms[1].a_value = 1.2;
  CHECK_FALSE(check_multiplier_bounded(w).bound_ok);
  w.norms[1].a_value.reset();
  const MultiplierCheck c = check_multiplier_bounded(w);
  CHECK_FALSE(c.bound_ok);
  CHECK(c.missing_a_values == std::vector<int>{2});
}

TEST_CASE("witness errors carry the stage", "[segal]") {
  const auto s3 = finite_group_dual(symmetric3_table());
  ErrorKind kind{};
  std::string msg = message_of([&] { build_witness(s3, {Label(0)}, q(11, 10), 2); }, &kind);
  CHECK(kind == ErrorKind::usage);
  CHECK(msg.rfind("stage 1: ", 0) == 0);

  WitnessOptions tight;
  tight.strategy = LeptinStrategy::greedy;
  tight.greedy.max_size = 2;
  msg = message_of([&] { build_witness(su2_dual(), {Label(0)}, q(11, 10), 3, tight); }, &kind);
  CHECK(kind == ErrorKind::capacity);
  CHECK(msg.rfind("stage 2: ", 0) == 0);

  message_of([&] { build_witness(su2_dual(), {Label(0)}, 1, 2); }, &kind);
  CHECK(kind == ErrorKind::usage);
  message_of([&] { build_witness(su2_dual(), {Label(0)}, 2, 0); }, &kind);
  CHECK(kind == ErrorKind::usage);
  WitnessOptions bad_p;
  bad_p.p = 3;
  message_of([&] { build_witness(su2_dual(), {Label(0)}, 2, 1, bad_p); }, &kind);
  CHECK(kind == ErrorKind::usage);
  kind = ErrorKind::internal_invariant;
  message_of([&] { blowup_report(build_witness(su2_dual(), {Label(0)}, 2, 1), 0.5); }, &kind);
  CHECK(kind == ErrorKind::usage);
}
