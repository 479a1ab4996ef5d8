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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "fusionhg/cli.hpp"
#include "fusionhg/core.hpp"
#include "fusionhg/finite_dual.hpp"
#include "fusionhg/fourier.hpp"
#include "fusionhg/leptin.hpp"
#include "fusionhg/product_dual.hpp"
#include "fusionhg/segal.hpp"
#include "fusionhg/su2_dual.hpp"
#include "oracles.hpp"

using namespace fusionhg;
namespace fs = std::filesystem;

namespace {

const fs::path kTables = fs::path(FUSIONHG_DATA_DIR) / "tables";

struct Check {
  std::ostringstream detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds,
               const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && secs >= budget_seconds) {
    c.ok = false;
    c.detail << (c.detail.str().empty() ? "" : "; ") << "over the " << budget_seconds << " s budget";
  }
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  ("
            << secs << " s)";
  if (!c.detail.str().empty()) std::cout << "  " << c.detail.str();
  std::cout << std::endl;
}

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

LabelSet ball(int twice) { return Su2Dual::ball(Spin::from_twice(twice)); }

ExactFunction bump_oracle(const Hypergroup& hg, const LabelSet& K, const LabelSet& V) {
  const LabelSet KV = oracle::support_product(hg, K, V);
  ExactFunction u;
  for (const Label& x : KV) {
    for (const Label& v : V) {
      const Label y = hg.involution(v);
      for (const auto& [z, c] : hg.fuse(x, y)) u.add(z, c * hg.haar(x) * hg.haar(y) / hg.haar(z));
    }
  }
  u *= 1 / oracle::haar_sum(hg, V);
  return u;
}

std::vector<fs::path> table_files() {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(kTables)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

bool is_product_document(const fs::path& p) {
  return p.filename().string().find("_x_") != std::string::npos;
}

// Large SU(2) balls: ball(a) * ball(b) = ball(a + b) by the Clebsch-Gordan range,
// and h sums are summed term by term.
std::optional<int> ball_radius(const LabelSet& s) {
  if (s.empty() || s.begin()->arity() != 1 || (*s.begin())[0] != 0) return std::nullopt;
  const int top = (*s.rbegin())[0];
  if (s.size() != static_cast<std::size_t>(top) + 1) return std::nullopt;
  return top;
}

Rational su2_ratio_oracle(const Hypergroup& su2, const LabelSet& K, const LabelSet& V) {
  if (K.size() * V.size() <= 20000) return oracle::leptin_ratio(su2, K, V);
  const auto a = ball_radius(K), b = ball_radius(V);
  if (!a || !b) throw std::runtime_error("large non-ball set");
  return oracle::square_sum(*a + *b + 1) / oracle::square_sum(*b + 1);
}

}  // namespace

int main() {
  std::cout << std::setprecision(3);

  criterion(1, "Haar law h = d^2 (SU(2) up to l = 15, every bundled table)", 1.0, [](Check& c) {
    const auto su2 = su2_dual();
    for (int n = 0; n <= 30; ++n) {
      c.expect(haar(*su2, Label(n)) == (n + 1) * (n + 1), "su2 n = " + std::to_string(n));
    }
    std::size_t irreps = 0;
    for (const fs::path& file : table_files()) {
      const HypergroupPtr dual = cli::parse_dual(file.string());
      if (is_product_document(file)) {
        const auto& prod = dynamic_cast<const ProductDual&>(*dual);
        for (const Label& x : oracle::universe(prod)) {
          std::int64_t dims = 1;
          for (std::size_t i = 0; i < prod.num_factors(); ++i) {
            const auto& f = dynamic_cast<const FiniteDual&>(prod.factor(i));
            dims *= f.table().irreps[static_cast<std::size_t>(prod.split(x)[i][0])].dim;
          }
          c.expect(haar(*dual, x) == dims * dims, file.filename().string());
          ++irreps;
        }
        continue;
      }
      const CharacterTable t = cli::ingest_table(file);
      const auto fd = finite_group_dual(t);
      for (std::size_t i = 0; i < t.irreps.size(); ++i) {
        c.expect(haar(*fd, Label(static_cast<int>(i))) == t.irreps[i].dim * t.irreps[i].dim,
                 file.filename().string() + " " + t.irreps[i].name);
        ++irreps;
      }
    }
    c.expect(irreps >= 3 + 5 + 2 + 4 + 12, "bundled corpus incomplete");
    if (c.ok) c.detail << irreps << " table irreps, 31 spins";
  });

  criterion(2, "axiom suite (SU(2) l <= 6, S3, Q8, S3 x Z4)", 30.0, [](Check& c) {
    std::vector<Label> sample;
    for (int n = 0; n <= 12; ++n) sample.push_back(Label(n));
    std::size_t triples = 0;
    const std::vector<std::pair<std::string, HypergroupPtr>> cases = {
        {"su2", su2_dual()},
        {"S3", cli::parse_dual((kTables / "s3.json").string())},
        {"Q8", cli::parse_dual((kTables / "q8.json").string())},
        {"S3xZ4", cli::parse_dual((kTables / "s3_x_z4.json").string())}};
    for (const auto& [name, hg] : cases) {
      const std::vector<Label> pts = hg->universe() ? *hg->universe() : sample;
      const AxiomReport r = check_axioms(*hg, pts);
      triples += r.triples_checked;
      c.expect(r.triples_checked == pts.size() * pts.size() * pts.size(), name + " triple count");
      c.expect(!r.failed("normalization"), name + " normalization");
      c.expect(!r.failed("associativity"), name + " associativity");
      c.expect(r.ok(), name + (r.ok() ? "" : " " + r.failures.front().check));
    }
    if (c.ok) c.detail << triples << " triples";
  });

  criterion(3, "fusion spot value delta_1/2 * delta_1/2 = {0: 1/4, 1: 3/4}", 0, [](Check& c) {
    const auto su2 = su2_dual();
    const FiniteMeasure m = convolve_points(*su2, su2->parse_label("1/2"), su2->parse_label("1/2"));
    FiniteMeasure expected;
    expected.add(su2->parse_label("0"), q(1, 4));
    expected.add(su2->parse_label("1"), q(3, 4));
    c.expect(m == expected, "fusion masses");
  });

  criterion(4, "interval closed form vs enumeration; interval search certificates", 10.0, [](Check& c) {
    const auto su2 = su2_dual();
    std::size_t pairs = 0, certs = 0;
    for (int k = 0; k <= 16; ++k) {
      for (int m = k; m <= 16; ++m) {
        const Rational closed = su2_interval_ratio(Spin::from_twice(k), Spin::from_twice(m));
        c.expect(closed == oracle::leptin_ratio(*su2, ball(k), ball(m)),
                 "k2 = " + std::to_string(k) + ", m2 = " + std::to_string(m));
        ++pairs;
      }
    }
    for (int k = 0; k <= 6; ++k) {
      for (const Rational& eps : {q(2), q(1), q(1, 2), q(1, 10)}) {
        const LeptinCertificate cert = leptin_search_interval(Spin::from_twice(k), eps);
        const Rational ratio = oracle::leptin_ratio(*su2, cert.K, cert.V);
        c.expect(cert.K == ball(k), "K is the ball of radius k");
        c.expect(ratio == cert.ratio && ratio < 1 + eps,
                 "k2 = " + std::to_string(k) + ", eps = " + to_string(eps));
        ++certs;
      }
    }
    if (c.ok) c.detail << pairs << " (k, m) pairs, " << certs << " certificates";
  });

  criterion(5, "bump certification on 50 sampled (K, V)", 0, [](Check& c) {
    std::mt19937 rng(20261015);
    const std::vector<HypergroupPtr> duals = {
        su2_dual(), finite_group_dual(symmetric3_table()), finite_group_dual(quaternion8_table()),
        finite_group_dual(cyclic_table(4)),
        finite_group_dual(CharacterTable::product(symmetric3_table(), cyclic_table(4)))};
    double worst_slack = 1e300;
    for (int trial = 0; trial < 50; ++trial) {
      const HypergroupPtr& hg = duals[static_cast<std::size_t>(trial) % duals.size()];
      LabelSet K, V;
      if (!hg->universe()) {
        std::uniform_int_distribution<int> pick(0, 10);
        if (trial % 2 == 0) {
          int k = pick(rng) % 5, m = pick(rng);
          K = ball(k);
          V = ball(std::max(k, m));
        } else {
          for (int i = 0; i < 2; ++i) K.insert(Label(pick(rng)));
          for (int i = 0; i < 3; ++i) V.insert(Label(pick(rng)));
        }
      } else {
        const auto all = oracle::universe(*hg);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int i = 0; i < 2; ++i) K.insert(all[pick(rng)]);
        for (int i = 0; i < 3; ++i) V.insert(all[pick(rng)]);
      }
      const std::string where = hg->name() + " trial " + std::to_string(trial);
      const BumpFunction b = bump(*hg, K, V);
      c.expect(b.u == bump_oracle(*hg, K, V), where + ": u differs from the defining sum");
      bool nonneg = true, one_on_K = true;
      for (const auto& [x, v] : b.u) nonneg = nonneg && sgn(v) >= 0;
      for (const Label& k : K) one_on_K = one_on_K && b.u(k) == 1;
      c.expect(nonneg, where + ": negative value");
      c.expect(one_on_K, where + ": u != 1 on K");
      const LabelSet KVV = oracle::support_product(
          *hg, oracle::support_product(*hg, K, V), involute(*hg, V));
      c.expect(is_subset(b.u.support(), KVV), where + ": support escapes K*V*~V");
      const Rational ratio = oracle::leptin_ratio(*hg, K, V);
      const double a = a_norm_bump(*hg, b);
      const double bound = std::sqrt(ratio.get_d());
      c.expect(a <= bound + 1e-6, where + ": A-norm above sqrt(ratio)");
      worst_slack = std::min(worst_slack, bound - a);
    }
    if (c.ok) c.detail << "min sqrt(ratio) - A-norm = " << worst_slack;
  });

  criterion(6, "quadrature oracles a(delta_0) = 1, a(delta_1/2) = 16/(3 pi)", 0, [](Check& c) {
    const double a0 = a_norm_su2(ExactFunction::delta(Label(0)));
    const double a1 = a_norm_su2(ExactFunction::delta(Label(1)));
    c.expect(std::abs(a0 - 1) <= 1e-9, "delta_0");
    c.expect(std::abs(a1 - 16 / (3 * std::numbers::pi)) <= 1e-6, "delta_1/2");
    c.detail << "errors " << std::abs(a0 - 1) << ", " << std::abs(a1 - 16 / (3 * std::numbers::pi));
  });

  criterion(7, "finite A-norm a(S3, delta_rho) = 4/3 exactly", 0, [](Check& c) {
    const auto s3 = finite_group_dual(cli::ingest_table(kTables / "s3.json"));
    const NormValue v = a_norm_exact_finite(*s3, ExactFunction::delta(s3->parse_label("rho")));
    c.expect(v.exact.has_value() && *v.exact == q(4, 3), "exact value");
  });

  criterion(8, "witness blowup, SU(2), D = 11/10, N = 5", 120.0, [](Check& c) {
    const Rational D = q(11, 10);
    const WitnessSequence w = build_witness(su2_dual(), {Label(0)}, D, 5);
    const auto& hg = *w.hg;
    c.expect(w.terms.size() == 5, "five stages");
    for (std::size_t n = 0; n < w.terms.size(); ++n) {
      const std::string stage = "stage " + std::to_string(n + 1);
      const Rational ratio = su2_ratio_oracle(hg, w.K_chain[n], w.V_chain[n]);
      c.expect(ratio == w.terms[n].bound_squared && ratio < q(121, 100), stage + " ratio");
      for (std::size_t m = n + 1; m < w.terms.size(); ++m) {
        c.expect(pointwise(w.terms[n].u, w.terms[m].u) == w.terms[n].u,
                 "u_" + std::to_string(n + 1) + " u_" + std::to_string(m + 1));
      }
      c.expect(w.norms[n].a_value.has_value() && *w.norms[n].a_value <= 1.1 + 1e-6,
               stage + " A-norm");
      const Rational hK = oracle::haar_sum(hg, w.K_chain[n]);
      const NormValue s2 = segal_cp_norm_central(hg, w.terms[n].u, 2);
      c.expect(s2.exact_power.has_value() && *s2.exact_power >= hK, stage + " lower bound");
    }
    const Rational first = *segal_cp_norm_central(hg, w.terms.front().u, 2).exact_power;
    const Rational hK5 = oracle::haar_sum(hg, w.K_chain.back());
    c.expect(hK5 >= 100 * first, "h(K_5) >= 100 segal_2(u_1)^2");
    const MultiplierCheck check = check_multiplier_bounded(w);
    c.expect(check.ok(), "multiplier check");
    const BlowupReport r = blowup_report(w, 2);
    c.expect(r.lower_bound_law, "lower-bound law");
    c.detail << "certified growth " << std::sqrt(hK5.get_d() / first.get_d()) << ", max a_value "
             << std::setprecision(9) << check.max_a_value << std::setprecision(3);
  });

  criterion(9, "product Leptin bound on SU(2) x SU(2)", 0, [](Check& c) {
    const auto su2 = su2_dual();
    const auto sq = product_dual({su2, su2});
    std::vector<std::vector<LeptinCertificate>> cases;
    const LeptinCertificate example{{Label(1)}, ball(2), q(30, 14), q(2), LeptinStrategy::interval};
    cases.push_back({example, example});
    cases.push_back({leptin_search_interval(Spin::from_twice(1), 2),
                     leptin_search_interval(Spin::from_twice(2), 1)});
    cases.push_back({leptin_search_interval(Spin::from_twice(2), q(1, 2)),
                     leptin_search_interval(Spin::from_twice(1), q(1, 2))});
    for (const auto& certs : cases) {
      const LeptinCertificate p = leptin_product(*sq, certs);
      const Rational direct = oracle::leptin_ratio(*sq, p.K, p.V);
      Rational bound = 1;
      for (const auto& f : certs) bound *= oracle::leptin_ratio(*su2, f.K, f.V);
      c.expect(direct == p.ratio, "stored product ratio");
      c.expect(direct <= bound, "ratio " + to_string(direct) + " > " + to_string(bound));
      c.detail << to_string(direct) << " <= " << to_string(bound) << "; ";
    }
  });

  criterion(10, "greedy satisfies epsilon whenever the exhaustive optimum does", 0, [](Check& c) {
    const std::vector<HypergroupPtr> duals = {
        cli::parse_dual((kTables / "z2.json").string()), cli::parse_dual((kTables / "z4.json").string()),
        cli::parse_dual((kTables / "s3.json").string()), cli::parse_dual((kTables / "q8.json").string()),
        finite_group_dual(klein4_table())};
    std::size_t cases = 0, satisfiable = 0;
    for (const HypergroupPtr& hg : duals) {
      const auto all = oracle::universe(*hg);
      c.expect(all.size() <= 8, "universe size");
      for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
        LabelSet K;
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (mask & (1u << i)) K.insert(all[i]);
        }
        for (const Rational& eps : {q(2), q(1), q(1, 2), q(1, 10)}) {
          ++cases;
          const LeptinCertificate best = leptin_search_exhaustive(*hg, K, eps);
          if (!satisfied(best)) continue;
          ++satisfiable;
          const auto greedy = leptin_search_greedy(*hg, K, eps);
          c.expect(greedy.has_value() && satisfied(*greedy) &&
                       greedy->ratio == oracle::leptin_ratio(*hg, greedy->K, greedy->V),
                   hg->name() + " K mask " + std::to_string(mask) + " eps " + to_string(eps));
        }
      }
    }
    if (c.ok) c.detail << satisfiable << " of " << cases << " cases satisfiable, greedy matched all";
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
