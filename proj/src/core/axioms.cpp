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

#include <algorithm>
#include <mutex>

#include "fusionhg/core.hpp"
#include "fusionhg/error.hpp"
#include "fusionhg/parallel.hpp"

namespace fusionhg {

bool AxiomReport::failed(std::string_view check) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const AxiomFailure& f) { return f.check == check; });
}

namespace {

FiniteMeasure involute_measure(const Hypergroup& hg, const FiniteMeasure& m) {
  FiniteMeasure out;
  for (const auto& [z, mass] : m) out.add(hg.involution(z), mass);
  return out;
}

}  // namespace

AxiomReport check_axioms(const Hypergroup& hg, std::span<const Label> sample, unsigned threads) {
  if (sample.empty()) fail(ErrorKind::usage, "check_axioms needs a nonempty sample");
  for (const Label& x : sample) hg.require(x);

  AxiomReport report;
  report.sample_size = sample.size();
  const Label& e = hg.identity();
  const std::size_t n = sample.size();
  std::mutex report_mutex;

  auto record = [&](std::vector<AxiomFailure>& sink, std::string check,
                    std::vector<Label> witness, std::string detail) {
    sink.push_back({std::move(check), std::move(witness), std::move(detail)});
  };

  parallel_for_blocks(n, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<AxiomFailure> local;
    std::size_t pairs = 0;
    std::size_t triples = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const Label& x = sample[i];
      const Label xt = hg.involution(x);

      if (hg.involution(xt) != x) record(local, "involutive", {x}, "~~x != x");
      if (hg.fuse(e, x) != FiniteMeasure::point(x)) {
        record(local, "identity", {e, x}, "delta_e * delta_x != delta_x");
      }
      if (hg.fuse(x, e) != FiniteMeasure::point(x)) {
        record(local, "identity", {x, e}, "delta_x * delta_e != delta_x");
      }
      if (sgn(hg.fuse(xt, x).mass(e)) <= 0) {
        record(local, "identity-in-support", {xt, x}, "e not in supp(delta_~x * delta_x)");
      }

      for (const Label& y : sample) {
        ++pairs;
        const FiniteMeasure& xy = hg.fuse(x, y);
        Rational total = xy.total();
        if (total != 1) {
          record(local, "normalization", {x, y}, "total mass " + to_string(total));
        }
        const FiniteMeasure& yt_xt = hg.fuse(hg.involution(y), xt);
        if (involute_measure(hg, xy) != yt_xt) {
          record(local, "involution", {x, y}, "(delta_x * delta_y)~ != delta_~y * delta_~x");
        }
        if (hg.commutative() && xy != hg.fuse(y, x)) {
          record(local, "commutativity", {x, y}, "delta_x * delta_y != delta_y * delta_x");
        }
        for (const Label& z : sample) {
          ++triples;
          FiniteMeasure left = convolve_measures(hg, xy, FiniteMeasure::point(z));
          FiniteMeasure right = convolve_measures(hg, FiniteMeasure::point(x), hg.fuse(y, z));
          if (left != right) {
            record(local, "associativity", {x, y, z},
                   "(delta_x * delta_y) * delta_z != delta_x * (delta_y * delta_z)");
          }
        }
      }
    }
    std::lock_guard lock(report_mutex);
    report.pairs_checked += pairs;
    report.triples_checked += triples;
    for (auto& f : local) report.failures.push_back(std::move(f));
  });

  std::sort(report.failures.begin(), report.failures.end(),
            [](const AxiomFailure& a, const AxiomFailure& b) {
              return std::tie(a.check, a.witness) < std::tie(b.check, b.witness);
            });
  return report;
}

}  // namespace fusionhg
