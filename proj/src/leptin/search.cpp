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

#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>

#include "fusionhg/core.hpp"
#include "fusionhg/error.hpp"
#include "fusionhg/leptin.hpp"
#include "fusionhg/parallel.hpp"

namespace fusionhg {

namespace {

// a/b < c/d for positive denominators.
template <class Int>
bool less_fraction(const Int& a, const Int& b, const Int& c, const Int& d) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    return static_cast<Int128>(a) * d < static_cast<Int128>(c) * b;
  } else {
    return Int(a * d) < Int(c * b);
  }
}

// Same size sets compare by their sorted label lists; bit i is the i-th label.
bool set_before(std::uint32_t a, std::uint32_t b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

template <class Int>
std::uint32_t exhaustive_min(const std::vector<Int>& weights, const std::vector<std::uint32_t>& kv1,
                             unsigned threads) {
  const std::size_t n = weights.size();
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  const std::size_t count = std::size_t{full} + 1;
  std::vector<Int> hsum(count);
  std::vector<std::uint32_t> kv(count);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const int bit = std::countr_zero(low);
    hsum[mask] = hsum[mask ^ low] + weights[bit];
    kv[mask] = kv[mask ^ low] | kv1[bit];
  }
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    // ratio(a) < ratio(b), ties by set order.
    if (less_fraction(hsum[kv[a]], hsum[a], hsum[kv[b]], hsum[b])) return true;
    if (less_fraction(hsum[kv[b]], hsum[b], hsum[kv[a]], hsum[a])) return false;
    return set_before(a, b);
  };
  std::mutex mu;
  std::uint32_t best = 1;
  parallel_for_blocks(count - 1, threads, [&](std::size_t begin, std::size_t end) {
    std::uint32_t local = static_cast<std::uint32_t>(begin + 1);
    for (std::size_t i = begin + 1; i < end + 1; ++i) {
      const auto mask = static_cast<std::uint32_t>(i);
      if (better(mask, local)) local = mask;
    }
    std::lock_guard lock(mu);
    if (better(local, best)) best = local;
  });
  return best;
}

}  // namespace

LeptinCertificate leptin_search_exhaustive(const Hypergroup& hg, const LabelSet& K,
                                           const Rational& epsilon, std::size_t cap,
                                           unsigned threads) {
  if (sgn(epsilon) <= 0) fail(ErrorKind::usage, "epsilon must be positive");
  if (K.empty()) fail(ErrorKind::usage, "exhaustive search needs a nonempty K");
  auto universe = hg.universe();
  if (!universe) fail(ErrorKind::capacity, hg.name() + " is infinite; exhaustive search needs a finite universe");
  const std::size_t n = universe->size();
  if (n > cap || n > 30) {
    fail(ErrorKind::capacity, "universe of " + hg.name() + " has " + std::to_string(n) +
                                  " points, above the exhaustive cap of " + std::to_string(cap));
  }
  for (const Label& k : K) hg.require(k);
  const LabelSet points = make_label_set(*universe);
  auto index_of = [&](const Label& x) {
    return static_cast<std::size_t>(points.find(x) - points.begin());
  };

  std::vector<std::uint32_t> kv1(n);
  std::vector<Rational> h(n);
  Integer lcm = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Label& x = *(points.begin() + static_cast<std::ptrdiff_t>(i));
    for (const Label& z : support_product(hg, K, LabelSet{x})) kv1[i] |= 1u << index_of(z);
    h[i] = hg.haar(x);
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), h[i].get_den_mpz_t());
  }
  std::vector<Integer> scaled(n);
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = Integer(h[i].get_num() * (lcm / h[i].get_den()));
    total += scaled[i];
  }

  std::uint32_t best;
  if (total < Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = scaled[i].get_si();
    best = exhaustive_min(w, kv1, threads ? threads : default_threads());
  } else {
    best = exhaustive_min(scaled, kv1, threads ? threads : default_threads());
  }

  LabelSet V;
  for (std::size_t i = 0; i < n; ++i) {
    if (best & (1u << i)) V.insert(*(points.begin() + static_cast<std::ptrdiff_t>(i)));
  }
  Rational ratio = leptin_ratio(hg, K, V);
  return LeptinCertificate{K, std::move(V), std::move(ratio), epsilon, LeptinStrategy::exhaustive};
}

}  // namespace fusionhg
