// Copyright 2026 The addcomb Authors
//
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

#ifndef ADDCOMB_TESTS_SUPPORT_H_
#define ADDCOMB_TESTS_SUPPORT_H_

// Brute-force oracles and seeded generators shared by the test binaries.
// The oracles deliberately avoid the library's hashing and sorting paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "addcomb/bigint.h"
#include "addcomb/elements.h"
#include "addcomb/rng.h"

namespace addcomb::testing {

inline std::vector<BigInt> Ints(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline std::vector<BigInt> Ints(const std::vector<long long>& xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

template <class T>
std::span<const T> Span(const std::vector<T>& v) {
  return std::span<const T>(v);
}

// Unordered sum counts via a map over all i <= j.
template <class T>
std::map<T, std::uint64_t> OracleSumCounts(const std::vector<T>& a) {
  std::map<T, std::uint64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) ++out[T(a[i] + a[j])];
  }
  return out;
}

// Ordered nonzero difference counts keyed by the signed value.
template <class T>
std::map<T, std::uint64_t> OracleDiffCounts(const std::vector<T>& a) {
  std::map<T, std::uint64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) ++out[T(a[i] - a[j])];
    }
  }
  return out;
}

template <class T>
std::uint64_t OracleMax(const std::map<T, std::uint64_t>& counts) {
  std::uint64_t best = 0;
  for (const auto& [v, c] : counts) best = std::max(best, c);
  return best;
}

// Ordered quadruples with a + b = c + d.
template <class T>
std::uint64_t OracleEnergy(const std::vector<T>& a) {
  std::uint64_t e = 0;
  for (const auto& x : a)
    for (const auto& y : a)
      for (const auto& z : a)
        for (const auto& w : a)
          if (T(x + y) == T(z + w)) ++e;
  return e;
}

inline std::vector<BigInt> RandomSet(Rng& rng, std::size_t size, std::uint64_t range) {
  std::set<std::int64_t> s;
  while (s.size() < size) s.insert(static_cast<std::int64_t>(rng.UniformBelow(range)) -
                                   static_cast<std::int64_t>(range / 2));
  std::vector<BigInt> out;
  for (auto x : s) out.emplace_back(x);
  // Shuffle so callers never rely on sorted input.
  for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[rng.UniformBelow(i)]);
  return out;
}

// Greedy random Sidon set: candidates are kept when all pair sums stay distinct.
inline std::vector<BigInt> RandomSidon(Rng& rng, std::size_t size, std::uint64_t range) {
  std::vector<std::int64_t> chosen;
  std::set<std::int64_t> sums;
  while (chosen.size() < size) {
    const auto x = static_cast<std::int64_t>(rng.UniformBelow(range));
    std::set<std::int64_t> fresh;
    bool ok = true;
    for (auto y : chosen) {
      if (y == x) ok = false;
    }
    for (auto y : chosen) {
      if (!ok) break;
      if (sums.count(x + y) || !fresh.insert(x + y).second) ok = false;
    }
    if (ok && (sums.count(2 * x) || fresh.count(2 * x))) ok = false;
    if (!ok) continue;
    fresh.insert(2 * x);
    sums.insert(fresh.begin(), fresh.end());
    chosen.push_back(x);
  }
  std::vector<BigInt> out;
  for (auto x : chosen) out.emplace_back(x);
  return out;
}

inline std::vector<IntPoint> RandomPoints(Rng& rng, std::size_t size, std::uint64_t range,
                                          std::size_t dim = 2) {
  std::set<std::vector<std::int64_t>> s;
  while (s.size() < size) {
    std::vector<std::int64_t> p(dim);
    for (auto& c : p) {
      c = static_cast<std::int64_t>(rng.UniformBelow(range)) -
          static_cast<std::int64_t>(range / 2);
    }
    s.insert(p);
  }
  std::vector<IntPoint> out;
  for (const auto& p : s) {
    std::vector<BigInt> c(p.begin(), p.end());
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace addcomb::testing

#endif  // ADDCOMB_TESTS_SUPPORT_H_
