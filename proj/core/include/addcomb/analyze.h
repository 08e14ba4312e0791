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

#ifndef ADDCOMB_ANALYZE_H_
#define ADDCOMB_ANALYZE_H_

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "addcomb/bigint.h"
#include "addcomb/construct.h"
#include "addcomb/elements.h"
#include "addcomb/errors.h"
#include "addcomb/rng.h"

namespace addcomb {

// Sum mode counts unordered pairs {a, b} (a = b allowed, counted once).
// Diff mode counts ordered pairs (a, b), a != b, per nonzero value.
enum class RepMode { kSum, kDiff };

std::string ToString(RepMode mode);
RepMode RepModeFromString(const std::string& name);

inline constexpr std::uint64_t kDefaultPairBudget = 50'000'000;
inline constexpr std::size_t kDefaultWitnessCap = 10;

// Sorted copy of `elements`. Throws ParameterError on a repeated element.
template <Additive T>
std::vector<T> SortedDistinct(std::span<const T> elements) {
  std::vector<T> out(elements.begin(), elements.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ParameterError("set elements must be distinct");
  }
  return out;
}

inline void CheckPairBudget(std::size_t n, std::uint64_t budget) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n + 1) / 2;
  if (pairs > budget) {
    throw ResourceCap(std::to_string(pairs) + " pairs exceed the pair budget of " +
                      std::to_string(budget));
  }
}

// Representation counts of a sorted distinct set. In diff mode only positive
// values are keyed; the count of -v always equals that of v.
template <Additive T>
std::unordered_map<T, std::uint64_t> RepCounts(const std::vector<T>& sorted, RepMode mode) {
  std::unordered_map<T, std::uint64_t> counts;
  const std::size_t n = sorted.size();
  counts.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (mode == RepMode::kSum) {
      for (std::size_t j = i; j < n; ++j) ++counts[T(sorted[i] + sorted[j])];
    } else {
      for (std::size_t j = 0; j < i; ++j) ++counts[T(sorted[i] - sorted[j])];
    }
  }
  return counts;
}

template <class T>
struct RepWitness {
  T value;
  std::uint64_t count = 0;
  // Sum mode: {first, second} with first <= second. Diff mode: ordered
  // (first, second) with first - second = value.
  std::vector<std::pair<T, T>> reps;
};

// Every representation of each value in `values`, smallest pair first.
template <Additive T>
std::vector<RepWitness<T>> CollectWitnesses(const std::vector<T>& sorted, RepMode mode,
                                            const std::vector<T>& values) {
  std::unordered_map<T, std::size_t> slot;
  std::vector<RepWitness<T>> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    slot.emplace(values[i], i);
    out[i].value = values[i];
  }
  const std::size_t n = sorted.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t begin = mode == RepMode::kSum ? i : 0;
    const std::size_t end = mode == RepMode::kSum ? n : i;
    for (std::size_t j = begin; j < end; ++j) {
      const T v = mode == RepMode::kSum ? T(sorted[i] + sorted[j]) : T(sorted[i] - sorted[j]);
      auto it = slot.find(v);
      if (it == slot.end()) continue;
      auto& w = out[it->second];
      ++w.count;
      // Sorted input: sum pairs come out as first <= second, diff pairs
      // with first > second.
      w.reps.emplace_back(sorted[i], sorted[j]);
    }
  }
  for (auto& w : out) std::sort(w.reps.begin(), w.reps.end());
  return out;
}

template <class T>
struct RepProfile {
  RepMode mode = RepMode::kSum;
  std::size_t set_size = 0;
  // Diff mode: positive values only.
  std::unordered_map<T, std::uint64_t> counts;
  std::uint64_t max_count = 0;
  // count -> number of values with that count. In diff mode both v and -v
  // are tallied.
  std::map<std::uint64_t, std::uint64_t> histogram;
  // Diff mode: ordered pairs (a, a), i.e. |A|; reported apart from counts.
  std::uint64_t zero_count = 0;
  // Values attaining max_count, smallest first (positive member of each
  // +-v pair in diff mode), capped.
  std::vector<RepWitness<T>> witnesses;
};

// Throws ParameterError on repeated elements, ResourceCap over budget.
template <Additive T>
RepProfile<T> ComputeRepProfile(std::span<const T> elements, RepMode mode,
                                std::size_t witness_cap = kDefaultWitnessCap,
                                std::uint64_t pair_budget = kDefaultPairBudget) {
  const auto sorted = SortedDistinct(elements);
  CheckPairBudget(sorted.size(), pair_budget);
  RepProfile<T> profile;
  profile.mode = mode;
  profile.set_size = sorted.size();
  profile.counts = RepCounts(sorted, mode);
  profile.zero_count = mode == RepMode::kDiff ? sorted.size() : 0;
  for (const auto& [value, count] : profile.counts) {
    profile.max_count = std::max(profile.max_count, count);
    profile.histogram[count] += mode == RepMode::kDiff ? 2 : 1;
  }
  std::vector<T> best;
  for (const auto& [value, count] : profile.counts) {
    if (count == profile.max_count) best.push_back(value);
  }
  std::sort(best.begin(), best.end());
  if (best.size() > witness_cap) best.resize(witness_cap);
  profile.witnesses = CollectWitnesses(sorted, mode, best);
  return profile;
}

template <class T>
struct BVerdict {
  bool pass = false;
  std::uint64_t g = 0;
  std::uint64_t max_count = 0;
  // On failure: the strongest violating value (most representations, then
  // most using two distinct elements, then smallest) and all its
  // representations.
  std::optional<RepWitness<T>> witness;
};

template <Additive T>
BVerdict<T> CheckB(std::span<const T> elements, std::uint64_t g, RepMode mode,
                   std::uint64_t pair_budget = kDefaultPairBudget) {
  if (g < 1) throw ParameterError("g must be >= 1");
  const auto sorted = SortedDistinct(elements);
  CheckPairBudget(sorted.size(), pair_budget);
  const auto counts = RepCounts(sorted, mode);
  std::unordered_set<T> doubles;
  if (mode == RepMode::kSum) {
    for (const auto& a : sorted) doubles.insert(T(a + a));
  }
  BVerdict<T> verdict;
  verdict.g = g;
  std::optional<T> best;
  std::uint64_t best_count = 0;
  std::uint64_t best_distinct = 0;
  for (const auto& [value, count] : counts) {
    verdict.max_count = std::max(verdict.max_count, count);
    if (count <= g) continue;
    const std::uint64_t distinct = count - doubles.count(value);
    if (!best || count > best_count ||
        (count == best_count &&
         (distinct > best_distinct || (distinct == best_distinct && value < *best)))) {
      best = value;
      best_count = count;
      best_distinct = distinct;
    }
  }
  verdict.pass = !best.has_value();
  if (best) verdict.witness = CollectWitnesses(sorted, mode, {*best}).front();
  return verdict;
}

// Every value has at most g unordered representations a + b.
template <Additive T>
BVerdict<T> IsB2(std::span<const T> elements, std::uint64_t g,
                 std::uint64_t pair_budget = kDefaultPairBudget) {
  return CheckB(elements, g, RepMode::kSum, pair_budget);
}

// Every nonzero value has at most g ordered representations a - b.
template <Additive T>
BVerdict<T> IsB2Circ(std::span<const T> elements, std::uint64_t g,
                     std::uint64_t pair_budget = kDefaultPairBudget) {
  return CheckB(elements, g, RepMode::kDiff, pair_budget);
}

// ---------------------------------------------------------------------------
// Energy

struct EnergyReport {
  std::size_t set_size = 0;
  // Ordered quadruples with a + b = c + d, respectively a - b = c - d.
  std::uint64_t e_plus = 0;
  std::uint64_t e_minus = 0;
  std::uint64_t sumset_size = 0;
  std::uint64_t diffset_size = 0;
  Rational doubling_ratio_sum;   // |A+A| / |A|^2
  Rational doubling_ratio_diff;  // |A-A| / |A|^2
  Rational energy_lower_bound;   // |A|^4 / E_plus, a lower bound on |A+A|
};

template <Additive T>
EnergyReport AdditiveEnergy(std::span<const T> elements,
                            std::uint64_t pair_budget = kDefaultPairBudget) {
  const auto sorted = SortedDistinct(elements);
  if (sorted.empty()) throw ParameterError("energy needs a nonempty set");
  CheckPairBudget(sorted.size(), pair_budget);
  const std::uint64_t n = sorted.size();
  EnergyReport report;
  report.set_size = sorted.size();

  // Ordered sum count of s is 2 * unordered - diagonal.
  std::unordered_map<T, std::pair<std::uint64_t, std::uint64_t>> sums;
  sums.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto& entry = sums[T(sorted[i] + sorted[j])];
      ++entry.first;
      if (i == j) ++entry.second;
    }
  }
  for (const auto& [value, c] : sums) {
    const std::uint64_t ordered = 2 * c.first - c.second;
    report.e_plus += ordered * ordered;
  }
  report.sumset_size = sums.size();

  const auto diffs = RepCounts(sorted, RepMode::kDiff);
  report.e_minus = n * n;
  for (const auto& [value, c] : diffs) report.e_minus += 2 * c * c;
  report.diffset_size = 1 + 2 * diffs.size();

  const BigInt n2 = BigInt(n) * n;
  report.doubling_ratio_sum = Rational(BigInt(report.sumset_size), n2);
  report.doubling_ratio_diff = Rational(BigInt(report.diffset_size), n2);
  report.energy_lower_bound = Rational(n2 * n2, BigInt(report.e_plus));
  return report;
}

// ---------------------------------------------------------------------------
// Sumset disjointness

template <class T>
struct SumsetCollision {
  T value;
  std::pair<std::size_t, std::size_t> parts_a;  // 0-based (i, j), i <= j
  std::pair<T, T> pair_a;
  std::pair<std::size_t, std::size_t> parts_b;
  std::pair<T, T> pair_b;
};

template <class T>
struct DisjointnessReport {
  bool disjoint = true;
  std::size_t part_count = 0;
  // Distinct values lying in more than one W_i + W_j.
  std::uint64_t collision_values = 0;
  // Smallest values first, capped.
  std::vector<SumsetCollision<T>> collisions;
};

// Whether the sumsets W_i + W_j (i <= j) are pairwise disjoint.
template <Additive T>
DisjointnessReport<T> FamilySumsetDisjointness(const std::vector<std::vector<T>>& parts,
                                               std::size_t witness_cap = kDefaultWitnessCap,
                                               std::uint64_t pair_budget = kDefaultPairBudget) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  CheckPairBudget(total, pair_budget);

  struct Origin {
    std::pair<std::size_t, std::size_t> parts;
    std::pair<T, T> pair;
  };
  std::unordered_map<T, Origin> first_seen;
  std::map<T, SumsetCollision<T>> collisions;  // first collision per value
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      for (std::size_t a = 0; a < parts[i].size(); ++a) {
        for (std::size_t b = (i == j ? a : 0); b < parts[j].size(); ++b) {
          const T& x = parts[i][a];
          const T& y = parts[j][b];
          const T s = x + y;
          auto [it, inserted] = first_seen.try_emplace(s, Origin{{i, j}, {x, y}});
          if (inserted || it->second.parts == std::make_pair(i, j)) continue;
          collisions.try_emplace(s, SumsetCollision<T>{s, it->second.parts, it->second.pair,
                                                       {i, j}, {x, y}});
        }
      }
    }
  }
  DisjointnessReport<T> report;
  report.part_count = parts.size();
  report.collision_values = collisions.size();
  report.disjoint = collisions.empty();
  for (auto& [value, c] : collisions) {
    if (report.collisions.size() == witness_cap) break;
    report.collisions.push_back(std::move(c));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Collision census (labeled W / W° families)

enum class CensusClass { kPredicted, kAnomaly };

struct CensusRecord {
  // Sum mode: refs[0] + refs[1] = refs[2] + refs[3].
  // Diff mode: refs[0] - refs[1] = refs[2] - refs[3].
  std::array<ElementRef, 4> refs;
  DigitVector value;
  CensusClass cls = CensusClass::kAnomaly;
};

struct CensusReport {
  RepMode mode = RepMode::kSum;
  // "same-tuple" for Hadamard families: {(y,i),(y,j)} vs {(z,i),(z,j)} with
  // y, z agreeing where v_i + v_j != 0. "cross-tuple" for star families:
  // {(y,i),(z,j)} vs {(y,j),(z,i)} with y, z agreeing where v_i - v_j != 0.
  std::string expected_pattern;
  std::uint64_t records = 0;
  std::uint64_t predicted = 0;
  std::uint64_t anomalies = 0;
  // Distinct values with more than one representation.
  std::uint64_t repeated_values = 0;
  // Anomalies first, then predicted records, capped.
  std::vector<CensusRecord> sample;
};

// Records every equality between two distinct representations of a value
// (unordered sums, or ordered differences with positive value) and
// classifies it against the family's expected pattern. Differences are
// classified through the equivalent sum equality a + d = b + c.
CensusReport CollisionCensus(const SetFamily& family, RepMode mode,
                             std::size_t sample_cap = 20,
                             std::uint64_t pair_budget = kDefaultPairBudget);

// Classification of the sum equality p + q = r + s within `family`.
CensusClass ClassifySumEquality(const SetFamily& family, ElementRef p, ElementRef q,
                                ElementRef r, ElementRef s);

// ---------------------------------------------------------------------------
// Subset doubling audit

enum class AuditMode { kExhaustive, kSample };

std::string ToString(AuditMode mode);

inline constexpr std::size_t kExhaustiveAuditLimit = 20;

struct AuditParams {
  AuditMode mode = AuditMode::kExhaustive;
  std::size_t min_size = 4;
  // Sample mode: subset sizes are drawn uniformly from [min_size, max_size];
  // 0 means |A|.
  std::size_t max_size = 0;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
};

struct AuditReport {
  AuditMode mode = AuditMode::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t subsets_examined = 0;
  Rational min_sum_ratio;   // min |A'+A'| / |A'|^2
  Rational min_diff_ratio;  // min |A'-A'| / |A'|^2
  // Indices into the input, ascending.
  std::vector<std::size_t> argmin_sum;
  std::vector<std::size_t> argmin_diff;
};

namespace internal {

inline bool RatioLess(std::uint64_t num, std::uint64_t den, const Rational& best, bool have) {
  return !have || Rational(BigInt(num), BigInt(den)) < best;
}

}  // namespace internal

template <Additive T>
AuditReport SubsetDoublingAudit(std::span<const T> elements, const AuditParams& params) {
  const std::size_t n = elements.size();
  SortedDistinct(elements);
  if (params.min_size < 1) throw ParameterError("min_size must be >= 1");
  if (params.min_size > n) throw ParameterError("min_size exceeds the set size");
  AuditReport report;
  report.mode = params.mode;
  report.seed = params.seed;
  bool have_sum = false;
  bool have_diff = false;

  auto consider = [&](std::uint64_t sums, std::uint64_t diffs, std::size_t size,
                      auto&& indices) {
    const std::uint64_t den = static_cast<std::uint64_t>(size) * size;
    ++report.subsets_examined;
    if (internal::RatioLess(sums, den, report.min_sum_ratio, have_sum)) {
      report.min_sum_ratio = Rational(BigInt(sums), BigInt(den));
      report.argmin_sum = indices();
      have_sum = true;
    }
    if (internal::RatioLess(diffs, den, report.min_diff_ratio, have_diff)) {
      report.min_diff_ratio = Rational(BigInt(diffs), BigInt(den));
      report.argmin_diff = indices();
      have_diff = true;
    }
  };

  if (params.mode == AuditMode::kExhaustive) {
    if (n > kExhaustiveAuditLimit) {
      throw ResourceCap("exhaustive audit needs |A| <= " + std::to_string(kExhaustiveAuditLimit));
    }
    // Value ids for every pair, so each subset only stamps small integers.
    std::vector<std::vector<std::uint32_t>> sum_id(n, std::vector<std::uint32_t>(n));
    std::vector<std::vector<std::uint32_t>> diff_id(n, std::vector<std::uint32_t>(n));
    std::unordered_map<T, std::uint32_t> sum_ids;
    std::unordered_map<T, std::uint32_t> diff_ids;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        sum_id[i][j] = sum_ids.try_emplace(T(elements[i] + elements[j]),
                                           static_cast<std::uint32_t>(sum_ids.size()))
                           .first->second;
        if (i != j) {
          diff_id[i][j] = diff_ids.try_emplace(T(elements[i] - elements[j]),
                                               static_cast<std::uint32_t>(diff_ids.size()))
                              .first->second;
        }
      }
    }
    std::vector<std::uint32_t> sum_stamp(sum_ids.size(), 0);
    std::vector<std::uint32_t> diff_stamp(diff_ids.size(), 0);
    std::uint32_t stamp = 0;
    std::vector<std::size_t> members;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
      if (size < params.min_size) continue;
      members.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) members.push_back(i);
      }
      ++stamp;
      std::uint64_t sums = 0;
      std::uint64_t diffs = 1;  // zero
      for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a; b < size; ++b) {
          const std::uint32_t s = sum_id[members[a]][members[b]];
          if (sum_stamp[s] != stamp) {
            sum_stamp[s] = stamp;
            ++sums;
          }
          if (a == b) continue;
          for (const std::uint32_t d :
               {diff_id[members[a]][members[b]], diff_id[members[b]][members[a]]}) {
            if (diff_stamp[d] != stamp) {
              diff_stamp[d] = stamp;
              ++diffs;
            }
          }
        }
      }
      consider(sums, diffs, size, [&] { return members; });
    }
    return report;
  }

  const std::size_t max_size = params.max_size == 0 ? n : std::min(params.max_size, n);
  if (max_size < params.min_size) throw ParameterError("max_size below min_size");
  Rng rng(params.seed);
  std::vector<std::size_t> order(n);
  std::unordered_set<T> sums;
  std::unordered_set<T> diffs;
  for (std::uint64_t trial = 0; trial < params.trials; ++trial) {
    const std::size_t size = rng.UniformInRange(params.min_size, max_size);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 0; i < size; ++i) {
      std::swap(order[i], order[i + rng.UniformBelow(n - i)]);
    }
    sums.clear();
    diffs.clear();
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        const T& x = elements[order[a]];
        const T& y = elements[order[b]];
        if (a <= b) sums.insert(T(x + y));
        diffs.insert(T(x - y));
      }
    }
    consider(sums.size(), diffs.size(), size, [&] {
      std::vector<std::size_t> chosen(order.begin(), order.begin() + size);
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    });
  }
  return report;
}

}  // namespace addcomb

#endif  // ADDCOMB_ANALYZE_H_
