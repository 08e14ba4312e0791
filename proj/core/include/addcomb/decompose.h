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

#ifndef ADDCOMB_DECOMPOSE_H_
#define ADDCOMB_DECOMPOSE_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "addcomb/analyze.h"
#include "addcomb/bigint.h"
#include "addcomb/construct.h"
#include "addcomb/elements.h"

namespace addcomb {

// Which B-property every part of a decomposition must have. Mixed lets each
// part be declared sum-kind or diff-kind when it is opened.
enum class UnionKind { kSum, kDiff, kMixed };

std::string ToString(UnionKind kind);
UnionKind UnionKindFromString(const std::string& name);

enum class SearchStatus { kSat, kUnsat, kTimeout };

std::string ToString(SearchStatus status);

struct Decomposition {
  // Part index (0-based) per input element, in input order.
  std::vector<std::uint32_t> assignment;
  std::vector<RepMode> part_kinds;
  std::uint64_t g = 0;
  std::size_t parts_used = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::kUnsat;
  std::size_t parts = 0;
  std::optional<Decomposition> decomposition;
  std::uint64_t nodes_explored = 0;
  std::uint64_t budget = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;
inline constexpr std::size_t kDefaultSearchElementCap = 64;

inline constexpr const char* kSymmetryBreaking =
    "elements visited by descending collision degree, ties by input index; each "
    "element joins an open part or opens exactly one new part (one per kind in "
    "mixed mode), so the first element always opens part 1";

struct MinUnionResult {
  UnionKind kind = UnionKind::kSum;
  std::uint64_t g = 0;
  // One result per part count 1, 2, ... up to the first SAT or max_parts.
  std::vector<SearchResult> per_parts;
  // Set only when some t is SAT and every smaller t is UNSAT.
  std::optional<std::size_t> minimum;
  std::vector<std::size_t> search_order;
};

// Number of other representations sharing a value with some pair that
// contains each element; the fail-first search order key.
template <Additive T>
std::vector<std::uint64_t> CollisionDegrees(std::span<const T> elements, UnionKind kind) {
  const auto sorted = SortedDistinct(elements);
  const std::size_t n = elements.size();
  std::vector<std::uint64_t> degree(n, 0);
  if (kind != UnionKind::kDiff) {
    const auto sums = RepCounts(sorted, RepMode::kSum);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) degree[i] += sums.at(T(elements[i] + elements[j])) - 1;
    }
  }
  if (kind != UnionKind::kSum) {
    const auto diffs = RepCounts(sorted, RepMode::kDiff);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const T d = elements[j] < elements[i] ? T(elements[i] - elements[j])
                                              : T(elements[j] - elements[i]);
        degree[i] += diffs.at(d) - 1;
      }
    }
  }
  return degree;
}

namespace internal {

// One part of a partial decomposition with incremental representation
// counts. In diff mode both x - y and y - x are counted.
template <Additive T>
class PartState {
 public:
  explicit PartState(RepMode kind) : kind_(kind) {}

  RepMode kind() const { return kind_; }
  const std::vector<std::size_t>& members() const { return members_; }

  // Adds element `index` if the part stays within g; otherwise leaves the
  // part unchanged and returns false.
  bool TryAdd(std::span<const T> elements, std::size_t index, std::uint64_t g) {
    const T& x = elements[index];
    const std::size_t mark = log_.size();
    bool ok = true;
    auto bump = [&](T v) {
      auto& c = counts_[v];
      ++c;
      log_.push_back(std::move(v));
      if (c > g) ok = false;
    };
    if (kind_ == RepMode::kSum) {
      bump(T(x + x));
      for (std::size_t m : members_) {
        if (!ok) break;
        bump(T(x + elements[m]));
      }
    } else {
      for (std::size_t m : members_) {
        if (!ok) break;
        bump(T(x - elements[m]));
        if (!ok) break;
        bump(T(elements[m] - x));
      }
    }
    if (!ok) {
      Rewind(mark);
      return false;
    }
    members_.push_back(index);
    marks_.push_back(mark);
    return true;
  }

  void RemoveLast() {
    Rewind(marks_.back());
    marks_.pop_back();
    members_.pop_back();
  }

 private:
  void Rewind(std::size_t mark) {
    while (log_.size() > mark) {
      auto it = counts_.find(log_.back());
      if (--it->second == 0) counts_.erase(it);
      log_.pop_back();
    }
  }

  RepMode kind_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> marks_;
  std::unordered_map<T, std::uint64_t> counts_;
  std::vector<T> log_;
};

template <Additive T>
class Searcher {
 public:
  Searcher(std::span<const T> elements, std::uint64_t g, UnionKind kind,
           std::vector<std::size_t> order, std::size_t parts, std::uint64_t budget)
      : elements_(elements),
        g_(g),
        kind_(kind),
        order_(std::move(order)),
        max_parts_(parts),
        budget_(budget) {}

  SearchResult Run() {
    SearchResult result;
    result.parts = max_parts_;
    result.budget = budget_;
    const bool found = Recurse(0);
    result.nodes_explored = nodes_;
    if (found) {
      result.status = SearchStatus::kSat;
      result.decomposition = solution_;
    } else {
      result.status = timed_out_ ? SearchStatus::kTimeout : SearchStatus::kUnsat;
    }
    return result;
  }

 private:
  bool Step() {
    if (++nodes_ > budget_) {
      timed_out_ = true;
      return false;
    }
    return true;
  }

  bool Recurse(std::size_t pos) {
    if (pos == order_.size()) {
      Record();
      return true;
    }
    const std::size_t e = order_[pos];
    const std::size_t open = parts_.size();
    for (std::size_t p = 0; p < open; ++p) {
      if (!Step()) return false;
      if (!parts_[p].TryAdd(elements_, e, g_)) continue;
      if (Recurse(pos + 1)) return true;
      parts_[p].RemoveLast();
      if (timed_out_) return false;
    }
    if (parts_.size() < max_parts_) {
      std::vector<RepMode> kinds;
      if (kind_ != UnionKind::kDiff) kinds.push_back(RepMode::kSum);
      if (kind_ != UnionKind::kSum) kinds.push_back(RepMode::kDiff);
      for (RepMode k : kinds) {
        if (!Step()) return false;
        parts_.emplace_back(k);
        if (parts_.back().TryAdd(elements_, e, g_) && Recurse(pos + 1)) return true;
        parts_.pop_back();
        if (timed_out_) return false;
      }
    }
    return false;
  }

  void Record() {
    solution_.g = g_;
    solution_.parts_used = parts_.size();
    solution_.assignment.assign(elements_.size(), 0);
    solution_.part_kinds.clear();
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      solution_.part_kinds.push_back(parts_[p].kind());
      for (std::size_t m : parts_[p].members()) {
        solution_.assignment[m] = static_cast<std::uint32_t>(p);
      }
    }
  }

  std::span<const T> elements_;
  std::uint64_t g_;
  UnionKind kind_;
  std::vector<std::size_t> order_;
  std::size_t max_parts_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  std::vector<PartState<T>> parts_;
  Decomposition solution_;
};

}  // namespace internal

template <Additive T>
std::vector<std::size_t> SearchOrder(std::span<const T> elements, UnionKind kind) {
  const auto degree = CollisionDegrees(elements, kind);
  std::vector<std::size_t> order(elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  return order;
}

// Exact search for a decomposition into at most `parts` parts.
template <Additive T>
SearchResult SearchDecomposition(std::span<const T> elements, std::uint64_t g, UnionKind kind,
                                 std::size_t parts, std::uint64_t budget = kDefaultNodeBudget) {
  if (g < 1) throw ParameterError("g must be >= 1");
  if (parts < 1) throw ParameterError("parts must be >= 1");
  internal::Searcher<T> searcher(elements, g, kind, SearchOrder(elements, kind), parts, budget);
  return searcher.Run();
}

// Runs SearchDecomposition for t = 1, 2, ..., max_parts, stopping at the
// first SAT. Each t gets the full node budget.
template <Additive T>
MinUnionResult ExactMinUnion(std::span<const T> elements, std::uint64_t g, UnionKind kind,
                             std::size_t max_parts, std::uint64_t budget = kDefaultNodeBudget,
                             std::size_t element_cap = kDefaultSearchElementCap) {
  if (elements.size() > element_cap) {
    throw ResourceCap(std::to_string(elements.size()) + " elements exceed the search cap of " +
                      std::to_string(element_cap));
  }
  if (elements.empty()) throw ParameterError("search needs a nonempty set");
  MinUnionResult out;
  out.kind = kind;
  out.g = g;
  out.search_order = SearchOrder(elements, kind);
  bool all_unsat = true;
  for (std::size_t t = 1; t <= max_parts; ++t) {
    auto result = SearchDecomposition(elements, g, kind, t, budget);
    const SearchStatus status = result.status;
    out.per_parts.push_back(std::move(result));
    if (status == SearchStatus::kSat) {
      if (all_unsat) out.minimum = t;
      break;
    }
    if (status == SearchStatus::kTimeout) all_unsat = false;
  }
  return out;
}

// First-fit in ascending value order; sum-kind parts for mixed requests.
template <Additive T>
Decomposition GreedyUnion(std::span<const T> elements, std::uint64_t g, UnionKind kind) {
  if (g < 1) throw ParameterError("g must be >= 1");
  std::vector<std::size_t> order(elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return elements[a] < elements[b]; });
  const RepMode part_kind = kind == UnionKind::kDiff ? RepMode::kDiff : RepMode::kSum;
  std::vector<internal::PartState<T>> parts;
  Decomposition out;
  out.g = g;
  out.assignment.assign(elements.size(), 0);
  for (std::size_t e : order) {
    std::size_t p = 0;
    while (p < parts.size() && !parts[p].TryAdd(elements, e, g)) ++p;
    if (p == parts.size()) {
      parts.emplace_back(part_kind);
      parts.back().TryAdd(elements, e, g);
      out.part_kinds.push_back(part_kind);
    }
    out.assignment[e] = static_cast<std::uint32_t>(p);
  }
  out.parts_used = parts.size();
  return out;
}

// Re-checks every part with IsB2 / IsB2Circ.
template <Additive T>
bool VerifyDecomposition(std::span<const T> elements, const Decomposition& decomposition) {
  if (decomposition.assignment.size() != elements.size()) return false;
  std::vector<std::vector<T>> parts(decomposition.parts_used);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto p = decomposition.assignment[i];
    if (p >= parts.size()) return false;
    parts[p].push_back(elements[i]);
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::span<const T> view(parts[p]);
    if (!CheckB(view, decomposition.g, decomposition.part_kinds.at(p)).pass) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Counting certificates

struct PairCollisionCount {
  std::uint32_t i = 0;  // 1-based vector indices, i < j
  std::uint32_t j = 0;
  std::size_t support = 0;  // coordinates where v_i +- v_j != 0
  std::uint64_t values = 0;
};

// Pigeonhole bound for a W (sum, B2[g] parts) or W° (diff, B2°[g] parts)
// family: every tuple puts two of its k elements in one of t < k parts, each
// such pair is a distinct representation of one of V values, and a part
// holds at most g representations per value. lhs > t g V rules out t parts.
struct CountingCertificate {
  std::string family;  // W | Wcirc
  RepMode kind = RepMode::kSum;
  int k = 0;
  int n = 0;
  std::size_t d = 0;
  std::size_t m = 0;
  std::uint64_t g = 0;
  std::uint64_t t = 0;
  std::uint64_t lhs = 0;  // |S_n|
  std::uint64_t collision_values = 0;
  std::vector<PairCollisionCount> per_pair;
  BigInt capacity;  // t g V
  bool verdict = false;
  // floor(n / (2 d m))^m <= lhs.
  std::uint64_t lattice_lower_bound = 0;
  bool lower_bound_holds = false;
  // V <= C(k,2) n^s with s = m - 1 for W and s = 2 for W°.
  BigInt collision_upper_bound;
  bool upper_bound_holds = false;
  std::string note;
};

CountingCertificate CertifyCounting(const SetFamily& family, std::uint64_t g, std::uint64_t t);

// Same certificate from the lattice alone, without materializing elements.
CountingCertificate CertifyCountingStreaming(CodeKind code, int k, int n, std::uint64_t g,
                                             std::uint64_t t);

struct MixedSide {
  RepMode kind = RepMode::kSum;
  std::uint64_t lhs = 0;            // |S_n| of this factor's lattice
  std::uint64_t groups_needed = 0;  // ceil(lhs / 4)
  std::uint64_t collision_values = 0;
  BigInt capacity;  // t g V
  bool verdict = false;
};

// Bookkeeping for decompositions of W° x W into t parts, each B2[g] or
// B2°[g]. Half the elements lie in one kind's union; some fixed row (or
// column) then has at least a 1/4 fraction of tuple groups with >= k/3
// elements in that union, and t < k/3 forces a same-part pair in each.
struct MixedCertificate {
  int k = 0;
  int n = 0;
  std::uint64_t g = 0;
  std::uint64_t t = 0;
  std::uint64_t t_max = 0;  // floor(k/3) - 1
  std::uint64_t group_threshold = 0;  // ceil(k/3)
  Rational alpha;  // 1/4
  MixedSide sum_side;   // W factor, B2[g] parts
  MixedSide diff_side;  // W° factor, B2°[g] parts
  bool verdict = false;
  std::string note;
};

MixedCertificate CertifyMixed(const SetFamily& wcirc, const SetFamily& w, std::uint64_t g,
                              std::uint64_t t);
MixedCertificate CertifyMixedStreaming(int k, int n, std::uint64_t g, std::uint64_t t);

struct NoLargeSide {
  RepMode kind = RepMode::kSum;
  std::uint64_t lhs = 0;
  std::uint64_t groups = 0;     // ceil(gamma * lhs)
  std::uint64_t group_min = 0;  // ceil(delta k / 2)
  BigInt pairs;                 // C(group_min, 2) * groups
  std::uint64_t collision_values = 0;
  BigInt capacity;  // g V
  bool verdict = false;
};

// Rules out B2[g] (sum side) and B2°[g] (diff side) subsets of W° x W of
// size >= delta |W° x W|.
struct NoLargeBSubsetCertificate {
  int k = 0;
  int n = 0;
  std::uint64_t g = 0;
  Rational delta;
  Rational gamma;  // (delta/2) / (1 - delta/2)
  BigInt product_size;
  BigInt threshold_size;  // ceil(delta |W° x W|)
  NoLargeSide sum_side;
  NoLargeSide diff_side;
  bool verdict = false;  // both sides
};

// Throws ParameterError unless 0 < delta <= 1 and delta k / 2 >= 2.
NoLargeBSubsetCertificate CertifyNoLargeBSubset(const SetFamily& wcirc, const SetFamily& w,
                                                std::uint64_t g, const Rational& delta);
NoLargeBSubsetCertificate CertifyNoLargeBSubsetStreaming(int k, int n, std::uint64_t g,
                                                         const Rational& delta);

// gamma = (delta/2) / (1 - delta/2).
Rational NoLargeGamma(const Rational& delta);

// ---------------------------------------------------------------------------
// Meyer extraction

struct MeyerStats {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::size_t set_size = 0;
  // Sum of |A'| over trials divided by trials * |A|.
  Rational mean_fraction;
  double mean = 0;
  double stddev = 0;          // sample standard deviation of |A'| / |A|
  double standard_error = 0;  // stddev / sqrt(trials)
  std::uint64_t best_trial = 0;
  // Indices into the input, ascending.
  std::vector<std::size_t> best_subset;
  std::uint64_t b2_failures = 0;
  std::vector<std::uint64_t> sizes;
};

// Each trial places every index 0..max in U or L by a fair bit and keeps
// the elements 5^n - 5^m with n in U and m in L; every kept subset is
// checked with IsB2(., 2).
MeyerStats MeyerExtract(std::span<const MeyerElement> elements, std::uint64_t seed,
                        std::uint64_t trials);

}  // namespace addcomb

#endif  // ADDCOMB_DECOMPOSE_H_
