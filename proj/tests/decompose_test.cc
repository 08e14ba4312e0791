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

#include "addcomb/decompose.h"

#include <gtest/gtest.h>

#include "addcomb/construct.h"
#include "support.h"

namespace addcomb {
namespace {

using testing::Ints;

std::vector<BigInt> PlusMinusPowers(int top) {
  std::vector<BigInt> out;
  BigInt p = 1;
  for (int i = 1; i <= top; ++i) {
    p *= 5;
    out.push_back(p);
    out.push_back(-p);
  }
  return out;
}

// Oracle: restricted-growth enumeration of every partition into at most t
// blocks, each block tagged with every allowed kind, checked by map counts.
bool OracleDecomposable(const std::vector<BigInt>& a, std::uint64_t g, UnionKind kind,
                        std::size_t t) {
  const std::size_t n = a.size();
  std::vector<std::size_t> label(n, 0);
  auto block_ok = [&](const std::vector<BigInt>& block, RepMode mode) {
    const auto counts = mode == RepMode::kSum ? testing::OracleSumCounts(block)
                                              : testing::OracleDiffCounts(block);
    return testing::OracleMax(counts) <= g;
  };
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      std::vector<std::vector<BigInt>> blocks(used);
      for (std::size_t e = 0; e < n; ++e) blocks[label[e]].push_back(a[e]);
      for (const auto& b : blocks) {
        const bool sum = block_ok(b, RepMode::kSum);
        const bool diff = block_ok(b, RepMode::kDiff);
        const bool ok = kind == UnionKind::kSum    ? sum
                        : kind == UnionKind::kDiff ? diff
                                                   : (sum || diff);
        if (!ok) return false;
      }
      return true;
    }
    for (std::size_t p = 0; p <= used && p < t; ++p) {
      label[i] = p;
      if (rec(i + 1, std::max(used, p + 1))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

TEST(ExactMinUnion, Examples) {
  const auto pm = PlusMinusPowers(8);
  const auto r = ExactMinUnion<BigInt>(pm, 7, UnionKind::kSum, 4);
  ASSERT_TRUE(r.minimum.has_value());
  EXPECT_EQ(*r.minimum, 2u);
  EXPECT_EQ(r.per_parts[0].status, SearchStatus::kUnsat);

  const auto sidon = ExactMinUnion<BigInt>(Ints({1, 2, 5, 11}), 1, UnionKind::kSum, 3);
  EXPECT_EQ(sidon.minimum, std::optional<std::size_t>(1));

  const auto four = ExactMinUnion<BigInt>(Ints({0, 1, 2, 3}), 1, UnionKind::kSum, 3);
  EXPECT_EQ(four.minimum, std::optional<std::size_t>(2));
  const auto& d = *four.per_parts.back().decomposition;
  EXPECT_TRUE(VerifyDecomposition<BigInt>(Ints({0, 1, 2, 3}), d));
}

TEST(ExactMinUnion, CapsAndErrors) {
  std::vector<BigInt> big;
  for (int i = 0; i < 70; ++i) big.emplace_back(i);
  EXPECT_THROW(ExactMinUnion<BigInt>(big, 1, UnionKind::kSum, 2), ResourceCap);
  EXPECT_THROW(SearchDecomposition<BigInt>(Ints({1, 2}), 0, UnionKind::kSum, 1), ParameterError);
}

TEST(ExactMinUnion, TimeoutIsNotAMinimum) {
  std::vector<BigInt> a;
  for (int i = 0; i < 30; ++i) a.emplace_back(i);
  const auto r = ExactMinUnion<BigInt>(a, 1, UnionKind::kSum, 6, 50);
  EXPECT_FALSE(r.minimum.has_value());
  EXPECT_EQ(r.per_parts.back().status, SearchStatus::kTimeout);
}

// Soundness against the partition oracle on seeded small instances.
TEST(SearchProperty, AgreesWithOracle) {
  Rng rng(31337);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t size = 4 + trial % 7;
    const auto a = testing::RandomSet(rng, size, 3 * size);
    const std::uint64_t g = 1 + trial % 2;
    const UnionKind kind = static_cast<UnionKind>(trial % 3);
    for (std::size_t t = 1; t <= 3; ++t) {
      const auto r = SearchDecomposition<BigInt>(a, g, kind, t);
      ASSERT_NE(r.status, SearchStatus::kTimeout);
      EXPECT_EQ(r.status == SearchStatus::kSat, OracleDecomposable(a, g, kind, t))
          << "trial " << trial << " t=" << t;
      if (r.decomposition) {
        EXPECT_TRUE(VerifyDecomposition<BigInt>(a, *r.decomposition));
        EXPECT_LE(r.decomposition->parts_used, t);
      }
    }
  }
}

TEST(Greedy, Examples) {
  const auto d = GreedyUnion<BigInt>(Ints({0, 1, 2, 3}), 1, UnionKind::kSum);
  EXPECT_EQ(d.parts_used, 2u);
  EXPECT_TRUE(VerifyDecomposition<BigInt>(Ints({0, 1, 2, 3}), d));
  EXPECT_EQ(GreedyUnion<BigInt>(Ints({1, 2, 5, 11}), 1, UnionKind::kSum).parts_used, 1u);
}

TEST(GreedyProperty, NeverBeatsExact) {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testing::RandomSet(rng, 9, 25);
    const auto greedy = GreedyUnion<BigInt>(a, 1, UnionKind::kDiff);
    EXPECT_TRUE(VerifyDecomposition<BigInt>(a, greedy));
    const auto exact = ExactMinUnion<BigInt>(a, 1, UnionKind::kDiff, greedy.parts_used);
    ASSERT_TRUE(exact.minimum.has_value());
    EXPECT_LE(*exact.minimum, greedy.parts_used);
  }
}

// Independent V: distinct values of e_i(y) +/- e_j(y) over lattice tuples.
std::uint64_t OracleCollisionValues(const SetFamily& family, RepMode kind) {
  std::uint64_t total = 0;
  const std::size_t k = family.parts.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::set<DigitVector> values;
      for (std::size_t e = 0; e < family.parts[i].elements.size(); ++e) {
        const auto& a = family.parts[i].elements[e].value;
        const auto& b = family.parts[j].elements[e].value;
        values.insert(kind == RepMode::kSum ? a + b : a - b);
      }
      total += values.size();
    }
  }
  return total;
}

TEST(Counting, ExampleK3) {
  const auto w40 = BuildW(3, 40);
  const auto c = CertifyCounting(w40, 1, 2);
  EXPECT_EQ(c.lhs, 247u);
  EXPECT_EQ(c.collision_values, OracleCollisionValues(w40, RepMode::kSum));
  EXPECT_EQ(c.capacity, BigInt(2) * c.collision_values);
  EXPECT_EQ(c.verdict, BigInt(c.lhs) > c.capacity);
  EXPECT_TRUE(c.verdict);
  EXPECT_TRUE(c.lower_bound_holds);
  EXPECT_TRUE(c.upper_bound_holds);

  const auto c10 = CertifyCounting(BuildW(3, 10), 1, 2);
  EXPECT_EQ(c10.lhs, 12u);
  EXPECT_FALSE(c10.verdict);
}

TEST(Counting, StreamingMatchesMaterialized) {
  for (int n : {10, 20, 33, 41}) {
    const auto a = CertifyCounting(BuildW(3, n), 1, 2);
    const auto b = CertifyCountingStreaming(CodeKind::kHadamard, 3, n, 1, 2);
    EXPECT_EQ(a.lhs, b.lhs);
    EXPECT_EQ(a.collision_values, b.collision_values);
    EXPECT_EQ(a.verdict, b.verdict);
  }
  const auto wc = BuildWCirc(5, 30);
  const auto c = CertifyCounting(wc, 1, 2);
  EXPECT_EQ(c.kind, RepMode::kDiff);
  EXPECT_EQ(c.collision_values, OracleCollisionValues(wc, RepMode::kDiff));
  EXPECT_EQ(c.lhs, CertifyCountingStreaming(CodeKind::kStar, 5, 30, 1, 2).lhs);
}

TEST(Counting, Monotonicity) {
  for (int n = 30; n <= 60; n += 3) {
    const auto strong = CertifyCountingStreaming(CodeKind::kHadamard, 3, n, 2, 2);
    const auto weak_g = CertifyCountingStreaming(CodeKind::kHadamard, 3, n, 1, 2);
    const auto weak_t = CertifyCountingStreaming(CodeKind::kHadamard, 3, n, 2, 1);
    if (strong.verdict) {
      EXPECT_TRUE(weak_g.verdict);
      EXPECT_TRUE(weak_t.verdict);
    }
  }
  // t >= k never certifies anything.
  EXPECT_FALSE(CertifyCountingStreaming(CodeKind::kHadamard, 3, 60, 1, 3).verdict);
}

// A certified (W, g, t) must never yield a SAT search with t parts. The
// union is far past the exact search cap, so a bounded search may only end
// UNSAT or TIMEOUT.
TEST(Counting, CertificateAgreesWithSearch) {
  const auto w = BuildW(3, 40);
  ASSERT_TRUE(CertifyCounting(w, 1, 2).verdict);
  const auto values = w.Values();
  const auto r = SearchDecomposition<DigitVector>(values, 1, UnionKind::kSum, 2, 200000);
  EXPECT_NE(r.status, SearchStatus::kSat);
}

TEST(Mixed, Preconditions) {
  const auto c = CertifyMixedStreaming(6, 20, 1, 6);
  EXPECT_FALSE(c.verdict);
  EXPECT_EQ(c.t_max, 1u);
  EXPECT_EQ(c.group_threshold, 2u);
  EXPECT_EQ(c.alpha, Rational(1, 4));
  EXPECT_FALSE(CertifyMixedStreaming(4, 20, 1, 1).verdict);
  EXPECT_THROW(CertifyMixed(BuildW(3, 10), BuildWCirc(3, 10), 1, 1), ParameterError);
}

TEST(Mixed, FactorPathMatchesStreaming) {
  const auto a = CertifyMixed(BuildWCirc(6, 20), BuildW(6, 20), 1, 1);
  const auto b = CertifyMixedStreaming(6, 20, 1, 1);
  EXPECT_EQ(a.sum_side.lhs, b.sum_side.lhs);
  EXPECT_EQ(a.diff_side.lhs, b.diff_side.lhs);
  EXPECT_EQ(a.sum_side.collision_values, b.sum_side.collision_values);
  EXPECT_EQ(a.diff_side.collision_values, b.diff_side.collision_values);
  EXPECT_EQ(a.sum_side.groups_needed, (a.sum_side.lhs + 3) / 4);
}

TEST(NoLarge, Gamma) {
  EXPECT_EQ(NoLargeGamma(Rational(1, 2)), Rational(1, 3));
  EXPECT_THROW(CertifyNoLargeBSubsetStreaming(5, 20, 1, Rational(1, 2)), ParameterError);
  EXPECT_THROW(CertifyNoLargeBSubsetStreaming(5, 20, 1, Rational(0)), ParameterError);
  EXPECT_THROW(CertifyNoLargeBSubsetStreaming(5, 20, 1, Rational(3, 2)), ParameterError);
}

// With delta = 1 the certificate speaks about the whole product; it may only
// claim "no B2 subset" if the union itself fails both direct checks.
TEST(NoLarge, WholeSetConsistency) {
  const auto p = BuildProduct(5, 20);
  const auto c = CertifyNoLargeBSubset(p.first, p.second, 1, Rational(1));
  EXPECT_EQ(c.product_size, BigInt(p.size()));
  const bool sum_ok = IsB2<DigitPair>(p.elements, 1).pass;
  const bool diff_ok = IsB2Circ<DigitPair>(p.elements, 1).pass;
  if (c.verdict) {
    EXPECT_FALSE(sum_ok);
    EXPECT_FALSE(diff_ok);
  }
  const auto s = CertifyNoLargeBSubsetStreaming(5, 20, 1, Rational(1));
  EXPECT_EQ(s.sum_side.pairs, c.sum_side.pairs);
  EXPECT_EQ(s.diff_side.capacity, c.diff_side.capacity);
}

TEST(Meyer, MeanAndB2) {
  const auto elements = BuildMeyer(9);
  const auto s = MeyerExtract(elements, 7, 1000);
  EXPECT_EQ(s.set_size, 45u);
  EXPECT_GE(s.mean, 0.20);
  EXPECT_LE(s.mean, 0.30);
  EXPECT_EQ(s.b2_failures, 0u);
  EXPECT_EQ(s.sizes.size(), 1000u);
}

TEST(Meyer, Deterministic) {
  const auto elements = BuildMeyer(6);
  const auto a = MeyerExtract(elements, 5, 50);
  const auto b = MeyerExtract(elements, 5, 50);
  EXPECT_EQ(a.sizes, b.sizes);
  EXPECT_EQ(a.best_subset, b.best_subset);
}

// Quadrupling the trials should roughly halve the standard error. Checked
// over several fixed seed pairs with a loose band.
TEST(Meyer, StandardErrorShrinks) {
  const auto elements = BuildMeyer(9);
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    const auto small = MeyerExtract(elements, seed, 500);
    const auto large = MeyerExtract(elements, seed + 100, 2000);
    const double ratio = large.standard_error / small.standard_error;
    EXPECT_GT(ratio, 0.4) << seed;
    EXPECT_LT(ratio, 0.6) << seed;
  }
}

}  // namespace
}  // namespace addcomb
