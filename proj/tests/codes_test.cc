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

#include "addcomb/codes.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "addcomb/errors.h"

namespace addcomb {
namespace {

std::vector<int> Row(const SignVector& v) { return {v.entries().begin(), v.entries().end()}; }

// Leibniz determinant; fine for the m <= 7 matrices used here.
std::int64_t LeibnizDet(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t m = a.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < m; ++i) term *= a[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

bool IsPrime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

TEST(Walsh, SmallOrders) {
  EXPECT_EQ(WalshRows(1), (std::vector<std::vector<int>>{{1, 1}, {1, -1}}));
  EXPECT_EQ(WalshRows(2), (std::vector<std::vector<int>>{
                              {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}));
}

TEST(Walsh, RowsAreOrthogonal) {
  for (int j = 1; j <= 6; ++j) {
    const auto h = WalshRows(j);
    for (std::size_t a = 0; a < h.size(); ++a) {
      for (std::size_t b = 0; b < h.size(); ++b) {
        const int dot = std::inner_product(h[a].begin(), h[a].end(), h[b].begin(), 0);
        EXPECT_EQ(dot, a == b ? static_cast<int>(h.size()) : 0);
      }
    }
  }
}

TEST(HadamardCode, Examples) {
  const auto k2 = HadamardCodeVectors(2);
  EXPECT_EQ(k2.dimension, 1u);
  EXPECT_EQ(Row(k2.vectors[0]), (std::vector<int>{1}));
  EXPECT_EQ(Row(k2.vectors[1]), (std::vector<int>{-1}));
  const auto k4 = HadamardCodeVectors(4);
  EXPECT_EQ(k4.dimension, 3u);
  EXPECT_EQ(Row(k4.vectors[0]), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(Row(k4.vectors[1]), (std::vector<int>{-1, 1, -1}));
  EXPECT_EQ(Row(k4.vectors[2]), (std::vector<int>{1, -1, -1}));
  EXPECT_EQ(Row(k4.vectors[3]), (std::vector<int>{-1, -1, 1}));
  EXPECT_EQ(HadamardCodeVectors(5).dimension, 7u);
  EXPECT_THROW(HadamardCodeVectors(0), ParameterError);
}

// Oracle for the code property: all v_i + v_j (i <= j) distinct, and for
// i != j more than d/2 zero coordinates.
void ExpectHadamardProperty(const CodeFamily& code) {
  std::set<std::vector<int>> sums;
  const std::size_t d = code.dimension;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i; j < code.size(); ++j) {
      std::vector<int> s(d);
      std::size_t zeros = 0;
      for (std::size_t c = 0; c < d; ++c) {
        s[c] = code.vectors[i][c] + code.vectors[j][c];
        zeros += s[c] == 0;
      }
      EXPECT_TRUE(sums.insert(s).second) << "k=" << code.size() << " i=" << i << " j=" << j;
      if (i != j) EXPECT_GT(2 * zeros, d);
    }
  }
}

TEST(HadamardCode, PropertyUpTo64) {
  for (int k = 1; k <= 64; ++k) {
    const auto code = HadamardCodeVectors(k);
    EXPECT_EQ(code.size(), static_cast<std::size_t>(k));
    EXPECT_TRUE(CheckCodeFamily(code).empty());
    ExpectHadamardProperty(code);
  }
}

TEST(StarCode, Vectors) {
  const auto code = StarCodeVectors(5);
  EXPECT_EQ(code.dimension, 5u);
  EXPECT_EQ(Row(code.vectors[0]), (std::vector<int>{-1, 1, 1, 1, 1}));
  EXPECT_EQ(Row(code.vectors[4]), (std::vector<int>{1, 1, 1, 1, -1}));
  EXPECT_TRUE(code.warnings.empty());
  EXPECT_FALSE(StarCodeVectors(3).warnings.empty());
}

TEST(StarCode, DifferencesHaveSmallSupport) {
  for (int k = 2; k <= 20; ++k) {
    const auto code = StarCodeVectors(k);
    std::set<std::vector<int>> diffs;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        std::vector<int> d(k);
        int support = 0;
        for (int c = 0; c < k; ++c) {
          d[c] = code.vectors[i][c] - code.vectors[j][c];
          support += d[c] != 0;
        }
        EXPECT_EQ(support, 2);
        EXPECT_TRUE(diffs.insert(d).second);
      }
    }
  }
}

TEST(AllSigns, Enumeration) {
  const auto code = AllSignVectors(3);
  ASSERT_EQ(code.size(), 8u);
  std::set<std::vector<int>> seen;
  for (const auto& v : code.vectors) seen.insert(Row(v));
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_EQ(Row(code.vectors[0]), (std::vector<int>{1, 1, 1}));
}

TEST(SignVector, Validates) {
  EXPECT_THROW(SignVector(std::vector<int>{1, 0}), ParameterError);
  EXPECT_THROW(SignVector(std::vector<int>{}), ParameterError);
}

TEST(CodeFamily, CheckDetectsDuplicates) {
  CodeFamily bad;
  bad.kind = CodeKind::kStar;
  bad.dimension = 2;
  bad.vectors = {SignVector({1, -1}), SignVector({1, -1})};
  EXPECT_FALSE(CheckCodeFamily(bad).empty());
}

TEST(ReducedVandermonde, Examples) {
  const auto d3 = MakeReducedVandermonde(3);
  EXPECT_EQ(d3.prime, 5);
  EXPECT_EQ(d3.m, 2u);
  EXPECT_EQ(d3.rows, (std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 2}, {1, 3}}));
  const auto d5 = MakeReducedVandermonde(5);
  EXPECT_EQ(d5.prime, 7);
  EXPECT_EQ(d5.rows, (std::vector<std::vector<std::int64_t>>{
                         {1, 1, 1}, {1, 2, 4}, {1, 3, 2}, {1, 4, 2}, {1, 5, 4}}));
  const auto d1 = MakeReducedVandermonde(1);
  EXPECT_EQ(d1.prime, 2);
  EXPECT_EQ(d1.rows, (std::vector<std::vector<std::int64_t>>{{1}}));
  EXPECT_THROW(MakeReducedVandermonde(0), ParameterError);
}

TEST(ReducedVandermonde, BertrandPrimeIsLeastInRange) {
  for (std::int64_t d = 1; d <= 300; ++d) {
    const auto p = BertrandPrime(d);
    EXPECT_TRUE(IsPrime(p));
    EXPECT_GT(p, d);
    EXPECT_LE(p, 2 * d);
    for (std::int64_t q = d + 1; q < p; ++q) EXPECT_FALSE(IsPrime(q));
  }
}

// Every ceil(d/2)-row submatrix is nonsingular over Z, checked with an
// independent Leibniz expansion.
TEST(ReducedVandermonde, AllSubmatricesNonsingular) {
  for (int d = 1; d <= 13; ++d) {
    const auto v = MakeReducedVandermonde(d);
    const std::size_t m = v.m;
    EXPECT_EQ(m, static_cast<std::size_t>((d + 1) / 2));
    std::vector<bool> pick(d, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    std::size_t count = 0;
    do {
      std::vector<std::vector<std::int64_t>> sub;
      for (int r = 0; r < d; ++r)
        if (pick[r]) sub.push_back(v.rows[r]);
      EXPECT_NE(LeibnizDet(sub), 0) << "d=" << d;
      ++count;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    EXPECT_EQ(count, BinomialCoefficient(d, m));
    EXPECT_EQ(VerifyAllSubmatrices(v), count);
  }
}

TEST(ExactDeterminant, MatchesLeibniz) {
  const std::vector<std::vector<std::int64_t>> a{{2, -1, 3}, {0, 4, 1}, {5, 2, -2}};
  std::vector<std::vector<BigInt>> b;
  for (const auto& row : a) b.emplace_back(row.begin(), row.end());
  EXPECT_EQ(ExactDeterminant(b), LeibnizDet(a));
  EXPECT_EQ(ExactDeterminant({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}), 0);
}

TEST(Binomial, Values) {
  EXPECT_EQ(BinomialCoefficient(13, 7), 1716u);
  EXPECT_EQ(BinomialCoefficient(5, 0), 1u);
  EXPECT_EQ(BinomialCoefficient(3, 5), 0u);
}

}  // namespace
}  // namespace addcomb
