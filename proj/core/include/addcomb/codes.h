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

#ifndef ADDCOMB_CODES_H_
#define ADDCOMB_CODES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "addcomb/bigint.h"

namespace addcomb {

// A vector in {+1, -1}^d.
class SignVector {
 public:
  SignVector() = default;
  // Throws ParameterError unless every entry is +1 or -1 and d >= 1.
  explicit SignVector(std::vector<int> entries);

  std::size_t dim() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> entries_;
};

enum class CodeKind {
  kHadamard,  // Walsh rows without the leading column; d = 2^j - 1
  kStar,      // -1 in coordinate j, +1 elsewhere; d = k
  kAllSigns,  // every vector of {+1,-1}^k, in binary-counting order
};

std::string ToString(CodeKind kind);
CodeKind CodeKindFromString(const std::string& name);

struct CodeFamily {
  CodeKind kind = CodeKind::kHadamard;
  std::size_t dimension = 0;
  std::vector<SignVector> vectors;
  // Non-fatal caveats that callers must carry into reports.
  std::vector<std::string> warnings;

  std::size_t size() const { return vectors.size(); }
};

// Sylvester-Walsh matrix of order 2^j: H_1 = [1], H_2n = [[H, H], [H, -H]].
std::vector<std::vector<int>> WalshRows(int j);

// The first k Walsh rows of order 2^j with the leading +1 dropped, for the
// least j >= 1 with 2^j >= k. Every pairwise sum v_i + v_j (i <= j) is
// distinct and, for i != j, has more than d/2 zero coordinates; both facts
// are checked exhaustively before returning.
CodeFamily HadamardCodeVectors(int k);

// v_j = -1 at coordinate j, +1 elsewhere, d = k. Warns when k < 5.
CodeFamily StarCodeVectors(int k);

// All 2^k sign vectors; vector t has -1 exactly at the set bits of t.
CodeFamily AllSignVectors(int k);

// Exhaustive invariant check for a family of the given kind. Returns an
// empty string when the family is valid, else a description of the failure.
std::string CheckCodeFamily(const CodeFamily& family);

// d x ceil(d/2) matrix with rows (1, r, r^2, ...) mod p for r = 1..d, p the
// least prime in (d, 2d], residue 0 replaced by p.
struct ReducedVandermonde {
  std::size_t d = 0;
  std::size_t m = 0;
  std::int64_t prime = 0;
  std::vector<std::vector<std::int64_t>> rows;
  // "exhaustive" when every m-row determinant was computed, otherwise
  // "distinct-nodes-mod-p".
  std::string verification;
  std::size_t submatrices_checked = 0;
};

// Smallest prime p with d < p <= 2d. Throws NoPrimeFound.
std::int64_t BertrandPrime(std::int64_t d);

// Above this many m-row subsets the determinant check switches to the
// distinct-nodes argument.
inline constexpr std::uint64_t kExhaustiveSubmatrixLimit = 200000;

ReducedVandermonde MakeReducedVandermonde(int d);

// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt ExactDeterminant(std::vector<std::vector<BigInt>> matrix);

// Checks every m-row submatrix and returns how many were checked. Throws
// SingularSubmatrix on the first zero determinant.
std::size_t VerifyAllSubmatrices(const ReducedVandermonde& matrix);

std::uint64_t BinomialCoefficient(std::uint64_t n, std::uint64_t r);

}  // namespace addcomb

#endif  // ADDCOMB_CODES_H_
