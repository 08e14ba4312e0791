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

#include <algorithm>
#include <limits>
#include <set>

#include "addcomb/errors.h"

namespace addcomb {

SignVector::SignVector(std::vector<int> entries) {
  if (entries.empty()) throw ParameterError("sign vector must have d >= 1");
  entries_.reserve(entries.size());
  for (int e : entries) {
    if (e != 1 && e != -1) throw ParameterError("sign vector entries must be +1 or -1");
    entries_.push_back(static_cast<std::int8_t>(e));
  }
}

std::string ToString(CodeKind kind) {
  switch (kind) {
    case CodeKind::kHadamard:
      return "hadamard";
    case CodeKind::kStar:
      return "star";
    case CodeKind::kAllSigns:
      return "all_signs";
  }
  return "unknown";
}

CodeKind CodeKindFromString(const std::string& name) {
  if (name == "hadamard") return CodeKind::kHadamard;
  if (name == "star") return CodeKind::kStar;
  if (name == "all_signs") return CodeKind::kAllSigns;
  throw ParseError("unknown code kind: " + name);
}

std::vector<std::vector<int>> WalshRows(int j) {
  if (j < 1) throw ParameterError("walsh order exponent must be >= 1");
  if (j > 20) throw ResourceCap("walsh matrix of order 2^" + std::to_string(j));
  std::vector<std::vector<int>> h = {{1}};
  for (int step = 0; step < j; ++step) {
    const std::size_t n = h.size();
    std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        next[r][c] = h[r][c];
        next[r][c + n] = h[r][c];
        next[r + n][c] = h[r][c];
        next[r + n][c + n] = -h[r][c];
      }
    }
    h = std::move(next);
  }
  return h;
}

CodeFamily HadamardCodeVectors(int k) {
  if (k < 1) throw ParameterError("hadamard code needs k >= 1");
  int j = 1;
  while ((std::int64_t{1} << j) < k) ++j;
  const auto walsh = WalshRows(j);
  CodeFamily family;
  family.kind = CodeKind::kHadamard;
  family.dimension = walsh.size() - 1;
  for (int i = 0; i < k; ++i) {
    family.vectors.emplace_back(std::vector<int>(walsh[i].begin() + 1, walsh[i].end()));
  }
  if (auto failure = CheckCodeFamily(family); !failure.empty()) {
    throw InternalVerificationFailure("hadamard code k=" + std::to_string(k) + ": " + failure);
  }
  return family;
}

CodeFamily StarCodeVectors(int k) {
  if (k < 1) throw ParameterError("star code needs k >= 1");
  CodeFamily family;
  family.kind = CodeKind::kStar;
  family.dimension = static_cast<std::size_t>(k);
  for (int j = 0; j < k; ++j) {
    std::vector<int> v(k, 1);
    v[j] = -1;
    family.vectors.emplace_back(std::move(v));
  }
  if (k < 5) {
    family.warnings.push_back("star code with k=" + std::to_string(k) +
                              " < 5: v_i + v_j is not nonzero in more than d/2 "
                              "coordinates, so the B2[2] guarantee is void");
  }
  if (auto failure = CheckCodeFamily(family); !failure.empty()) {
    throw InternalVerificationFailure("star code k=" + std::to_string(k) + ": " + failure);
  }
  return family;
}

CodeFamily AllSignVectors(int k) {
  if (k < 1) throw ParameterError("sign enumeration needs k >= 1");
  if (k > 20) throw ResourceCap("2^" + std::to_string(k) + " sign vectors");
  CodeFamily family;
  family.kind = CodeKind::kAllSigns;
  family.dimension = static_cast<std::size_t>(k);
  for (std::uint32_t t = 0; t < (1u << k); ++t) {
    std::vector<int> v(k, 1);
    for (int b = 0; b < k; ++b) {
      if (t & (1u << b)) v[b] = -1;
    }
    family.vectors.emplace_back(std::move(v));
  }
  return family;
}

std::string CheckCodeFamily(const CodeFamily& family) {
  const std::size_t d = family.dimension;
  for (const auto& v : family.vectors) {
    if (v.dim() != d) return "vector length differs from d";
  }
  const std::size_t k = family.size();
  switch (family.kind) {
    case CodeKind::kHadamard: {
      if (((d + 1) & d) != 0) return "d is not of the form 2^j - 1";
      std::set<std::vector<int>> sums;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
          std::vector<int> s(d);
          std::size_t zeros = 0;
          for (std::size_t c = 0; c < d; ++c) {
            s[c] = family.vectors[i][c] + family.vectors[j][c];
            zeros += s[c] == 0;
          }
          if (i != j && 2 * zeros <= d) {
            return "v_" + std::to_string(i + 1) + " + v_" + std::to_string(j + 1) +
                   " has only " + std::to_string(zeros) + " zeros";
          }
          if (!sums.insert(std::move(s)).second) {
            return "pairwise sum v_" + std::to_string(i + 1) + " + v_" +
                   std::to_string(j + 1) + " repeats";
          }
        }
      }
      return {};
    }
    case CodeKind::kStar: {
      if (d != k) return "star code must have d = k";
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (i == j) continue;
          for (std::size_t c = 0; c < d; ++c) {
            const bool nonzero = family.vectors[i][c] != family.vectors[j][c];
            if (nonzero != (c == i || c == j)) {
              return "v_" + std::to_string(i + 1) + " - v_" + std::to_string(j + 1) +
                     " has the wrong support";
            }
          }
        }
      }
      return {};
    }
    case CodeKind::kAllSigns: {
      std::set<SignVector> distinct(family.vectors.begin(), family.vectors.end());
      if (distinct.size() != k || k != (std::size_t{1} << d)) return "not all sign vectors";
      return {};
    }
  }
  return "unknown code kind";
}

std::uint64_t BinomialCoefficient(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::int64_t BertrandPrime(std::int64_t d) {
  auto is_prime = [](std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t f = 2; f * f <= x; ++f) {
      if (x % f == 0) return false;
    }
    return true;
  };
  for (std::int64_t p = d + 1; p <= 2 * d; ++p) {
    if (is_prime(p)) return p;
  }
  throw NoPrimeFound("no prime in (" + std::to_string(d) + ", " + std::to_string(2 * d) + "]");
}

BigInt ExactDeterminant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t VerifyAllSubmatrices(const ReducedVandermonde& matrix) {
  const std::size_t d = matrix.d;
  const std::size_t m = matrix.m;
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  std::size_t checked = 0;
  while (true) {
    std::vector<std::vector<BigInt>> sub(m, std::vector<BigInt>(m));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) sub[r][c] = matrix.rows[pick[r]][c];
    }
    if (ExactDeterminant(std::move(sub)) == 0) {
      std::string rows;
      for (auto p : pick) rows += " " + std::to_string(p + 1);
      throw SingularSubmatrix("rows" + rows + " are singular");
    }
    ++checked;
    // Next combination in lexicographic order.
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == d - m + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return checked;
}

ReducedVandermonde MakeReducedVandermonde(int d) {
  if (d < 1) throw ParameterError("vandermonde dimension must be >= 1");
  ReducedVandermonde out;
  out.d = static_cast<std::size_t>(d);
  out.m = (out.d + 1) / 2;
  out.prime = BertrandPrime(d);
  out.rows.assign(out.d, std::vector<std::int64_t>(out.m));
  for (std::size_t r = 1; r <= out.d; ++r) {
    std::int64_t power = 1;
    for (std::size_t c = 0; c < out.m; ++c) {
      out.rows[r - 1][c] = power == 0 ? out.prime : power;
      power = power * static_cast<std::int64_t>(r) % out.prime;
    }
  }
  if (BinomialCoefficient(out.d, out.m) <= kExhaustiveSubmatrixLimit) {
    out.submatrices_checked = VerifyAllSubmatrices(out);
    out.verification = "exhaustive";
  } else {
    // Each m-row submatrix is congruent mod p to a Vandermonde matrix on
    // distinct nonzero nodes r < p, hence has nonzero determinant mod p.
    for (const auto& row : out.rows) {
      for (auto entry : row) {
        if (entry < 1 || entry >= out.prime + 1) {
          throw InternalVerificationFailure("vandermonde entry out of range");
        }
      }
    }
    out.verification = "distinct-nodes-mod-p";
  }
  return out;
}

}  // namespace addcomb
