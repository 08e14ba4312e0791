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

#include <cmath>
#include <functional>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace addcomb {

std::string ToString(UnionKind kind) {
  switch (kind) {
    case UnionKind::kSum:
      return "sum";
    case UnionKind::kDiff:
      return "diff";
    case UnionKind::kMixed:
      return "mixed";
  }
  return "unknown";
}

UnionKind UnionKindFromString(const std::string& name) {
  if (name == "sum") return UnionKind::kSum;
  if (name == "diff") return UnionKind::kDiff;
  if (name == "mixed") return UnionKind::kMixed;
  throw ParseError("unknown union kind: " + name);
}

std::string ToString(SearchStatus status) {
  switch (status) {
    case SearchStatus::kSat:
      return "SAT";
    case SearchStatus::kUnsat:
      return "UNSAT";
    case SearchStatus::kTimeout:
      return "TIMEOUT";
  }
  return "unknown";
}

namespace {

using TupleVisitor = std::function<void(const std::function<void(const TuplePoint&)>&)>;

struct CollisionCounts {
  std::uint64_t lhs = 0;
  std::uint64_t values = 0;
  std::vector<PairCollisionCount> per_pair;
};

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

// For each pair i < j, the value phi(y).(v_i + s v_j) depends only on the
// coordinates of y where v_i + s v_j != 0, so distinct values are counted as
// distinct projections onto that support.
CollisionCounts CountCollisions(const CodeFamily& code, RepMode kind,
                                const TupleVisitor& for_each_tuple) {
  const int sign = kind == RepMode::kSum ? 1 : -1;
  const std::size_t k = code.size();
  std::vector<std::vector<std::size_t>> supports;
  CollisionCounts out;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      auto& s = supports.emplace_back();
      for (std::size_t c = 0; c < code.dimension; ++c) {
        if (code.vectors[i][c] + sign * code.vectors[j][c] != 0) s.push_back(c);
      }
      out.per_pair.push_back({static_cast<std::uint32_t>(i + 1),
                              static_cast<std::uint32_t>(j + 1), s.size(), 0});
    }
  }
  std::vector<std::unordered_set<std::vector<std::uint32_t>, VectorHash>> seen(supports.size());
  std::vector<std::uint32_t> key;
  for_each_tuple([&](const TuplePoint& t) {
    ++out.lhs;
    for (std::size_t p = 0; p < supports.size(); ++p) {
      key.clear();
      for (std::size_t c : supports[p]) key.push_back(t.coords[c]);
      seen[p].insert(key);
    }
  });
  for (std::size_t p = 0; p < supports.size(); ++p) {
    out.per_pair[p].values = seen[p].size();
    out.values += seen[p].size();
  }
  return out;
}

RepMode KindForCode(CodeKind code) {
  if (code == CodeKind::kHadamard) return RepMode::kSum;
  if (code == CodeKind::kStar) return RepMode::kDiff;
  throw ParameterError("certificates need a Hadamard (W) or star (Wcirc) family");
}

TupleVisitor FamilyTuples(const SetFamily& family) {
  return [&family](const std::function<void(const TuplePoint&)>& visit) {
    if (family.parts.empty()) return;
    for (const auto& e : family.parts.front().elements) visit(e.tuple);
  };
}

TupleVisitor LatticeTuples(const ReducedVandermonde& matrix, int n) {
  return [&matrix, n](const std::function<void(const TuplePoint&)>& visit) {
    ForEachLatticePoint(matrix, static_cast<std::uint32_t>(n), visit);
  };
}

BigInt Power(std::uint64_t base, std::size_t exponent) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

CountingCertificate BuildCounting(const CodeFamily& code, const ReducedVandermonde& matrix, int k,
                                  int n, std::uint64_t g, std::uint64_t t,
                                  const TupleVisitor& tuples) {
  if (g < 1) throw ParameterError("g must be >= 1");
  if (t < 1) throw ParameterError("parts must be >= 1");
  CountingCertificate cert;
  cert.kind = KindForCode(code.kind);
  cert.family = cert.kind == RepMode::kSum ? "W" : "Wcirc";
  cert.k = k;
  cert.n = n;
  cert.d = matrix.d;
  cert.m = matrix.m;
  cert.g = g;
  cert.t = t;
  const auto counts = CountCollisions(code, cert.kind, tuples);
  cert.lhs = counts.lhs;
  cert.collision_values = counts.values;
  cert.per_pair = counts.per_pair;
  cert.capacity = BigInt(t) * g * counts.values;

  cert.lattice_lower_bound = LatticeCountLowerBound(matrix.d, matrix.m, static_cast<std::uint32_t>(n));
  cert.lower_bound_holds = cert.lattice_lower_bound <= cert.lhs;
  const std::size_t exponent = cert.kind == RepMode::kSum ? matrix.m - 1 : 2;
  cert.collision_upper_bound =
      BigInt(BinomialCoefficient(static_cast<std::uint64_t>(k), 2)) * Power(n, exponent);
  cert.upper_bound_holds = BigInt(cert.collision_values) <= cert.collision_upper_bound;

  if (t >= static_cast<std::uint64_t>(k)) {
    cert.verdict = false;
    cert.note = "t >= k: one vector index per part avoids every same-part pair";
  } else {
    cert.verdict = BigInt(cert.lhs) > cert.capacity;
    cert.note = cert.verdict ? "lhs exceeds capacity: no decomposition into t parts"
                             : "lhs does not exceed capacity: inconclusive";
  }
  return cert;
}

}  // namespace

CountingCertificate CertifyCounting(const SetFamily& family, std::uint64_t g, std::uint64_t t) {
  if (!family.matrix) throw ParameterError("certificates need a lattice family (W or Wcirc)");
  return BuildCounting(family.code, *family.matrix, family.provenance.k, family.provenance.n, g, t,
                       FamilyTuples(family));
}

CountingCertificate CertifyCountingStreaming(CodeKind code, int k, int n, std::uint64_t g,
                                             std::uint64_t t) {
  if (k < 2) throw ParameterError("certificates need k >= 2");
  if (n < 1) throw ParameterError("n must be >= 1");
  const CodeFamily family = code == CodeKind::kHadamard ? HadamardCodeVectors(k)
                            : code == CodeKind::kStar   ? StarCodeVectors(k)
                                                        : throw ParameterError("unsupported code");
  const auto matrix = MakeReducedVandermonde(static_cast<int>(family.dimension));
  return BuildCounting(family, matrix, k, n, g, t, LatticeTuples(matrix, n));
}

namespace {

MixedSide MakeMixedSide(const CodeFamily& code, const TupleVisitor& tuples, std::uint64_t g,
                        std::uint64_t t) {
  MixedSide side;
  side.kind = KindForCode(code.kind);
  const auto counts = CountCollisions(code, side.kind, tuples);
  side.lhs = counts.lhs;
  side.groups_needed = (counts.lhs + 3) / 4;
  side.collision_values = counts.values;
  side.capacity = BigInt(t) * g * counts.values;
  side.verdict = BigInt(side.groups_needed) > side.capacity;
  return side;
}

MixedCertificate BuildMixed(int k, int n, std::uint64_t g, std::uint64_t t,
                            const CodeFamily& star, const TupleVisitor& star_tuples,
                            const CodeFamily& hadamard, const TupleVisitor& hadamard_tuples) {
  if (g < 1) throw ParameterError("g must be >= 1");
  if (t < 1) throw ParameterError("parts must be >= 1");
  MixedCertificate cert;
  cert.k = k;
  cert.n = n;
  cert.g = g;
  cert.t = t;
  cert.t_max = k / 3 >= 1 ? static_cast<std::uint64_t>(k / 3 - 1) : 0;
  cert.group_threshold = static_cast<std::uint64_t>((k + 2) / 3);
  cert.alpha = Rational(1, 4);
  cert.sum_side = MakeMixedSide(hadamard, hadamard_tuples, g, t);
  cert.diff_side = MakeMixedSide(star, star_tuples, g, t);
  if (k < 5) {
    cert.note = "k < 5: the star factor is not B2[2] and the argument does not apply";
  } else if (t > cert.t_max) {
    cert.note = "t > floor(k/3) - 1: pigeonhole on groups of size k/3 does not apply";
  } else {
    cert.verdict = cert.sum_side.verdict && cert.diff_side.verdict;
    cert.note = cert.verdict ? "both halves exceed capacity: no mixed decomposition into t parts"
                             : "some half does not exceed capacity: inconclusive";
  }
  return cert;
}

}  // namespace

MixedCertificate CertifyMixed(const SetFamily& wcirc, const SetFamily& w, std::uint64_t g,
                              std::uint64_t t) {
  if (wcirc.code.kind != CodeKind::kStar || w.code.kind != CodeKind::kHadamard) {
    throw ParameterError("mixed certificate needs (Wcirc, W) factors");
  }
  if (wcirc.provenance.k != w.provenance.k || wcirc.provenance.n != w.provenance.n) {
    throw ParameterError("factors must share k and n");
  }
  return BuildMixed(w.provenance.k, w.provenance.n, g, t, wcirc.code, FamilyTuples(wcirc), w.code,
                    FamilyTuples(w));
}

MixedCertificate CertifyMixedStreaming(int k, int n, std::uint64_t g, std::uint64_t t) {
  if (k < 2) throw ParameterError("certificates need k >= 2");
  const auto star = StarCodeVectors(k);
  const auto hadamard = HadamardCodeVectors(k);
  const auto star_matrix = MakeReducedVandermonde(static_cast<int>(star.dimension));
  const auto hadamard_matrix = MakeReducedVandermonde(static_cast<int>(hadamard.dimension));
  return BuildMixed(k, n, g, t, star, LatticeTuples(star_matrix, n), hadamard,
                    LatticeTuples(hadamard_matrix, n));
}

Rational NoLargeGamma(const Rational& delta) {
  const Rational half = delta / 2;
  return half / (1 - half);
}

namespace {

BigInt CeilRational(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) < numerator(r)) ++q;
  return q;
}

NoLargeSide MakeNoLargeSide(const CodeFamily& code, const TupleVisitor& tuples, std::uint64_t g,
                            const Rational& gamma, std::uint64_t group_min) {
  NoLargeSide side;
  side.kind = KindForCode(code.kind);
  const auto counts = CountCollisions(code, side.kind, tuples);
  side.lhs = counts.lhs;
  side.groups = static_cast<std::uint64_t>(CeilRational(gamma * counts.lhs));
  side.group_min = group_min;
  side.pairs = BigInt(BinomialCoefficient(group_min, 2)) * side.groups;
  side.collision_values = counts.values;
  side.capacity = BigInt(g) * counts.values;
  side.verdict = side.pairs > side.capacity;
  return side;
}

NoLargeBSubsetCertificate BuildNoLarge(int k, int n, std::uint64_t g, const Rational& delta,
                                       const CodeFamily& star, const TupleVisitor& star_tuples,
                                       const CodeFamily& hadamard,
                                       const TupleVisitor& hadamard_tuples) {
  if (g < 1) throw ParameterError("g must be >= 1");
  if (delta <= 0 || delta > 1) throw ParameterError("delta must lie in (0, 1]");
  const Rational group = delta * k / 2;
  if (group < 2) throw ParameterError("delta k / 2 must be >= 2");
  NoLargeBSubsetCertificate cert;
  cert.k = k;
  cert.n = n;
  cert.g = g;
  cert.delta = delta;
  cert.gamma = NoLargeGamma(delta);
  const auto group_min = static_cast<std::uint64_t>(CeilRational(group));
  cert.sum_side = MakeNoLargeSide(hadamard, hadamard_tuples, g, cert.gamma, group_min);
  cert.diff_side = MakeNoLargeSide(star, star_tuples, g, cert.gamma, group_min);
  cert.product_size = BigInt(cert.sum_side.lhs) * k * cert.diff_side.lhs * k;
  cert.threshold_size = CeilRational(delta * cert.product_size);
  cert.verdict = cert.sum_side.verdict && cert.diff_side.verdict;
  return cert;
}

}  // namespace

NoLargeBSubsetCertificate CertifyNoLargeBSubset(const SetFamily& wcirc, const SetFamily& w,
                                                std::uint64_t g, const Rational& delta) {
  if (wcirc.code.kind != CodeKind::kStar || w.code.kind != CodeKind::kHadamard) {
    throw ParameterError("certificate needs (Wcirc, W) factors");
  }
  if (wcirc.provenance.k != w.provenance.k || wcirc.provenance.n != w.provenance.n) {
    throw ParameterError("factors must share k and n");
  }
  return BuildNoLarge(w.provenance.k, w.provenance.n, g, delta, wcirc.code, FamilyTuples(wcirc),
                      w.code, FamilyTuples(w));
}

NoLargeBSubsetCertificate CertifyNoLargeBSubsetStreaming(int k, int n, std::uint64_t g,
                                                         const Rational& delta) {
  if (k < 2) throw ParameterError("certificates need k >= 2");
  const auto star = StarCodeVectors(k);
  const auto hadamard = HadamardCodeVectors(k);
  const auto star_matrix = MakeReducedVandermonde(static_cast<int>(star.dimension));
  const auto hadamard_matrix = MakeReducedVandermonde(static_cast<int>(hadamard.dimension));
  return BuildNoLarge(k, n, g, delta, star, LatticeTuples(star_matrix, n), hadamard,
                      LatticeTuples(hadamard_matrix, n));
}

MeyerStats MeyerExtract(std::span<const MeyerElement> elements, std::uint64_t seed,
                        std::uint64_t trials) {
  if (elements.empty()) throw ParameterError("meyer extraction needs a nonempty set");
  if (trials < 1) throw ParameterError("trials must be >= 1");
  std::uint32_t max_index = 0;
  for (const auto& e : elements) {
    if (e.low >= e.high) throw ParameterError("meyer labels need m < n");
    max_index = std::max(max_index, e.high);
  }
  MeyerStats stats;
  stats.seed = seed;
  stats.trials = trials;
  stats.set_size = elements.size();
  Rng rng(seed);
  std::vector<bool> upper(max_index + 1);
  std::uint64_t total = 0;
  std::vector<std::size_t> chosen;
  std::vector<DigitVector> values;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (std::uint32_t i = 0; i <= max_index; ++i) upper[i] = rng.Bit();
    chosen.clear();
    values.clear();
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (upper[elements[e].high] && !upper[elements[e].low]) {
        chosen.push_back(e);
        values.push_back(elements[e].value);
      }
    }
    if (!values.empty() && !IsB2(std::span<const DigitVector>(values), 2).pass) {
      ++stats.b2_failures;
    }
    stats.sizes.push_back(chosen.size());
    total += chosen.size();
    if (trial == 0 || chosen.size() > stats.best_subset.size()) {
      stats.best_trial = trial;
      stats.best_subset = chosen;
    }
  }
  stats.mean_fraction = Rational(BigInt(total), BigInt(trials) * elements.size());
  const double denom = static_cast<double>(elements.size());
  stats.mean = static_cast<double>(total) / static_cast<double>(trials) / denom;
  if (trials > 1) {
    double ss = 0;
    for (auto s : stats.sizes) {
      const double x = static_cast<double>(s) / denom - stats.mean;
      ss += x * x;
    }
    stats.stddev = std::sqrt(ss / static_cast<double>(trials - 1));
    stats.standard_error = stats.stddev / std::sqrt(static_cast<double>(trials));
  }
  return stats;
}

}  // namespace addcomb
