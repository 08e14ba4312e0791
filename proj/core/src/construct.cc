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

#include "addcomb/construct.h"

#include <algorithm>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace addcomb {

std::size_t SetFamily::size() const {
  std::size_t total = 0;
  for (const auto& part : parts) total += part.elements.size();
  return total;
}

std::vector<DigitVector> SetFamily::Values() const {
  std::vector<DigitVector> out;
  out.reserve(size());
  for (const auto& part : parts) {
    for (const auto& e : part.elements) out.push_back(e.value);
  }
  return out;
}

std::vector<ElementRef> SetFamily::Refs() const {
  std::vector<ElementRef> out;
  out.reserve(size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t i = 0; i < parts[p].elements.size(); ++i) out.push_back({p, i});
  }
  return out;
}

std::vector<std::vector<DigitVector>> SetFamily::PartValues() const {
  std::vector<std::vector<DigitVector>> out;
  out.reserve(parts.size());
  for (const auto& part : parts) {
    auto& values = out.emplace_back();
    values.reserve(part.elements.size());
    for (const auto& e : part.elements) values.push_back(e.value);
  }
  return out;
}

std::vector<TuplePoint> SetFamily::Tuples() const {
  std::vector<TuplePoint> out;
  if (parts.empty()) return out;
  out.reserve(parts.front().elements.size());
  for (const auto& e : parts.front().elements) out.push_back(e.tuple);
  return out;
}

void ForEachLatticePoint(const ReducedVandermonde& matrix, std::uint32_t n,
                         const std::function<void(const TuplePoint&)>& visit) {
  const std::size_t d = matrix.d;
  const std::size_t m = matrix.m;
  // rest[c][r]: least contribution of columns c.. to row r (all y >= 1).
  std::vector<std::vector<std::int64_t>> rest(m + 1, std::vector<std::int64_t>(d, 0));
  for (std::size_t c = m; c-- > 0;) {
    for (std::size_t r = 0; r < d; ++r) rest[c][r] = rest[c + 1][r] + matrix.rows[r][c];
  }
  for (std::size_t r = 0; r < d; ++r) {
    if (rest[0][r] > static_cast<std::int64_t>(n)) return;
  }

  TuplePoint point;
  point.coords.assign(d, 0);
  point.preimage.assign(m, 0);
  std::vector<std::vector<std::int64_t>> partial(m + 1, std::vector<std::int64_t>(d, 0));

  std::function<void(std::size_t)> recurse = [&](std::size_t c) {
    if (c == m) {
      for (std::size_t r = 0; r < d; ++r) point.coords[r] = static_cast<std::uint32_t>(partial[m][r]);
      visit(point);
      return;
    }
    for (std::int64_t y = 1;; ++y) {
      bool fits = true;
      for (std::size_t r = 0; r < d; ++r) {
        partial[c + 1][r] = partial[c][r] + matrix.rows[r][c] * y;
        if (partial[c + 1][r] + rest[c + 1][r] > static_cast<std::int64_t>(n)) fits = false;
      }
      if (!fits) break;
      point.preimage[c] = static_cast<std::uint32_t>(y);
      recurse(c + 1);
    }
  };
  recurse(0);
}

std::vector<TuplePoint> LatticePoints(const ReducedVandermonde& matrix, std::uint32_t n) {
  std::vector<TuplePoint> out;
  ForEachLatticePoint(matrix, n, [&](const TuplePoint& p) { out.push_back(p); });
  return out;
}

std::uint64_t LatticeCountLowerBound(std::size_t d, std::size_t m, std::uint32_t n) {
  const std::uint64_t base = n / (2 * d * m);
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < m; ++i) out *= base;
  return out;
}

DigitVector ElementValue(std::span<const std::uint32_t> coords, const SignVector& sign) {
  const std::uint32_t d = static_cast<std::uint32_t>(coords.size());
  std::map<std::uint32_t, int> terms;
  for (std::uint32_t c = 0; c < d; ++c) {
    terms.emplace(coords[c] * d + c + 1, sign[c]);
  }
  return DigitVector::FromMap(terms);
}

namespace {

SetFamily BuildLatticeFamily(const std::string& kind, const std::string& part_prefix,
                             CodeFamily code, int k, int n) {
  if (n < 1) throw ParameterError("n must be >= 1");
  SetFamily family;
  family.matrix = MakeReducedVandermonde(static_cast<int>(code.dimension));
  const auto& matrix = *family.matrix;
  family.provenance.kind = kind;
  family.provenance.k = k;
  family.provenance.n = n;
  family.provenance.d = static_cast<int>(matrix.d);
  family.provenance.m = static_cast<int>(matrix.m);
  family.provenance.prime = matrix.prime;
  family.provenance.code = ToString(code.kind);
  family.provenance.warnings = code.warnings;

  const auto tuples = LatticePoints(matrix, static_cast<std::uint32_t>(n));
  if (tuples.empty()) {
    throw EmptyConstruction(kind + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
                            ": no lattice point has every coordinate <= n");
  }
  for (std::size_t j = 0; j < code.size(); ++j) {
    Part part;
    part.name = part_prefix + "_" + std::to_string(j + 1);
    part.elements.reserve(tuples.size());
    for (const auto& t : tuples) {
      part.elements.push_back({t, static_cast<std::uint32_t>(j + 1),
                               ElementValue(t.coords, code.vectors[j])});
    }
    family.parts.push_back(std::move(part));
  }
  family.code = std::move(code);
  return family;
}

}  // namespace

SetFamily BuildW(int k, int n) {
  if (k < 2) throw ParameterError("W needs k >= 2");
  return BuildLatticeFamily("W", "W", HadamardCodeVectors(k), k, n);
}

SetFamily BuildWCirc(int k, int n) {
  if (k < 2) throw ParameterError("Wcirc needs k >= 2");
  return BuildLatticeFamily("Wcirc", "Wcirc", StarCodeVectors(k), k, n);
}

SetFamily BuildProposition(int k, int n) {
  if (k < 1) throw ParameterError("proposition needs k >= 1");
  if (n < 1) throw ParameterError("n must be >= 1");
  std::uint64_t per_part = 1;
  for (int i = 0; i < k; ++i) {
    per_part *= static_cast<std::uint64_t>(n);
    if (per_part > kDefaultProductCap) throw ResourceCap("proposition part exceeds element cap");
  }
  SetFamily family;
  family.code = AllSignVectors(k);
  family.provenance.kind = "proposition";
  family.provenance.k = k;
  family.provenance.n = n;
  family.provenance.d = k;
  family.provenance.m = k;
  family.provenance.code = ToString(family.code.kind);

  std::vector<TuplePoint> tuples;
  std::vector<std::uint32_t> idx(k, 1);
  while (true) {
    tuples.push_back({idx, idx});
    int c = k - 1;
    while (c >= 0 && idx[c] == static_cast<std::uint32_t>(n)) idx[c--] = 1;
    if (c < 0) break;
    ++idx[c];
  }
  for (std::size_t j = 0; j < family.code.size(); ++j) {
    Part part;
    part.name = "S_" + std::to_string(j + 1);
    for (const auto& t : tuples) {
      part.elements.push_back({t, static_cast<std::uint32_t>(j + 1),
                               ElementValue(t.coords, family.code.vectors[j])});
    }
    family.parts.push_back(std::move(part));
  }
  return family;
}

ProductFamily MakeProduct(SetFamily first, SetFamily second, std::size_t cap) {
  const std::size_t a = first.size();
  const std::size_t b = second.size();
  if (a != 0 && b > cap / a) {
    throw ResourceCap("product of " + std::to_string(a) + " x " + std::to_string(b) +
                      " elements exceeds cap " + std::to_string(cap));
  }
  ProductFamily product;
  product.provenance = second.provenance;
  product.provenance.kind = "product";
  product.provenance.d = 0;
  product.provenance.m = 0;
  product.provenance.prime = 0;
  product.provenance.code = first.provenance.code + "x" + second.provenance.code;
  product.provenance.warnings = first.provenance.warnings;
  for (const auto& w : second.provenance.warnings) product.provenance.warnings.push_back(w);

  const auto left = first.Values();
  const auto right = second.Values();
  product.elements.reserve(a * b);
  product.index.reserve(a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      product.elements.push_back({left[i], right[j]});
      product.index.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  product.first = std::move(first);
  product.second = std::move(second);
  return product;
}

ProductFamily BuildProduct(int k, int n, std::size_t cap) {
  if (k < 2) throw ParameterError("product needs k >= 2");
  auto product = MakeProduct(BuildWCirc(k, n), BuildW(k, n), cap);
  product.provenance.k = k;
  product.provenance.n = n;
  return product;
}

std::vector<MeyerElement> BuildMeyer(int n_max) {
  if (n_max < 1) throw ParameterError("meyer needs n_max >= 1");
  std::vector<MeyerElement> out;
  out.reserve(static_cast<std::size_t>(n_max) * (n_max + 1) / 2);
  for (std::uint32_t high = 1; high <= static_cast<std::uint32_t>(n_max); ++high) {
    for (std::uint32_t low = 0; low < high; ++low) {
      out.push_back({high, low,
                     DigitVector::FromTerms({{high, 1}, {low, -1}})});
    }
  }
  return out;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Solves the square system A y = b exactly; nullopt when A is singular.
std::optional<std::vector<Rational>> SolveExact(std::vector<std::vector<Rational>> a,
                                                std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

std::optional<DecodedElement> DecodeElement(const DigitVector& value, const SetFamily& family) {
  const std::size_t d = family.dimension();
  if (d == 0 || value.size() != d) return std::nullopt;
  std::vector<std::uint32_t> coords(d, 0);
  std::vector<int> signs(d, 0);
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::uint32_t e = value.exponent(i);
    const int c = value.coeff(i);
    if (c != 1 && c != -1) return std::nullopt;
    if (e < d + 1) return std::nullopt;  // index would be 0
    const std::size_t coord = (e - 1) % d;
    const std::uint32_t index = static_cast<std::uint32_t>((e - 1 - coord) / d);
    if (coords[coord] != 0) return std::nullopt;
    coords[coord] = index;
    signs[coord] = c;
  }
  DecodedElement out;
  const SignVector sign(signs);
  const auto it = std::find(family.code.vectors.begin(), family.code.vectors.end(), sign);
  if (it == family.code.vectors.end()) return std::nullopt;
  out.vector_index = static_cast<std::uint32_t>(it - family.code.vectors.begin() + 1);
  out.tuple.coords = coords;

  if (!family.matrix) {
    out.tuple.preimage = coords;
    return out;
  }
  const auto& mat = *family.matrix;
  std::vector<std::vector<Rational>> a(mat.m, std::vector<Rational>(mat.m));
  std::vector<Rational> b(mat.m);
  for (std::size_t r = 0; r < mat.m; ++r) {
    for (std::size_t c = 0; c < mat.m; ++c) a[r][c] = mat.rows[r][c];
    b[r] = coords[r];
  }
  auto solved = SolveExact(std::move(a), std::move(b));
  if (!solved) return std::nullopt;
  out.tuple.preimage.resize(mat.m);
  for (std::size_t c = 0; c < mat.m; ++c) {
    const Rational& y = (*solved)[c];
    if (denominator(y) != 1 || numerator(y) < 1) return std::nullopt;
    out.tuple.preimage[c] = static_cast<std::uint32_t>(numerator(y));
  }
  for (std::size_t r = 0; r < mat.d; ++r) {
    std::int64_t row_value = 0;
    for (std::size_t c = 0; c < mat.m; ++c) row_value += mat.rows[r][c] * out.tuple.preimage[c];
    if (row_value != static_cast<std::int64_t>(coords[r])) return std::nullopt;
  }
  return out;
}

std::string CheckFamilyInvariants(const SetFamily& family) {
  const std::size_t d = family.dimension();
  std::unordered_set<DigitVector> seen;
  for (const auto& part : family.parts) {
    for (const auto& e : part.elements) {
      if (!seen.insert(e.value).second) {
        return "value " + e.value.ToSparseString() + " appears twice (parts not disjoint)";
      }
      if (e.value.size() != d) return "element " + e.value.ToSparseString() + " lacks d digits";
      const auto& v = family.code.vectors.at(e.vector_index - 1);
      for (std::size_t c = 0; c < d; ++c) {
        const std::uint32_t exponent = e.tuple.coords[c] * static_cast<std::uint32_t>(d) +
                                       static_cast<std::uint32_t>(c) + 1;
        if (e.value.CoeffAt(exponent) != v[c]) {
          return "element " + e.value.ToSparseString() + " has wrong digit at 5^" +
                 std::to_string(exponent);
        }
      }
    }
  }
  if (seen.size() != family.size()) return "union size differs from sum of part sizes";
  return {};
}

IntPoint ToIntPoint(const DigitVector& v) { return IntPoint({v.ToInteger()}); }

IntPoint ToIntPoint(const DigitPair& v) {
  return IntPoint({v.first.ToInteger(), v.second.ToInteger()});
}

IntPoint ToIntPoint(const BigInt& v) { return IntPoint({v}); }

BigInt F2Map(const IntPoint& point, const BigInt& base) {
  BigInt total = 0;
  BigInt power = base;
  for (const auto& c : point.coords) {
    total += c * power;
    power *= base;
  }
  return total;
}

F2Embedding F2Embed(std::span<const IntPoint> points, std::size_t verify_threshold) {
  if (points.empty()) throw ParameterError("cannot embed an empty set");
  const std::size_t dim = points.front().dim();
  BigInt largest = 0;
  for (const auto& p : points) {
    if (p.dim() != dim) throw ParameterError("points of mixed dimension");
    for (const auto& c : p.coords) largest = std::max<BigInt>(largest, abs(c));
  }
  F2Embedding out;
  out.base = largest == 0 ? BigInt(5) : BigInt(5 * largest);
  out.domain.assign(points.begin(), points.end());
  out.image.reserve(points.size());
  for (const auto& p : points) out.image.push_back(F2Map(p, out.base));

  if (points.size() <= verify_threshold) {
    out.check = "exhaustive";
    out.verified = IsF2Isomorphism<IntPoint, BigInt>(out.domain, out.image);
  } else {
    // Coordinate sums and differences lie in [-2 max, 2 max], strictly
    // inside (-M/2, M/2), so base-M digits are recovered uniquely.
    out.check = "digit-uniqueness";
    out.verified = 4 * largest < out.base;
  }
  if (!out.verified) throw InternalVerificationFailure("F2 embedding failed verification");
  return out;
}

DyadicPacking DyadicPack(const std::vector<std::vector<BigInt>>& sets) {
  DyadicPacking out;
  int prev = -1;
  for (const auto& set : sets) {
    if (set.empty()) throw ParameterError("dyadic packing needs nonempty sets");
    auto sorted = set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const BigInt width = sorted.back() - sorted.front();
    int exponent = 0;
    while ((BigInt(1) << exponent) < width + 1) ++exponent;
    exponent = std::max(exponent, prev + 1);
    prev = exponent;
    PackedBlock block;
    block.exponent = exponent;
    block.offset = (BigInt(1) << exponent) - sorted.front();
    block.first = sorted.front() + block.offset;
    block.last = sorted.back() + block.offset;
    for (const auto& x : sorted) out.elements.push_back(x + block.offset);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace addcomb
