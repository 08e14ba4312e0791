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

#ifndef ADDCOMB_CONSTRUCT_H_
#define ADDCOMB_CONSTRUCT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "addcomb/bigint.h"
#include "addcomb/codes.h"
#include "addcomb/digit_vector.h"
#include "addcomb/elements.h"
#include "addcomb/errors.h"

namespace addcomb {

// A point M*y of the lattice with its preimage y. Indices start at 1.
struct TuplePoint {
  std::vector<std::uint32_t> coords;
  std::vector<std::uint32_t> preimage;

  friend bool operator==(const TuplePoint&, const TuplePoint&) = default;
  friend auto operator<=>(const TuplePoint&, const TuplePoint&) = default;
};

// An element phi(tuple) . v_j, where coordinate c (1-based) of the tuple
// indexes the sequence {5^(i*d + c)}.
struct LabeledElement {
  TuplePoint tuple;
  std::uint32_t vector_index = 0;  // 1-based j
  DigitVector value;
};

struct Part {
  std::string name;
  std::vector<LabeledElement> elements;
};

// Where a family came from. Every field is echoed into reports.
struct Provenance {
  std::string kind;  // W | Wcirc | proposition | meyer | product | integers
  int k = 0;
  int n = 0;
  int d = 0;
  int m = 0;
  std::int64_t prime = 0;
  std::string code;
  std::vector<std::string> warnings;
  // Lattice preimages and sequence indices start at 1, never 0.
  std::uint32_t index_origin = 1;
};

struct ElementRef {
  std::size_t part = 0;
  std::size_t index = 0;

  friend bool operator==(const ElementRef&, const ElementRef&) = default;
  friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

// A partitioned set of integers (ambient dimension 1) with labels.
struct SetFamily {
  Provenance provenance;
  CodeFamily code;
  // Absent for the proposition sets, whose lattice is all of [1, n]^k.
  std::optional<ReducedVandermonde> matrix;
  std::vector<Part> parts;

  std::size_t size() const;
  std::size_t dimension() const { return code.dimension; }
  const LabeledElement& at(ElementRef ref) const { return parts[ref.part].elements[ref.index]; }

  // Union in part-major order; position i of the result corresponds to
  // Refs()[i].
  std::vector<DigitVector> Values() const;
  std::vector<ElementRef> Refs() const;
  std::vector<std::vector<DigitVector>> PartValues() const;
  // The tuples every part is built over, in lattice order.
  std::vector<TuplePoint> Tuples() const;
};

// ---------------------------------------------------------------------------
// Lattice enumeration

// Calls `visit` for every y in {1, 2, ...}^m, lexicographically, whose image
// M*y has every coordinate <= n.
void ForEachLatticePoint(const ReducedVandermonde& matrix, std::uint32_t n,
                         const std::function<void(const TuplePoint&)>& visit);

std::vector<TuplePoint> LatticePoints(const ReducedVandermonde& matrix, std::uint32_t n);

// floor(n / (2 d m))^m: the guaranteed minimum number of lattice points.
std::uint64_t LatticeCountLowerBound(std::size_t d, std::size_t m, std::uint32_t n);

// sum over coordinates c of sign[c] * 5^(coords[c] * d + c + 1).
DigitVector ElementValue(std::span<const std::uint32_t> coords, const SignVector& sign);

// ---------------------------------------------------------------------------
// Families

// W_{n,k}: k parts over the Hadamard code and reduced Vandermonde lattice.
// Throws EmptyConstruction when no lattice point fits under n.
SetFamily BuildW(int k, int n);

// W°_{n,k}: same lattice machinery over the star code, d = k.
SetFamily BuildWCirc(int k, int n);

// 2^k parts S_v = {(x^1, ..., x^k) . v} with x^c in {5^(i k + c) : 1 <= i <= n}.
SetFamily BuildProposition(int k, int n);

inline constexpr std::size_t kDefaultProductCap = 10'000'000;

// W°_{n,k} x W_{n,k} in Z^2, materialized eagerly.
struct ProductFamily {
  Provenance provenance;
  SetFamily first;   // W°
  SetFamily second;  // W
  std::vector<DigitPair> elements;
  // (index into first.Values(), index into second.Values()) per element.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> index;

  std::size_t size() const { return elements.size(); }
};

// Throws ResourceCap when |W°| * |W| exceeds `cap`.
ProductFamily BuildProduct(int k, int n, std::size_t cap = kDefaultProductCap);
ProductFamily MakeProduct(SetFamily first, SetFamily second,
                          std::size_t cap = kDefaultProductCap);

struct MeyerElement {
  std::uint32_t high = 0;  // n in 5^n - 5^m
  std::uint32_t low = 0;   // m
  DigitVector value;
};

// {5^n - 5^m : 0 <= m < n <= n_max}, ordered by n then m.
std::vector<MeyerElement> BuildMeyer(int n_max);

// ---------------------------------------------------------------------------
// Decoding

struct DecodedElement {
  TuplePoint tuple;
  std::uint32_t vector_index = 0;
};

// Recovers (tuple, j) from a value alone: digit exponents give the tuple,
// digit signs give v_j, and the preimage is solved exactly from the first m
// coordinates and checked against all d rows. Returns nullopt when the value
// is not an element of the family's construction.
std::optional<DecodedElement> DecodeElement(const DigitVector& value, const SetFamily& family);

// Empty when parts are pairwise disjoint, the union has no duplicates and
// every element has exactly d digits with signs v_j at exponents
// i_c * d + c; otherwise the first violation.
std::string CheckFamilyInvariants(const SetFamily& family);

// ---------------------------------------------------------------------------
// F2-isomorphisms

IntPoint ToIntPoint(const DigitVector& v);
IntPoint ToIntPoint(const DigitPair& v);
IntPoint ToIntPoint(const BigInt& v);

struct F2Embedding {
  BigInt base;
  std::vector<IntPoint> domain;
  std::vector<BigInt> image;
  // "exhaustive" (pair relations compared on the whole set) or
  // "digit-uniqueness" (coordinate sums certified inside (-M/2, M/2)).
  std::string check;
  bool verified = false;
};

inline constexpr std::size_t kDefaultEmbedVerifyThreshold = 100;

BigInt F2Map(const IntPoint& point, const BigInt& base);

// tau(s) = sum_i s_i M^i with M = 5 max |s_i| (M = 5 for the all-zero set).
// Throws ParameterError on an empty set or mixed dimensions.
F2Embedding F2Embed(std::span<const IntPoint> points,
                    std::size_t verify_threshold = kDefaultEmbedVerifyThreshold);

// True iff the index-aligned map domain[i] -> image[i] is injective and
// a+b = c+d <=> f(a)+f(b) = f(c)+f(d) and a-b = c-d <=> f(a)-f(b) = f(c)-f(d)
// for all quadruples. Runs in O(N^2) by comparing the partitions of ordered
// pairs induced by sum (and difference) values on both sides.
template <Additive A, Additive B>
bool IsF2Isomorphism(std::span<const A> domain, std::span<const B> image) {
  if (domain.size() != image.size()) return false;
  const std::size_t n = domain.size();
  auto same_partition = [&](auto combine_a, auto combine_b) {
    std::unordered_map<A, std::uint32_t> class_a;
    std::unordered_map<B, std::uint32_t> class_b;
    // Pair (i, j) is assigned the class id of its value on each side; the two
    // partitions agree iff the class-id map is a bijection.
    std::unordered_map<std::uint32_t, std::uint32_t> a_to_b;
    std::unordered_map<std::uint32_t, std::uint32_t> b_to_a;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto ia = class_a.try_emplace(combine_a(domain[i], domain[j]),
                                      static_cast<std::uint32_t>(class_a.size()));
        auto ib = class_b.try_emplace(combine_b(image[i], image[j]),
                                      static_cast<std::uint32_t>(class_b.size()));
        auto fa = a_to_b.try_emplace(ia.first->second, ib.first->second);
        auto fb = b_to_a.try_emplace(ib.first->second, ia.first->second);
        if (fa.first->second != ib.first->second || fb.first->second != ia.first->second) {
          return false;
        }
      }
    }
    return true;
  };
  std::unordered_map<B, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.emplace(image[i], i).second) return false;
  }
  return same_partition([](const A& x, const A& y) { return A(x + y); },
                        [](const B& x, const B& y) { return B(x + y); }) &&
         same_partition([](const A& x, const A& y) { return A(x - y); },
                        [](const B& x, const B& y) { return B(x - y); });
}

template <Additive T>
std::vector<T> Translate(std::span<const T> elements, const T& alpha) {
  std::vector<T> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(T(e + alpha));
  return out;
}

struct PackedBlock {
  int exponent = 0;  // block is [2^exponent, 2^(exponent+1))
  BigInt offset;     // added to every element of the input set
  BigInt first;      // smallest packed element
  BigInt last;       // largest packed element
};

struct DyadicPacking {
  std::vector<BigInt> elements;  // union, block by block, ascending
  std::vector<PackedBlock> blocks;
};

// Translates set t into [2^psi(t), 2^(psi(t)+1)) with psi strictly
// increasing and each block the least that fits the set's width.
DyadicPacking DyadicPack(const std::vector<std::vector<BigInt>>& sets);

}  // namespace addcomb

#endif  // ADDCOMB_CONSTRUCT_H_
