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

#ifndef ADDCOMB_ELEMENTS_H_
#define ADDCOMB_ELEMENTS_H_

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "addcomb/bigint.h"
#include "addcomb/digit_vector.h"

namespace addcomb {

// Anything the analysis engine can enumerate sums and differences over:
// a totally ordered value type with + and - and a std::hash specialization.
template <class T>
concept Additive = std::regular<T> && std::totally_ordered<T> &&
                   requires(const T& a, const T& b) {
                     { a + b } -> std::convertible_to<T>;
                     { a - b } -> std::convertible_to<T>;
                     { std::hash<T>{}(a) } -> std::convertible_to<std::size_t>;
                   };

inline std::size_t HashCombine(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

// Element of Z^2 whose coordinates are digit vectors. Used by the product
// construction; addition is coordinatewise.
struct DigitPair {
  DigitVector first;
  DigitVector second;

  friend DigitPair operator+(const DigitPair& a, const DigitPair& b) {
    return {a.first + b.first, a.second + b.second};
  }
  friend DigitPair operator-(const DigitPair& a, const DigitPair& b) {
    return {a.first - b.first, a.second - b.second};
  }
  friend bool operator==(const DigitPair&, const DigitPair&) = default;
  friend std::strong_ordering operator<=>(const DigitPair&, const DigitPair&) = default;
};

// A point of Z^d with arbitrary-precision coordinates.
struct IntPoint {
  std::vector<BigInt> coords;

  IntPoint() = default;
  explicit IntPoint(std::vector<BigInt> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }

  // Throws ParameterError on a dimension mismatch.
  friend IntPoint operator+(const IntPoint& a, const IntPoint& b);
  friend IntPoint operator-(const IntPoint& a, const IntPoint& b);
  friend bool operator==(const IntPoint&, const IntPoint&) = default;
  friend std::strong_ordering operator<=>(const IntPoint& a, const IntPoint& b);

  std::string ToString() const;
};

}  // namespace addcomb

template <>
struct std::hash<addcomb::DigitPair> {
  std::size_t operator()(const addcomb::DigitPair& p) const noexcept {
    return addcomb::HashCombine(p.first.Hash(), p.second.Hash());
  }
};

template <>
struct std::hash<addcomb::IntPoint> {
  std::size_t operator()(const addcomb::IntPoint& p) const noexcept {
    std::size_t seed = p.coords.size();
    for (const auto& c : p.coords) {
      seed = addcomb::HashCombine(seed, std::hash<addcomb::BigInt>{}(c));
    }
    return seed;
  }
};

#endif  // ADDCOMB_ELEMENTS_H_
