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

#ifndef ADDCOMB_DIGIT_VECTOR_H_
#define ADDCOMB_DIGIT_VECTOR_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "addcomb/bigint.h"

namespace addcomb {

// A sparse balanced base-5 integer: sum of coeff * 5^exponent with every
// stored coeff in {-2, -1, 1, 2}. Balanced base-5 expansions with digits in
// [-2, 2] are unique, so equal values have equal digit maps and comparisons
// never need a big-integer conversion.
//
// Addition is carry-free. Sums and differences of two elements whose digits
// lie in {-1, 0, 1} always stay in range; anything that would leave [-2, 2]
// raises DigitOverflow instead of normalizing.
class DigitVector {
 public:
  static constexpr int kMinCoeff = -2;
  static constexpr int kMaxCoeff = 2;
  static constexpr std::uint32_t kMaxExponent = (1u << 28) - 1;

  DigitVector() = default;

  // {exponent: 1}, i.e. 5^exponent.
  static DigitVector FromPower(std::uint32_t exponent);

  // Builds from (exponent, coeff) pairs. Zero coefficients are dropped;
  // duplicate exponents or out-of-range coefficients throw ParameterError.
  static DigitVector FromTerms(
      std::initializer_list<std::pair<std::uint32_t, int>> terms);
  static DigitVector FromMap(const std::map<std::uint32_t, int>& terms);

  // Balanced base-5 expansion of an arbitrary integer.
  static DigitVector FromInteger(const BigInt& value);

  // Accepts the sparse form ("5^7+5^11-5^15", "2*5^3-5^0", "0") or a
  // decimal integer ("-3"). Throws ParseError.
  static DigitVector Parse(std::string_view text);

  bool is_zero() const { return packed_.empty(); }
  std::size_t size() const { return packed_.size(); }

  // i-th nonzero digit in ascending exponent order.
  std::uint32_t exponent(std::size_t i) const { return packed_[i] >> 3; }
  int coeff(std::size_t i) const { return static_cast<int>(packed_[i] & 7u) - 2; }

  // Coefficient at an arbitrary exponent (0 when absent).
  int CoeffAt(std::uint32_t exponent) const;

  std::map<std::uint32_t, int> ToMap() const;

  BigInt ToInteger() const;
  std::string ToDecimalString() const;
  std::string ToSparseString() const;

  DigitVector operator-() const;
  friend DigitVector operator+(const DigitVector& a, const DigitVector& b);
  friend DigitVector operator-(const DigitVector& a, const DigitVector& b);

  friend bool operator==(const DigitVector& a, const DigitVector& b) {
    return a.packed_ == b.packed_;
  }
  // Ordered by integer value: the highest differing exponent decides.
  friend std::strong_ordering operator<=>(const DigitVector& a,
                                          const DigitVector& b);

  std::size_t Hash() const;

 private:
  static std::uint32_t Pack(std::uint32_t exponent, int coeff) {
    return (exponent << 3) | static_cast<std::uint32_t>(coeff + 2);
  }

  template <int Sign>
  static DigitVector Combine(const DigitVector& a, const DigitVector& b);

  // Ascending by exponent; coefficient encoded as coeff + 2 in the low bits.
  boost::container::small_vector<std::uint32_t, 12> packed_;
};

}  // namespace addcomb

template <>
struct std::hash<addcomb::DigitVector> {
  std::size_t operator()(const addcomb::DigitVector& v) const noexcept {
    return v.Hash();
  }
};

#endif  // ADDCOMB_DIGIT_VECTOR_H_
