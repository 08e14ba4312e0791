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

#include "addcomb/digit_vector.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "addcomb/errors.h"

namespace addcomb {

std::string ToDecimal(const BigInt& value) { return value.str(); }

std::string ToString(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

BigInt ParseDecimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw ParseError("empty integer literal");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid digit in integer literal: " + std::string(text));
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

namespace {

void CheckCoeff(int coeff) {
  if (coeff < DigitVector::kMinCoeff || coeff > DigitVector::kMaxCoeff) {
    throw ParameterError("digit coefficient " + std::to_string(coeff) +
                         " outside [-2, 2]");
  }
}

void CheckExponent(std::uint64_t exponent) {
  if (exponent > DigitVector::kMaxExponent) {
    throw ParameterError("exponent " + std::to_string(exponent) +
                         " exceeds supported range");
  }
}

}  // namespace

DigitVector DigitVector::FromPower(std::uint32_t exponent) {
  CheckExponent(exponent);
  DigitVector v;
  v.packed_.push_back(Pack(exponent, 1));
  return v;
}

DigitVector DigitVector::FromMap(const std::map<std::uint32_t, int>& terms) {
  DigitVector v;
  for (const auto& [exponent, coeff] : terms) {
    CheckExponent(exponent);
    CheckCoeff(coeff);
    if (coeff != 0) v.packed_.push_back(Pack(exponent, coeff));
  }
  return v;
}

DigitVector DigitVector::FromTerms(
    std::initializer_list<std::pair<std::uint32_t, int>> terms) {
  std::map<std::uint32_t, int> map;
  for (const auto& [exponent, coeff] : terms) {
    if (!map.emplace(exponent, coeff).second) {
      throw ParameterError("duplicate exponent " + std::to_string(exponent));
    }
  }
  return FromMap(map);
}

DigitVector DigitVector::FromInteger(const BigInt& value) {
  DigitVector v;
  BigInt x = value;
  std::uint32_t exponent = 0;
  while (x != 0) {
    int r = static_cast<int>(x % 5);  // truncated: in (-5, 5)
    if (r > 2) r -= 5;
    if (r < -2) r += 5;
    if (r != 0) {
      CheckExponent(exponent);
      v.packed_.push_back(Pack(exponent, r));
    }
    x = (x - r) / 5;
    ++exponent;
  }
  return v;
}

DigitVector DigitVector::Parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty digit-vector literal");
  if (s.find('^') == std::string::npos) return FromInteger(ParseDecimal(s));

  // Sparse form: [+-][c*]5^e terms.
  std::map<std::uint32_t, int> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in " + s);
    }
    int coeff = 1;
    const std::size_t star = s.find('*', pos);
    const std::size_t next = s.find_first_of("+-", pos);
    if (star != std::string::npos && (next == std::string::npos || star < next)) {
      if (std::from_chars(s.data() + pos, s.data() + star, coeff).ec != std::errc()) {
        throw ParseError("bad coefficient in " + s);
      }
      pos = star + 1;
    }
    if (s.compare(pos, 2, "5^") != 0) throw ParseError("expected 5^ in " + s);
    pos += 2;
    const std::size_t end = std::min(s.find_first_of("+-", pos), s.size());
    std::uint64_t exponent = 0;
    if (pos == end ||
        std::from_chars(s.data() + pos, s.data() + end, exponent).ec != std::errc()) {
      throw ParseError("bad exponent in " + s);
    }
    CheckExponent(exponent);
    const int total = terms[static_cast<std::uint32_t>(exponent)] + sign * coeff;
    if (total < kMinCoeff || total > kMaxCoeff) {
      throw ParseError("coefficient outside [-2, 2] in " + s);
    }
    terms[static_cast<std::uint32_t>(exponent)] = total;
    pos = end;
  }
  return FromMap(terms);
}

int DigitVector::CoeffAt(std::uint32_t exponent) const {
  auto it = std::lower_bound(packed_.begin(), packed_.end(), exponent << 3);
  if (it == packed_.end() || (*it >> 3) != exponent) return 0;
  return static_cast<int>(*it & 7u) - 2;
}

std::map<std::uint32_t, int> DigitVector::ToMap() const {
  std::map<std::uint32_t, int> map;
  for (std::size_t i = 0; i < size(); ++i) map.emplace(exponent(i), coeff(i));
  return map;
}

BigInt DigitVector::ToInteger() const {
  BigInt total = 0;
  BigInt power = 1;
  std::uint32_t at = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    const std::uint32_t e = exponent(i);
    power *= boost::multiprecision::pow(BigInt(5), e - at);
    at = e;
    total += power * coeff(i);
  }
  return total;
}

std::string DigitVector::ToDecimalString() const { return ToDecimal(ToInteger()); }

std::string DigitVector::ToSparseString() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    const int c = coeff(i);
    if (c < 0) {
      out += '-';
    } else if (i != 0) {
      out += '+';
    }
    if (c == 2 || c == -2) out += "2*";
    out += "5^" + std::to_string(exponent(i));
  }
  return out;
}

DigitVector DigitVector::operator-() const {
  DigitVector v;
  v.packed_.reserve(packed_.size());
  for (std::size_t i = 0; i < size(); ++i) v.packed_.push_back(Pack(exponent(i), -coeff(i)));
  return v;
}

template <int Sign>
DigitVector DigitVector::Combine(const DigitVector& a, const DigitVector& b) {
  DigitVector out;
  out.packed_.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a.exponent(i) < b.exponent(j))) {
      out.packed_.push_back(a.packed_[i++]);
    } else if (i == a.size() || b.exponent(j) < a.exponent(i)) {
      out.packed_.push_back(Pack(b.exponent(j), Sign * b.coeff(j)));
      ++j;
    } else {
      const int c = a.coeff(i) + Sign * b.coeff(j);
      if (c < kMinCoeff || c > kMaxCoeff) {
        throw DigitOverflow("digit sum " + std::to_string(c) + " at 5^" +
                            std::to_string(a.exponent(i)) + " leaves [-2, 2]");
      }
      if (c != 0) out.packed_.push_back(Pack(a.exponent(i), c));
      ++i;
      ++j;
    }
  }
  return out;
}

DigitVector operator+(const DigitVector& a, const DigitVector& b) {
  return DigitVector::Combine<1>(a, b);
}

DigitVector operator-(const DigitVector& a, const DigitVector& b) {
  return DigitVector::Combine<-1>(a, b);
}

std::strong_ordering operator<=>(const DigitVector& a, const DigitVector& b) {
  std::size_t i = a.size();
  std::size_t j = b.size();
  while (i > 0 || j > 0) {
    if (j == 0 || (i > 0 && a.exponent(i - 1) > b.exponent(j - 1))) {
      return a.coeff(i - 1) <=> 0;
    }
    if (i == 0 || b.exponent(j - 1) > a.exponent(i - 1)) {
      return 0 <=> b.coeff(j - 1);
    }
    if (a.coeff(i - 1) != b.coeff(j - 1)) return a.coeff(i - 1) <=> b.coeff(j - 1);
    --i;
    --j;
  }
  return std::strong_ordering::equal;
}

std::size_t DigitVector::Hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ packed_.size();
  for (std::uint32_t word : packed_) {
    h ^= word + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace addcomb
