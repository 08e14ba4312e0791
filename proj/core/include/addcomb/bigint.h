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

#ifndef ADDCOMB_BIGINT_H_
#define ADDCOMB_BIGINT_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace addcomb {

// Arbitrary-precision signed integer used at I/O boundaries and for
// embedded images.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when q = 1.
std::string ToString(const Rational& value);

std::string ToDecimal(const BigInt& value);

// Parses an optionally signed decimal string. Throws ParseError.
BigInt ParseDecimal(std::string_view text);

}  // namespace addcomb

#endif  // ADDCOMB_BIGINT_H_
