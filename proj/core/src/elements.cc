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

#include "addcomb/elements.h"

#include "addcomb/errors.h"

namespace addcomb {

namespace {

void CheckSameDim(const IntPoint& a, const IntPoint& b) {
  if (a.dim() != b.dim()) {
    throw ParameterError("point dimensions differ: " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

IntPoint operator+(const IntPoint& a, const IntPoint& b) {
  CheckSameDim(a, b);
  IntPoint out;
  out.coords.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.coords.push_back(a.coords[i] + b.coords[i]);
  return out;
}

IntPoint operator-(const IntPoint& a, const IntPoint& b) {
  CheckSameDim(a, b);
  IntPoint out;
  out.coords.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.coords.push_back(a.coords[i] - b.coords[i]);
  return out;
}

std::strong_ordering operator<=>(const IntPoint& a, const IntPoint& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.coords[i] < b.coords[i]) return std::strong_ordering::less;
    if (b.coords[i] < a.coords[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string IntPoint::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += coords[i].str();
  }
  return out + ")";
}

}  // namespace addcomb
