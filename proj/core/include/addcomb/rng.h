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

#ifndef ADDCOMB_RNG_H_
#define ADDCOMB_RNG_H_

#include <cstdint>
#include <random>

namespace addcomb {

// Seeded generator with portable derived draws. The standard distributions
// are implementation-defined, so uniform integers use rejection sampling on
// raw 64-bit outputs instead.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  bool Bit() { return (Next() >> 63) != 0; }

  // Uniform on [0, n). n must be positive.
  std::uint64_t UniformBelow(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform on [lo, hi].
  std::uint64_t UniformInRange(std::uint64_t lo, std::uint64_t hi) {
    return lo + UniformBelow(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace addcomb

#endif  // ADDCOMB_RNG_H_
