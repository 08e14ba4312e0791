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

#ifndef ADDCOMB_JSON_IO_H_
#define ADDCOMB_JSON_IO_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "addcomb/codes.h"
#include "addcomb/construct.h"

namespace addcomb {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSetFileSchema = "addcomb.setfamily/1";

Json ToJson(const Provenance& provenance);
Json ToJson(const CodeFamily& code);
Json ToJson(const ReducedVandermonde& matrix);

// Set files. Every writer emits {"schema", "provenance", ...}; elements are
// listed in canonical construction order.
Json ToJson(const SetFamily& family);
// Stores the two factors; the product is rebuilt on load.
Json ToJson(const ProductFamily& product);
Json MeyerToJson(std::span<const MeyerElement> elements, int n_max);
Json IntegerSetToJson(const std::vector<std::string>& names,
                      const std::vector<std::vector<BigInt>>& parts);
Json PointSetToJson(const std::vector<std::string>& names,
                    const std::vector<std::vector<IntPoint>>& parts);

// Any set file, with exactly one payload populated according to `kind`
// (W | Wcirc | proposition | product | meyer | integers | points).
struct LoadedSet {
  std::string kind;
  Json provenance;
  std::optional<SetFamily> family;
  std::optional<ProductFamily> product;
  std::vector<MeyerElement> meyer;
  std::vector<std::string> part_names;
  std::vector<std::vector<BigInt>> integer_parts;
  std::vector<std::vector<IntPoint>> point_parts;
};

// Throws ParseError on schema or content errors.
LoadedSet ParseSetFile(const Json& json);
LoadedSet ReadSetFile(const std::string& path);
SetFamily SetFamilyFromJson(const Json& json);

}  // namespace addcomb

#endif  // ADDCOMB_JSON_IO_H_
