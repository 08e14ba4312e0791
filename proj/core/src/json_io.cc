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

#include "addcomb/json_io.h"

#include <fstream>
#include <sstream>

#include "addcomb/errors.h"

namespace addcomb {

Json ToJson(const Provenance& p) {
  Json j;
  j["kind"] = p.kind;
  j["k"] = p.k;
  j["n"] = p.n;
  j["d"] = p.d;
  j["m"] = p.m;
  j["prime"] = p.prime;
  j["code"] = p.code;
  j["warnings"] = p.warnings;
  j["index_origin"] = p.index_origin;
  return j;
}

Json ToJson(const CodeFamily& code) {
  Json j;
  j["kind"] = ToString(code.kind);
  j["d"] = code.dimension;
  Json vectors = Json::array();
  for (const auto& v : code.vectors) {
    Json row = Json::array();
    for (auto e : v.entries()) row.push_back(static_cast<int>(e));
    vectors.push_back(std::move(row));
  }
  j["vectors"] = std::move(vectors);
  j["warnings"] = code.warnings;
  return j;
}

Json ToJson(const ReducedVandermonde& matrix) {
  Json j;
  j["d"] = matrix.d;
  j["m"] = matrix.m;
  j["prime"] = matrix.prime;
  j["rows"] = matrix.rows;
  j["verification"] = matrix.verification;
  j["submatrices_checked"] = matrix.submatrices_checked;
  return j;
}

namespace {

Json FamilyBody(const SetFamily& family) {
  Json j;
  j["provenance"] = ToJson(family.provenance);
  j["code"] = ToJson(family.code);
  if (family.matrix) j["matrix"] = ToJson(*family.matrix);
  Json parts = Json::array();
  for (const auto& part : family.parts) {
    Json elements = Json::array();
    for (const auto& e : part.elements) {
      Json el;
      el["tuple"] = e.tuple.coords;
      el["preimage"] = e.tuple.preimage;
      el["j"] = e.vector_index;
      el["value"] = e.value.ToSparseString();
      el["decimal"] = e.value.ToDecimalString();
      elements.push_back(std::move(el));
    }
    parts.push_back(Json{{"name", part.name}, {"elements", std::move(elements)}});
  }
  j["parts"] = std::move(parts);
  return j;
}

Json WithSchema(Json body) {
  Json j;
  j["schema"] = kSetFileSchema;
  for (auto& [key, value] : body.items()) j[key] = value;
  return j;
}

const Json& Require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("set file: missing field '") + key + "'");
  }
  return j.at(key);
}

template <class T>
T Get(const Json& j, const char* key) {
  try {
    return Require(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("set file: field '") + key + "': " + e.what());
  }
}

Provenance ProvenanceFromJson(const Json& j) {
  Provenance p;
  p.kind = Get<std::string>(j, "kind");
  p.k = j.value("k", 0);
  p.n = j.value("n", 0);
  p.d = j.value("d", 0);
  p.m = j.value("m", 0);
  p.prime = j.value("prime", std::int64_t{0});
  p.code = j.value("code", std::string());
  p.warnings = j.value("warnings", std::vector<std::string>{});
  p.index_origin = j.value("index_origin", 1u);
  return p;
}

CodeFamily CodeFromJson(const Json& j) {
  CodeFamily code;
  code.kind = CodeKindFromString(Get<std::string>(j, "kind"));
  code.dimension = Get<std::size_t>(j, "d");
  for (const auto& row : Require(j, "vectors")) {
    try {
      code.vectors.emplace_back(row.get<std::vector<int>>());
    } catch (const ParameterError& e) {
      throw ParseError(std::string("set file: code vector: ") + e.what());
    }
  }
  code.warnings = j.value("warnings", std::vector<std::string>{});
  if (auto failure = CheckCodeFamily(code); !failure.empty()) {
    throw ParseError("set file: invalid code family: " + failure);
  }
  return code;
}

DigitVector ValueFromJson(const Json& el) {
  DigitVector value;
  try {
    value = DigitVector::Parse(Get<std::string>(el, "value"));
  } catch (const Error& e) {
    throw ParseError(std::string("set file: bad value: ") + e.what());
  }
  if (el.contains("decimal") && el.at("decimal").get<std::string>() != value.ToDecimalString()) {
    throw ParseError("set file: decimal does not match value " + value.ToSparseString());
  }
  return value;
}

}  // namespace

Json ToJson(const SetFamily& family) { return WithSchema(FamilyBody(family)); }

Json ToJson(const ProductFamily& product) {
  Json j;
  j["schema"] = kSetFileSchema;
  j["provenance"] = ToJson(product.provenance);
  j["size"] = product.size();
  j["first"] = FamilyBody(product.first);
  j["second"] = FamilyBody(product.second);
  return j;
}

Json MeyerToJson(std::span<const MeyerElement> elements, int n_max) {
  Json j;
  j["schema"] = kSetFileSchema;
  j["provenance"] = Json{{"kind", "meyer"}, {"n_max", n_max}, {"base", 5}};
  Json list = Json::array();
  for (const auto& e : elements) {
    list.push_back(Json{{"n", e.high},
                        {"m", e.low},
                        {"value", e.value.ToSparseString()},
                        {"decimal", e.value.ToDecimalString()}});
  }
  j["parts"] = Json::array({Json{{"name", "E"}, {"elements", std::move(list)}}});
  return j;
}

Json IntegerSetToJson(const std::vector<std::string>& names,
                      const std::vector<std::vector<BigInt>>& parts) {
  Json j;
  j["schema"] = kSetFileSchema;
  j["provenance"] = Json{{"kind", "integers"}};
  Json out = Json::array();
  for (std::size_t p = 0; p < parts.size(); ++p) {
    Json list = Json::array();
    for (const auto& x : parts[p]) list.push_back(x.str());
    out.push_back(Json{{"name", names.at(p)}, {"elements", std::move(list)}});
  }
  j["parts"] = std::move(out);
  return j;
}

Json PointSetToJson(const std::vector<std::string>& names,
                    const std::vector<std::vector<IntPoint>>& parts) {
  Json j;
  j["schema"] = kSetFileSchema;
  j["provenance"] = Json{{"kind", "points"}};
  Json out = Json::array();
  for (std::size_t p = 0; p < parts.size(); ++p) {
    Json list = Json::array();
    for (const auto& x : parts[p]) {
      Json coords = Json::array();
      for (const auto& c : x.coords) coords.push_back(c.str());
      list.push_back(std::move(coords));
    }
    out.push_back(Json{{"name", names.at(p)}, {"elements", std::move(list)}});
  }
  j["parts"] = std::move(out);
  return j;
}

SetFamily SetFamilyFromJson(const Json& j) {
  SetFamily family;
  family.provenance = ProvenanceFromJson(Require(j, "provenance"));
  family.code = CodeFromJson(Require(j, "code"));
  if (j.contains("matrix")) {
    const auto& mj = j.at("matrix");
    const int d = Get<int>(mj, "d");
    try {
      family.matrix = MakeReducedVandermonde(d);
    } catch (const Error& e) {
      throw ParseError(std::string("set file: matrix: ") + e.what());
    }
    if (Get<std::vector<std::vector<std::int64_t>>>(mj, "rows") != family.matrix->rows) {
      throw ParseError("set file: matrix rows differ from the reduced Vandermonde matrix");
    }
  }
  for (const auto& pj : Require(j, "parts")) {
    Part part;
    part.name = Get<std::string>(pj, "name");
    for (const auto& el : Require(pj, "elements")) {
      LabeledElement e;
      e.tuple.coords = Get<std::vector<std::uint32_t>>(el, "tuple");
      e.tuple.preimage = Get<std::vector<std::uint32_t>>(el, "preimage");
      e.vector_index = Get<std::uint32_t>(el, "j");
      if (e.vector_index < 1 || e.vector_index > family.code.size()) {
        throw ParseError("set file: vector index out of range");
      }
      if (e.tuple.coords.size() != family.code.dimension) {
        throw ParseError("set file: tuple length differs from d");
      }
      e.value = ValueFromJson(el);
      part.elements.push_back(std::move(e));
    }
    family.parts.push_back(std::move(part));
  }
  if (auto failure = CheckFamilyInvariants(family); !failure.empty()) {
    throw ParseError("set file: " + failure);
  }
  return family;
}

LoadedSet ParseSetFile(const Json& j) {
  if (!j.is_object() || j.value("schema", std::string()) != kSetFileSchema) {
    throw ParseError(std::string("set file: expected schema ") + kSetFileSchema);
  }
  LoadedSet out;
  out.provenance = Require(j, "provenance");
  out.kind = Get<std::string>(out.provenance, "kind");
  if (out.kind == "W" || out.kind == "Wcirc" || out.kind == "proposition") {
    out.family = SetFamilyFromJson(j);
    for (const auto& p : out.family->parts) out.part_names.push_back(p.name);
  } else if (out.kind == "product") {
    const std::size_t cap = kDefaultProductCap;
    out.product = MakeProduct(SetFamilyFromJson(Require(j, "first")),
                              SetFamilyFromJson(Require(j, "second")), cap);
    out.product->provenance = ProvenanceFromJson(out.provenance);
    out.part_names.push_back("product");
  } else if (out.kind == "meyer") {
    for (const auto& pj : Require(j, "parts")) {
      out.part_names.push_back(Get<std::string>(pj, "name"));
      for (const auto& el : Require(pj, "elements")) {
        MeyerElement e{Get<std::uint32_t>(el, "n"), Get<std::uint32_t>(el, "m"),
                       ValueFromJson(el)};
        if (e.low >= e.high ||
            e.value != DigitVector::FromTerms({{e.high, 1}, {e.low, -1}})) {
          throw ParseError("set file: meyer element does not match its labels");
        }
        out.meyer.push_back(std::move(e));
      }
    }
  } else if (out.kind == "integers" || out.kind == "points") {
    for (const auto& pj : Require(j, "parts")) {
      out.part_names.push_back(Get<std::string>(pj, "name"));
      auto& ints = out.integer_parts.emplace_back();
      auto& points = out.point_parts.emplace_back();
      for (const auto& el : Require(pj, "elements")) {
        try {
          if (out.kind == "integers") {
            ints.push_back(ParseDecimal(el.is_string() ? el.get<std::string>() : el.dump()));
          } else {
            std::vector<BigInt> coords;
            for (const auto& c : el) {
              coords.push_back(ParseDecimal(c.is_string() ? c.get<std::string>() : c.dump()));
            }
            points.emplace_back(std::move(coords));
          }
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(std::string("set file: element: ") + e.what());
        }
      }
    }
    if (out.kind == "integers") {
      out.point_parts.clear();
    } else {
      out.integer_parts.clear();
    }
  } else {
    throw ParseError("set file: unknown kind '" + out.kind + "'");
  }
  return out;
}

LoadedSet ReadSetFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open set file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("set file " + path + ": " + e.what());
  }
  return ParseSetFile(j);
}

}  // namespace addcomb
