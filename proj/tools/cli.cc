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

#include "cli.h"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "addcomb/analyze.h"
#include "addcomb/construct.h"
#include "addcomb/decompose.h"
#include "addcomb/errors.h"
#include "addcomb/json_io.h"

#ifndef ADDCOMB_VERSION
#define ADDCOMB_VERSION "0.0.0"
#endif

namespace addcomb::cli {

namespace {

struct Caps {
  std::uint64_t element_cap = kDefaultProductCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t pair_budget = kDefaultPairBudget;
};

std::uint64_t EnvCap(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::uint64_t value = 0;
  const std::string text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ParameterError(std::string(name) + " must be a positive integer");
  }
  return value;
}

Caps ReadCaps() {
  Caps caps;
  caps.element_cap = EnvCap("ADDCOMB_ELEMENT_CAP", caps.element_cap);
  caps.node_budget = EnvCap("ADDCOMB_NODE_BUDGET", caps.node_budget);
  caps.pair_budget = EnvCap("ADDCOMB_PAIR_BUDGET", caps.pair_budget);
  return caps;
}

struct Options {
  std::string format = "json";
  std::string out;
  bool timing = false;

  // build
  std::string kind;
  int k = 0;
  int n = 0;
  int nmax = 9;
  std::string values;
  std::string points;

  std::string file;

  // analyze
  std::vector<std::string> checks;
  std::uint64_t g = 1;
  std::string mode = "sum";
  std::string scope = "union";
  std::string audit_mode = "exhaustive";
  std::size_t min_size = 4;
  std::size_t max_size = 0;
  std::size_t slice = 0;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  std::string bound;

  // certify
  std::string type = "counting";
  std::uint64_t parts = 2;
  std::string delta = "1/2";
  std::string family = "W";

  // decompose
  std::string union_kind = "sum";
  std::size_t max_parts = 8;
  std::uint64_t budget = 0;
  bool greedy = false;

  // embed
  std::size_t threshold = kDefaultEmbedVerifyThreshold;

  // pack
  std::string sets;
};

// ---------------------------------------------------------------------------
// Formatting

std::string Str(const DigitVector& v) { return v.ToSparseString(); }
std::string Str(const BigInt& v) { return v.str(); }
std::string Str(const DigitPair& v) { return "(" + Str(v.first) + ", " + Str(v.second) + ")"; }
std::string Str(const IntPoint& p) { return p.ToString(); }

template <class T>
Json Strs(const std::vector<T>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(Str(v));
  return out;
}

template <class T>
Json WitnessJson(const RepWitness<T>& w) {
  Json reps = Json::array();
  for (const auto& [a, b] : w.reps) reps.push_back(Json::array({Str(a), Str(b)}));
  return Json{{"value", Str(w.value)}, {"count", w.count}, {"reps", std::move(reps)}};
}

template <class T>
Json VerdictJson(const BVerdict<T>& v) {
  Json j{{"pass", v.pass}, {"g", v.g}, {"max_count", v.max_count}};
  if (v.witness) j["witness"] = WitnessJson(*v.witness);
  return j;
}

Json RatioJson(const Rational& r) {
  return Json{{"exact", ToString(r)}, {"approx", static_cast<double>(r)}};
}

Json RefJson(const SetFamily& family, ElementRef ref) {
  const auto& e = family.at(ref);
  return Json{{"part", family.parts[ref.part].name},
              {"tuple", e.tuple.coords},
              {"j", e.vector_index},
              {"value", Str(e.value)}};
}

void RenderText(const Json& j, std::ostream& os, int indent) {
  const std::string pad(indent * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto is_flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v) {
      if (x.is_structured()) return false;
    }
    return true;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() + ":" : "-";
    if (!v.is_structured()) {
      os << pad << key << " " << scalar(v) << "\n";
    } else if (is_flat(v)) {
      os << pad << key << " [";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
      os << "]\n";
    } else {
      os << pad << key << "\n";
      RenderText(v, os, indent + 1);
    }
  }
}

// ---------------------------------------------------------------------------
// Element views over loaded set files

template <class T>
struct View {
  std::vector<T> all;
  std::vector<std::vector<T>> parts;
  std::vector<std::string> names;
};

template <class F>
void WithView(const LoadedSet& set, F&& f) {
  if (set.family) {
    View<DigitVector> v;
    v.names = set.part_names;
    v.parts = set.family->PartValues();
    v.all = set.family->Values();
    f(v);
  } else if (set.product) {
    View<DigitPair> v;
    v.all = set.product->elements;
    v.parts = {v.all};
    v.names = set.part_names;
    f(v);
  } else if (set.kind == "meyer") {
    View<DigitVector> v;
    for (const auto& e : set.meyer) v.all.push_back(e.value);
    v.parts = {v.all};
    v.names = set.part_names;
    f(v);
  } else if (set.kind == "integers") {
    View<BigInt> v;
    v.parts = set.integer_parts;
    for (const auto& p : v.parts) v.all.insert(v.all.end(), p.begin(), p.end());
    v.names = set.part_names;
    f(v);
  } else {
    View<IntPoint> v;
    v.parts = set.point_parts;
    for (const auto& p : v.parts) v.all.insert(v.all.end(), p.begin(), p.end());
    v.names = set.part_names;
    f(v);
  }
}

std::vector<IntPoint> AsPoints(const LoadedSet& set) {
  std::vector<IntPoint> out;
  WithView(set, [&](const auto& view) {
    for (const auto& x : view.all) {
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, IntPoint>) {
        out.push_back(x);
      } else {
        out.push_back(ToIntPoint(x));
      }
    }
  });
  return out;
}

std::vector<BigInt> ParseIntegerList(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(ParseDecimal(item));
  }
  if (out.empty()) throw ParameterError("empty value list");
  return out;
}

Rational ParseRational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt den = ParseDecimal(text.substr(slash + 1));
    if (den == 0) throw ParameterError("zero denominator in " + text);
    return Rational(ParseDecimal(text.substr(0, slash)), den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(ParseDecimal(text));
  const std::string frac = text.substr(dot + 1);
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const std::string whole = text.substr(0, dot);
  const BigInt digits = ParseDecimal((whole.empty() || whole == "-" ? whole + "0" : whole) + frac);
  return Rational(digits, scale);
}

// ---------------------------------------------------------------------------
// Commands. Each fills `results` and `summary` and returns an exit code.

struct Outcome {
  Json provenance = Json::object();
  Json results = Json::object();
  std::vector<std::string> summary;
  int code = kExitPass;
  // When set, printed instead of the report (build without --out).
  std::optional<Json> raw;
};

Json ConfigEcho(const std::string& command, const Options& o, const Caps& caps) {
  Json c;
  c["command"] = command;
  if (command == "build") {
    c["kind"] = o.kind;
    c["k"] = o.k;
    c["n"] = o.n;
    c["nmax"] = o.nmax;
    if (!o.values.empty()) c["values"] = o.values;
    if (!o.points.empty()) c["points"] = o.points;
  } else if (command == "analyze") {
    c["file"] = o.file;
    c["checks"] = o.checks;
    c["g"] = o.g;
    c["mode"] = o.mode;
    c["scope"] = o.scope;
    c["audit_mode"] = o.audit_mode;
    c["min_size"] = o.min_size;
    c["max_size"] = o.max_size;
    c["slice"] = o.slice;
    c["trials"] = o.trials;
    c["bound"] = o.bound;
  } else if (command == "certify") {
    c["file"] = o.file;
    c["type"] = o.type;
    c["family"] = o.family;
    c["k"] = o.k;
    c["n"] = o.n;
    c["g"] = o.g;
    c["parts"] = o.parts;
    c["delta"] = o.delta;
  } else if (command == "decompose") {
    c["file"] = o.file;
    c["g"] = o.g;
    c["kind"] = o.union_kind;
    c["max_parts"] = o.max_parts;
    c["greedy"] = o.greedy;
  } else if (command == "embed") {
    c["file"] = o.file;
    c["threshold"] = o.threshold;
  } else if (command == "meyer") {
    c["file"] = o.file;
    c["nmax"] = o.nmax;
    c["trials"] = o.trials;
  } else if (command == "pack") {
    c["sets"] = o.sets;
  }
  c["seed"] = o.seed;
  c["rng"] = Rng::kName;
  c["caps"] = Json{{"element_cap", caps.element_cap},
                   {"node_budget", o.budget ? o.budget : caps.node_budget},
                   {"pair_budget", caps.pair_budget}};
  c["format"] = o.format;
  return c;
}

Json FamilySummary(const SetFamily& f) {
  Json parts = Json::array();
  for (const auto& p : f.parts) parts.push_back(Json{{"name", p.name}, {"size", p.elements.size()}});
  return Json{{"union_size", f.size()},
              {"parts", std::move(parts)},
              {"d", f.provenance.d},
              {"m", f.provenance.m},
              {"prime", f.provenance.prime},
              {"warnings", f.provenance.warnings}};
}

Outcome CmdBuild(const Options& o, const Caps& caps) {
  Outcome r;
  Json set;
  if (o.kind == "W" || o.kind == "Wcirc" || o.kind == "proposition") {
    const SetFamily f = o.kind == "W"       ? BuildW(o.k, o.n)
                        : o.kind == "Wcirc" ? BuildWCirc(o.k, o.n)
                                            : BuildProposition(o.k, o.n);
    set = ToJson(f);
    r.results = FamilySummary(f);
    r.summary.push_back(o.kind + ": " + std::to_string(f.size()) + " elements in " +
                        std::to_string(f.parts.size()) + " parts");
    for (const auto& w : f.provenance.warnings) r.summary.push_back("warning: " + w);
  } else if (o.kind == "product") {
    const auto p = BuildProduct(o.k, o.n, caps.element_cap);
    set = ToJson(p);
    r.results = Json{{"union_size", p.size()},
                     {"first", FamilySummary(p.first)},
                     {"second", FamilySummary(p.second)},
                     {"warnings", p.provenance.warnings}};
    r.summary.push_back("product: " + std::to_string(p.size()) + " elements");
    for (const auto& w : p.provenance.warnings) r.summary.push_back("warning: " + w);
  } else if (o.kind == "meyer") {
    const auto m = BuildMeyer(o.nmax);
    set = MeyerToJson(m, o.nmax);
    r.results = Json{{"union_size", m.size()}, {"n_max", o.nmax}};
    r.summary.push_back("meyer: " + std::to_string(m.size()) + " elements");
  } else if (o.kind == "integers") {
    const auto values = ParseIntegerList(o.values);
    set = IntegerSetToJson({"A"}, {values});
    r.results = Json{{"union_size", values.size()}};
    r.summary.push_back("integers: " + std::to_string(values.size()) + " elements");
  } else if (o.kind == "points") {
    std::vector<IntPoint> pts;
    std::stringstream ss(o.points);
    std::string item;
    while (std::getline(ss, item, ';')) {
      if (!item.empty()) pts.emplace_back(ParseIntegerList(item));
    }
    if (pts.empty()) throw ParameterError("--points needs at least one point");
    set = PointSetToJson({"A"}, {pts});
    r.results = Json{{"union_size", pts.size()}};
    r.summary.push_back("points: " + std::to_string(pts.size()) + " elements");
  } else {
    throw ParameterError("unknown --kind '" + o.kind + "'");
  }
  r.provenance = set.at("provenance");
  if (o.out.empty()) {
    r.raw = std::move(set);
  } else {
    std::ofstream f(o.out);
    if (!f) throw ParameterError("cannot write " + o.out);
    f << set.dump(1) << "\n";
    r.results["file"] = o.out;
  }
  return r;
}

template <class T>
void RunChecks(const Options& o, const Caps& caps, const LoadedSet& set, const View<T>& view,
               Outcome& r) {
  std::vector<T> all = view.all;
  if (o.slice != 0 && o.slice < all.size()) all.resize(o.slice);
  const std::span<const T> span(all);
  for (const auto& check : o.checks) {
    bool pass = true;
    std::string detail;
    if (check == "profile") {
      const auto p = ComputeRepProfile(span, RepModeFromString(o.mode), kDefaultWitnessCap,
                                       caps.pair_budget);
      Json hist = Json::object();
      for (const auto& [count, values] : p.histogram) hist[std::to_string(count)] = values;
      Json witnesses = Json::array();
      for (const auto& w : p.witnesses) witnesses.push_back(WitnessJson(w));
      r.results["profile"] = Json{{"mode", o.mode},
                                  {"set_size", p.set_size},
                                  {"max_count", p.max_count},
                                  {"zero_count", p.zero_count},
                                  {"histogram", std::move(hist)},
                                  {"witnesses", std::move(witnesses)}};
      detail = "max_count=" + std::to_string(p.max_count);
    } else if (check == "b2" || check == "b2circ") {
      auto verdict = [&](std::span<const T> s) {
        return check == "b2" ? IsB2(s, o.g, caps.pair_budget) : IsB2Circ(s, o.g, caps.pair_budget);
      };
      Json j{{"g", o.g}, {"scope", o.scope}};
      if (o.scope == "parts") {
        Json parts = Json::array();
        for (std::size_t p = 0; p < view.parts.size(); ++p) {
          const auto v = verdict(std::span<const T>(view.parts[p]));
          pass = pass && v.pass;
          Json pj = VerdictJson(v);
          pj["part"] = view.names.at(p);
          parts.push_back(std::move(pj));
        }
        j["parts"] = std::move(parts);
      } else if (o.scope == "union") {
        const auto v = verdict(span);
        pass = v.pass;
        j["union"] = VerdictJson(v);
        if (v.witness) detail = "witness " + Str(v.witness->value);
      } else {
        throw ParameterError("--scope must be union or parts");
      }
      j["pass"] = pass;
      r.results[check] = std::move(j);
    } else if (check == "energy") {
      const auto e = AdditiveEnergy(span, caps.pair_budget);
      const BigInt n2 = BigInt(e.set_size) * e.set_size;
      const bool identity = e.e_plus == e.e_minus;
      const bool sum_bound = Rational(BigInt(e.sumset_size)) >= e.energy_lower_bound;
      const bool diff_bound =
          Rational(BigInt(e.diffset_size)) >= Rational(n2 * n2, BigInt(e.e_minus));
      pass = identity && sum_bound && diff_bound;
      r.results["energy"] = Json{{"set_size", e.set_size},
                                 {"e_plus", e.e_plus},
                                 {"e_minus", e.e_minus},
                                 {"sumset_size", e.sumset_size},
                                 {"diffset_size", e.diffset_size},
                                 {"doubling_ratio_sum", RatioJson(e.doubling_ratio_sum)},
                                 {"doubling_ratio_diff", RatioJson(e.doubling_ratio_diff)},
                                 {"energy_lower_bound", RatioJson(e.energy_lower_bound)},
                                 {"energy_over_size_squared",
                                  RatioJson(Rational(BigInt(e.e_plus), n2))},
                                 {"k4_proxy_note",
                                  "E/|A|^2 is a fourth-power lower-bound proxy, not K4"},
                                 {"identity_holds", identity},
                                 {"cauchy_schwarz_holds", sum_bound && diff_bound}};
      detail = "E+=" + std::to_string(e.e_plus) + " E-=" + std::to_string(e.e_minus);
    } else if (check == "disjoint") {
      const auto d = FamilySumsetDisjointness(view.parts, kDefaultWitnessCap, caps.pair_budget);
      Json collisions = Json::array();
      for (const auto& c : d.collisions) {
        collisions.push_back(Json{{"value", Str(c.value)},
                                  {"parts_a", {view.names.at(c.parts_a.first),
                                               view.names.at(c.parts_a.second)}},
                                  {"pair_a", {Str(c.pair_a.first), Str(c.pair_a.second)}},
                                  {"parts_b", {view.names.at(c.parts_b.first),
                                               view.names.at(c.parts_b.second)}},
                                  {"pair_b", {Str(c.pair_b.first), Str(c.pair_b.second)}}});
      }
      pass = d.disjoint;
      r.results["disjoint"] = Json{{"disjoint", d.disjoint},
                                   {"part_count", d.part_count},
                                   {"collision_values", d.collision_values},
                                   {"collisions", std::move(collisions)}};
      if (!d.collisions.empty()) detail = "collision at " + Str(d.collisions.front().value);
    } else if (check == "census") {
      if (!set.family || !set.family->matrix) {
        throw ParameterError("census needs a W or Wcirc set file");
      }
      const auto c = CollisionCensus(*set.family, RepModeFromString(o.mode), 20, caps.pair_budget);
      Json sample = Json::array();
      for (const auto& rec : c.sample) {
        Json refs = Json::array();
        for (const auto& ref : rec.refs) refs.push_back(RefJson(*set.family, ref));
        sample.push_back(Json{{"value", Str(rec.value)},
                              {"class", rec.cls == CensusClass::kPredicted ? "PREDICTED"
                                                                          : "ANOMALY"},
                              {"refs", std::move(refs)}});
      }
      pass = c.anomalies == 0;
      r.results["census"] = Json{{"mode", ToString(c.mode)},
                                 {"expected_pattern", c.expected_pattern},
                                 {"records", c.records},
                                 {"predicted", c.predicted},
                                 {"anomalies", c.anomalies},
                                 {"repeated_values", c.repeated_values},
                                 {"sample", std::move(sample)}};
      detail = "records=" + std::to_string(c.records) + " anomalies=" + std::to_string(c.anomalies);
    } else if (check == "audit") {
      AuditParams params;
      params.mode = o.audit_mode == "sample" ? AuditMode::kSample : AuditMode::kExhaustive;
      if (o.audit_mode != "sample" && o.audit_mode != "exhaustive") {
        throw ParameterError("--audit-mode must be exhaustive or sample");
      }
      params.min_size = o.min_size;
      params.max_size = o.max_size;
      params.trials = o.trials;
      params.seed = o.seed;
      const auto a = SubsetDoublingAudit(span, params);
      Json j{{"mode", ToString(a.mode)},
             {"seed", a.seed},
             {"subsets_examined", a.subsets_examined},
             {"min_sum_ratio", RatioJson(a.min_sum_ratio)},
             {"argmin_sum", a.argmin_sum},
             {"min_diff_ratio", RatioJson(a.min_diff_ratio)},
             {"argmin_diff", a.argmin_diff}};
      if (!o.bound.empty()) {
        const Rational bound = ParseRational(o.bound);
        pass = a.min_sum_ratio >= bound && a.min_diff_ratio >= bound;
        j["bound"] = ToString(bound);
      }
      j["pass"] = pass;
      r.results["audit"] = std::move(j);
      detail = "min sum " + ToString(a.min_sum_ratio) + ", diff " + ToString(a.min_diff_ratio);
    } else {
      throw ParameterError("unknown check '" + check + "'");
    }
    r.summary.push_back(check + ": " + (pass ? "PASS" : "FAIL") +
                        (detail.empty() ? "" : " (" + detail + ")"));
    if (!pass) r.code = kExitVerdictFail;
  }
}

Outcome CmdAnalyze(const Options& o, const Caps& caps) {
  if (o.checks.empty()) throw ParameterError("--check is required");
  const LoadedSet set = ReadSetFile(o.file);
  Outcome r;
  r.provenance = set.provenance;
  WithView(set, [&](const auto& view) { RunChecks(o, caps, set, view, r); });
  return r;
}

Json CountingJson(const CountingCertificate& c) {
  Json per_pair = Json::array();
  for (const auto& p : c.per_pair) {
    per_pair.push_back(Json{{"i", p.i}, {"j", p.j}, {"support", p.support}, {"values", p.values}});
  }
  return Json{{"family", c.family},
              {"kind", ToString(c.kind)},
              {"k", c.k},
              {"n", c.n},
              {"d", c.d},
              {"m", c.m},
              {"g", c.g},
              {"t", c.t},
              {"lhs", c.lhs},
              {"collision_values", c.collision_values},
              {"per_pair", std::move(per_pair)},
              {"capacity", c.capacity.str()},
              {"verdict", c.verdict},
              {"lattice_lower_bound", c.lattice_lower_bound},
              {"lower_bound_holds", c.lower_bound_holds},
              {"collision_upper_bound", c.collision_upper_bound.str()},
              {"upper_bound_holds", c.upper_bound_holds},
              {"note", c.note},
              {"sketch",
               "each of the lhs tuples puts two of its k elements into one of t < k parts; "
               "each such pair is a distinct representation of one of collision_values values; "
               "a part holds at most g representations of a value, so lhs <= t*g*V"}};
}

Json MixedSideJson(const MixedSide& s) {
  return Json{{"kind", ToString(s.kind)},       {"lhs", s.lhs},
              {"groups_needed", s.groups_needed}, {"collision_values", s.collision_values},
              {"capacity", s.capacity.str()},   {"verdict", s.verdict}};
}

Json NoLargeSideJson(const NoLargeSide& s) {
  return Json{{"kind", ToString(s.kind)},
              {"lhs", s.lhs},
              {"groups", s.groups},
              {"group_min", s.group_min},
              {"pairs", s.pairs.str()},
              {"collision_values", s.collision_values},
              {"capacity", s.capacity.str()},
              {"verdict", s.verdict}};
}

Outcome CmdCertify(const Options& o, const Caps&) {
  Outcome r;
  std::optional<LoadedSet> set;
  if (!o.file.empty()) {
    set = ReadSetFile(o.file);
    r.provenance = set->provenance;
  } else {
    r.provenance = Json{{"kind", "lattice"}, {"family", o.family}, {"k", o.k}, {"n", o.n}};
  }
  bool verdict = false;
  if (o.type == "counting") {
    CountingCertificate c;
    if (set) {
      if (!set->family) throw ParameterError("counting certificate needs a W or Wcirc set file");
      c = CertifyCounting(*set->family, o.g, o.parts);
    } else {
      const CodeKind code = o.family == "W"       ? CodeKind::kHadamard
                            : o.family == "Wcirc" ? CodeKind::kStar
                                                  : throw ParameterError("--family must be W or Wcirc");
      c = CertifyCountingStreaming(code, o.k, o.n, o.g, o.parts);
    }
    r.results["certificate"] = CountingJson(c);
    verdict = c.verdict;
    r.summary.push_back("counting: lhs=" + std::to_string(c.lhs) +
                        " capacity=" + c.capacity.str() + " verdict=" + (verdict ? "true" : "false"));
    if (!c.lower_bound_holds || !c.upper_bound_holds) {
      throw InternalVerificationFailure("certificate sanity bound violated");
    }
  } else if (o.type == "mixed") {
    MixedCertificate c = set ? (set->product ? CertifyMixed(set->product->first,
                                                            set->product->second, o.g, o.parts)
                                             : throw ParameterError("mixed needs a product file"))
                             : CertifyMixedStreaming(o.k, o.n, o.g, o.parts);
    r.results["certificate"] = Json{{"k", c.k},
                                    {"n", c.n},
                                    {"g", c.g},
                                    {"t", c.t},
                                    {"t_max", c.t_max},
                                    {"group_threshold", c.group_threshold},
                                    {"alpha", ToString(c.alpha)},
                                    {"sum_side", MixedSideJson(c.sum_side)},
                                    {"diff_side", MixedSideJson(c.diff_side)},
                                    {"verdict", c.verdict},
                                    {"note", c.note}};
    verdict = c.verdict;
    r.summary.push_back(std::string("mixed: verdict=") + (verdict ? "true" : "false"));
  } else if (o.type == "nolarge") {
    const Rational delta = ParseRational(o.delta);
    NoLargeBSubsetCertificate c =
        set ? (set->product ? CertifyNoLargeBSubset(set->product->first, set->product->second,
                                                    o.g, delta)
                            : throw ParameterError("nolarge needs a product file"))
            : CertifyNoLargeBSubsetStreaming(o.k, o.n, o.g, delta);
    r.results["certificate"] = Json{{"k", c.k},
                                    {"n", c.n},
                                    {"g", c.g},
                                    {"delta", ToString(c.delta)},
                                    {"gamma", ToString(c.gamma)},
                                    {"product_size", c.product_size.str()},
                                    {"threshold_size", c.threshold_size.str()},
                                    {"sum_side", NoLargeSideJson(c.sum_side)},
                                    {"diff_side", NoLargeSideJson(c.diff_side)},
                                    {"verdict", c.verdict}};
    verdict = c.verdict;
    r.summary.push_back(std::string("nolarge: verdict=") + (verdict ? "true" : "false"));
  } else {
    throw ParameterError("--type must be counting, mixed or nolarge");
  }
  if (!verdict) r.code = kExitVerdictFail;
  return r;
}

template <class T>
Json DecompositionJson(const std::vector<T>& all, const Decomposition& d) {
  Json parts = Json::array();
  for (std::size_t p = 0; p < d.parts_used; ++p) {
    std::vector<T> members;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (d.assignment[i] == p) members.push_back(all[i]);
    }
    std::sort(members.begin(), members.end());
    parts.push_back(Json{{"kind", ToString(d.part_kinds[p])}, {"elements", Strs(members)}});
  }
  return Json{{"g", d.g}, {"parts_used", d.parts_used}, {"parts", std::move(parts)}};
}

Outcome CmdDecompose(const Options& o, const Caps& caps) {
  const LoadedSet set = ReadSetFile(o.file);
  Outcome r;
  r.provenance = set.provenance;
  const UnionKind kind = UnionKindFromString(o.union_kind);
  const std::uint64_t budget = o.budget ? o.budget : caps.node_budget;
  WithView(set, [&](const auto& view) {
    using T = typename std::decay_t<decltype(view.all)>::value_type;
    const std::span<const T> span(view.all);
    const auto result =
        ExactMinUnion(span, o.g, kind, o.max_parts, budget,
                      std::min<std::uint64_t>(caps.element_cap, kDefaultSearchElementCap));
    Json per = Json::array();
    bool timeout = false;
    for (const auto& s : result.per_parts) {
      Json sj{{"parts", s.parts},
              {"status", ToString(s.status)},
              {"nodes_explored", s.nodes_explored},
              {"budget", s.budget}};
      if (s.decomposition) {
        if (!VerifyDecomposition(span, *s.decomposition)) {
          throw InternalVerificationFailure("returned decomposition failed re-verification");
        }
        sj["decomposition"] = DecompositionJson(view.all, *s.decomposition);
      }
      timeout = timeout || s.status == SearchStatus::kTimeout;
      per.push_back(std::move(sj));
    }
    r.results["search"] = Json{{"kind", ToString(kind)},
                               {"g", o.g},
                               {"symmetry_breaking", kSymmetryBreaking},
                               {"per_parts", std::move(per)}};
    if (result.minimum) {
      r.results["minimum"] = *result.minimum;
      r.summary.push_back("minimum parts: " + std::to_string(*result.minimum));
    } else {
      r.results["minimum"] = nullptr;
      r.code = timeout ? kExitTimeout : kExitVerdictFail;
      r.summary.push_back(timeout ? "search timed out before a minimum was established"
                                  : "no decomposition within max parts");
    }
    if (o.greedy) {
      const auto greedy = GreedyUnion(span, o.g, kind);
      r.results["greedy"] = DecompositionJson(view.all, greedy);
      r.summary.push_back("greedy parts: " + std::to_string(greedy.parts_used));
    }
  });
  return r;
}

Outcome CmdEmbed(const Options& o, const Caps& caps) {
  const LoadedSet set = ReadSetFile(o.file);
  Outcome r;
  r.provenance = set.provenance;
  const auto points = AsPoints(set);
  const auto embedding = F2Embed(points, o.threshold);
  bool identical = true;
  Json verdicts = Json::array();
  for (std::uint64_t g : {1, 2}) {
    for (RepMode mode : {RepMode::kSum, RepMode::kDiff}) {
      const bool before =
          CheckB(std::span<const IntPoint>(embedding.domain), g, mode, caps.pair_budget).pass;
      const bool after =
          CheckB(std::span<const BigInt>(embedding.image), g, mode, caps.pair_budget).pass;
      identical = identical && before == after;
      verdicts.push_back(
          Json{{"g", g}, {"mode", ToString(mode)}, {"before", before}, {"after", after}});
    }
  }
  Json image = Json::array();
  for (const auto& x : embedding.image) image.push_back(x.str());
  r.results = Json{{"base", embedding.base.str()},
                   {"size", embedding.image.size()},
                   {"check", embedding.check},
                   {"verified", embedding.verified},
                   {"b_verdicts", std::move(verdicts)},
                   {"verdicts_identical", identical},
                   {"image", std::move(image)}};
  r.summary.push_back("embedding base " + embedding.base.str() + ", " + embedding.check +
                      " check: " + (embedding.verified ? "verified" : "FAILED"));
  if (!embedding.verified || !identical) r.code = kExitVerdictFail;
  return r;
}

Outcome CmdMeyer(const Options& o, const Caps&) {
  Outcome r;
  std::vector<MeyerElement> elements;
  if (!o.file.empty()) {
    const auto set = ReadSetFile(o.file);
    if (set.kind != "meyer") throw ParameterError("meyer needs a meyer set file");
    elements = set.meyer;
    r.provenance = set.provenance;
  } else {
    elements = BuildMeyer(o.nmax);
    r.provenance = Json{{"kind", "meyer"}, {"n_max", o.nmax}, {"base", 5}};
  }
  const auto stats = MeyerExtract(elements, o.seed, o.trials);
  Json best = Json::array();
  for (auto i : stats.best_subset) best.push_back(Str(elements[i].value));
  r.results = Json{{"seed", stats.seed},
                   {"rng", Rng::kName},
                   {"trials", stats.trials},
                   {"set_size", stats.set_size},
                   {"mean", stats.mean},
                   {"mean_exact", ToString(stats.mean_fraction)},
                   {"stddev", stats.stddev},
                   {"standard_error", stats.standard_error},
                   {"best_trial", stats.best_trial},
                   {"best_size", stats.best_subset.size()},
                   {"best_subset", std::move(best)},
                   {"b2_failures", stats.b2_failures}};
  std::ostringstream line;
  line << "mean |A'|/|A| = " << stats.mean << " over " << stats.trials << " trials; "
       << stats.b2_failures << " subsets failed B2[2]";
  r.summary.push_back(line.str());
  if (stats.b2_failures != 0) r.code = kExitVerdictFail;
  return r;
}

Outcome CmdPack(const Options& o, const Caps&) {
  Outcome r;
  std::vector<std::vector<BigInt>> sets;
  std::stringstream ss(o.sets);
  std::string item;
  while (std::getline(ss, item, ';')) sets.push_back(ParseIntegerList(item));
  if (sets.empty()) throw ParameterError("--sets needs at least one set");
  const auto packing = DyadicPack(sets);
  Json blocks = Json::array();
  bool preserved = true;
  std::size_t offset = 0;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    const auto& b = packing.blocks[t];
    auto original = sets[t];
    std::sort(original.begin(), original.end());
    original.erase(std::unique(original.begin(), original.end()), original.end());
    const std::vector<BigInt> packed(packing.elements.begin() + offset,
                                     packing.elements.begin() + offset + original.size());
    offset += original.size();
    for (std::uint64_t g : {1, 2}) {
      for (RepMode mode : {RepMode::kSum, RepMode::kDiff}) {
        preserved = preserved && CheckB(std::span<const BigInt>(original), g, mode).pass ==
                                     CheckB(std::span<const BigInt>(packed), g, mode).pass;
      }
    }
    blocks.push_back(Json{{"exponent", b.exponent},
                          {"offset", b.offset.str()},
                          {"first", b.first.str()},
                          {"last", b.last.str()}});
  }
  Json elements = Json::array();
  for (const auto& x : packing.elements) elements.push_back(x.str());
  r.provenance = Json{{"kind", "dyadic_pack"}};
  r.results = Json{{"blocks", std::move(blocks)},
                   {"elements", std::move(elements)},
                   {"b_verdicts_preserved", preserved}};
  r.summary.push_back("packed " + std::to_string(sets.size()) + " sets into " +
                      std::to_string(packing.elements.size()) + " elements");
  if (!preserved) r.code = kExitVerdictFail;
  return r;
}

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const ResourceCap*>(&e)) return kExitResourceCap;
  if (dynamic_cast<const InternalVerificationFailure*>(&e)) return kExitVerdictFail;
  return kExitConfigError;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Constructions and exact verification for sets of large doubling", "addcomb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ADDCOMB_VERSION);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_flag("--timing", o.timing, "include wall-clock timing (breaks byte stability)");
    sub->add_option("--seed", o.seed, "seed for the named generator");
  };

  auto* build = app.add_subcommand("build", "construct a set family and write its set file");
  common(build);
  build->add_option("--kind", o.kind, "W | Wcirc | product | meyer | proposition | integers | points")
      ->required();
  build->add_option("--k", o.k);
  build->add_option("--n", o.n);
  build->add_option("--nmax", o.nmax);
  build->add_option("--values", o.values, "comma-separated integers (kind integers)");
  build->add_option("--points", o.points, "points separated by ';', coordinates by ','");

  auto* analyze = app.add_subcommand("analyze", "run exact checks on a set file");
  common(analyze);
  analyze->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  analyze->add_option("--check", o.checks, "profile | b2 | b2circ | energy | disjoint | census | audit")
      ->delimiter(',');
  analyze->add_option("--g", o.g);
  analyze->add_option("--mode", o.mode, "sum or diff")->check(CLI::IsMember({"sum", "diff"}));
  analyze->add_option("--scope", o.scope, "union or parts");
  analyze->add_option("--audit-mode", o.audit_mode);
  analyze->add_option("--min-size", o.min_size);
  analyze->add_option("--max-size", o.max_size);
  analyze->add_option("--slice", o.slice, "use only the first N union elements");
  analyze->add_option("--trials", o.trials);
  analyze->add_option("--bound", o.bound, "audit passes when both minima are >= bound");

  auto* certify = app.add_subcommand("certify", "counting certificates");
  common(certify);
  certify->add_option("file", o.file)->check(CLI::ExistingFile);
  certify->add_option("--type", o.type, "counting | mixed | nolarge");
  certify->add_option("--family", o.family, "W or Wcirc when no file is given");
  certify->add_option("--k", o.k);
  certify->add_option("--n", o.n);
  certify->add_option("--g", o.g);
  certify->add_option("--parts", o.parts);
  certify->add_option("--delta", o.delta);

  auto* decompose = app.add_subcommand("decompose", "exact minimum union search");
  common(decompose);
  decompose->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  decompose->add_option("--g", o.g);
  decompose->add_option("--kind", o.union_kind, "sum | diff | mixed");
  decompose->add_option("--max-parts", o.max_parts);
  decompose->add_option("--budget", o.budget, "node budget per part count");
  decompose->add_flag("--greedy", o.greedy, "also report first-fit");

  auto* embed = app.add_subcommand("embed", "F2-isomorphic embedding into Z");
  common(embed);
  embed->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  embed->add_option("--threshold", o.threshold, "largest set verified exhaustively");

  auto* meyer = app.add_subcommand("meyer", "random U/L extraction from the Meyer set");
  common(meyer);
  meyer->add_option("file", o.file)->check(CLI::ExistingFile);
  meyer->add_option("--nmax", o.nmax);
  meyer->add_option("--trials", o.trials);

  auto* pack = app.add_subcommand("pack", "dyadic packing of integer sets");
  common(pack);
  pack->add_option("--sets", o.sets, "sets separated by ';', elements by ','")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << ADDCOMB_VERSION << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    const Caps caps = ReadCaps();
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    if (command == "build") outcome = CmdBuild(o, caps);
    if (command == "analyze") outcome = CmdAnalyze(o, caps);
    if (command == "certify") outcome = CmdCertify(o, caps);
    if (command == "decompose") outcome = CmdDecompose(o, caps);
    if (command == "embed") outcome = CmdEmbed(o, caps);
    if (command == "meyer") outcome = CmdMeyer(o, caps);
    if (command == "pack") outcome = CmdPack(o, caps);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (outcome.raw) {
      out << outcome.raw->dump(1) << "\n";
      return outcome.code;
    }
    Json report;
    report["schema"] = kReportSchema;
    report["tool"] = Json{{"name", "addcomb"}, {"version", ADDCOMB_VERSION}};
    report["config"] = ConfigEcho(command, o, caps);
    report["provenance"] = outcome.provenance;
    report["results"] = outcome.results;
    report["verdict"] = Json{{"pass", outcome.code == kExitPass},
                             {"exit_code", outcome.code},
                             {"summary", outcome.summary}};
    if (o.timing) report["timing"] = Json{{"seconds", seconds}};

    std::ostringstream rendered;
    if (o.format == "text") {
      RenderText(report, rendered, 0);
    } else {
      rendered << report.dump(2) << "\n";
    }
    if (!o.out.empty() && command != "build") {
      std::ofstream f(o.out);
      if (!f) throw ParameterError("cannot write " + o.out);
      f << rendered.str();
      for (const auto& line : outcome.summary) out << line << "\n";
    } else {
      out << rendered.str();
    }
    return outcome.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace addcomb::cli
