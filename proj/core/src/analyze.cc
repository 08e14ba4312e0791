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

#include "addcomb/analyze.h"

namespace addcomb {

std::string ToString(RepMode mode) { return mode == RepMode::kSum ? "sum" : "diff"; }

RepMode RepModeFromString(const std::string& name) {
  if (name == "sum") return RepMode::kSum;
  if (name == "diff") return RepMode::kDiff;
  throw ParseError("unknown mode: " + name);
}

std::string ToString(AuditMode mode) {
  return mode == AuditMode::kExhaustive ? "exhaustive" : "sample";
}

namespace {

// Whether tuples y and z agree on every coordinate where v_i + sign * v_j
// is nonzero.
bool AgreeOnSupport(const TuplePoint& y, const TuplePoint& z, const SignVector& vi,
                    const SignVector& vj, int sign) {
  for (std::size_t c = 0; c < vi.dim(); ++c) {
    if (vi[c] + sign * vj[c] != 0 && y.coords[c] != z.coords[c]) return false;
  }
  return true;
}

}  // namespace

CensusClass ClassifySumEquality(const SetFamily& family, ElementRef p, ElementRef q,
                                ElementRef r, ElementRef s) {
  const auto& ep = family.at(p);
  const auto& eq = family.at(q);
  const auto& er = family.at(r);
  const auto& es = family.at(s);
  auto vec = [&](const LabeledElement& e) -> const SignVector& {
    return family.code.vectors[e.vector_index - 1];
  };

  if (family.code.kind == CodeKind::kHadamard) {
    // {(y,i),(y,j)} vs {(z,i),(z,j)}.
    if (ep.tuple != eq.tuple || er.tuple != es.tuple || ep.tuple == er.tuple) {
      return CensusClass::kAnomaly;
    }
    const auto side1 = std::minmax(ep.vector_index, eq.vector_index);
    const auto side2 = std::minmax(er.vector_index, es.vector_index);
    if (side1 != side2 || side1.first == side1.second) return CensusClass::kAnomaly;
    return AgreeOnSupport(ep.tuple, er.tuple, vec(ep), vec(eq), 1) ? CensusClass::kPredicted
                                                                   : CensusClass::kAnomaly;
  }
  if (family.code.kind == CodeKind::kStar) {
    // {(y,i),(z,j)} vs {(y,j),(z,i)}.
    for (const auto& [a, b] : {std::pair{&er, &es}, std::pair{&es, &er}}) {
      const bool shape = ep.tuple != eq.tuple && ep.vector_index != eq.vector_index &&
                         a->tuple == ep.tuple && a->vector_index == eq.vector_index &&
                         b->tuple == eq.tuple && b->vector_index == ep.vector_index;
      if (shape && AgreeOnSupport(ep.tuple, eq.tuple, vec(ep), vec(eq), -1)) {
        return CensusClass::kPredicted;
      }
    }
  }
  return CensusClass::kAnomaly;
}

CensusReport CollisionCensus(const SetFamily& family, RepMode mode, std::size_t sample_cap,
                             std::uint64_t pair_budget) {
  CensusReport report;
  report.mode = mode;
  report.expected_pattern = family.code.kind == CodeKind::kHadamard ? "same-tuple"
                            : family.code.kind == CodeKind::kStar   ? "cross-tuple"
                                                                    : "none";
  auto refs = family.Refs();
  std::vector<DigitVector> values;
  values.reserve(refs.size());
  for (const auto& r : refs) values.push_back(family.at(r).value);
  // Sort by value so differences of (later, earlier) are positive.
  std::vector<std::size_t> order(refs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  const std::size_t n = order.size();
  CheckPairBudget(n, pair_budget);

  using PairIdx = std::pair<std::uint32_t, std::uint32_t>;
  std::unordered_map<DigitVector, std::vector<PairIdx>> groups;
  groups.reserve(n * (n + 1) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ia = static_cast<std::uint32_t>(order[a]);
    if (mode == RepMode::kSum) {
      for (std::size_t b = a; b < n; ++b) {
        const auto ib = static_cast<std::uint32_t>(order[b]);
        groups[values[ia] + values[ib]].emplace_back(ia, ib);
      }
    } else {
      for (std::size_t b = 0; b < a; ++b) {
        const auto ib = static_cast<std::uint32_t>(order[b]);
        groups[values[ia] - values[ib]].emplace_back(ia, ib);
      }
    }
  }

  std::vector<std::pair<DigitVector, const std::vector<PairIdx>*>> repeated;
  for (const auto& [value, reps] : groups) {
    if (reps.size() > 1) repeated.emplace_back(value, &reps);
  }
  std::sort(repeated.begin(), repeated.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  report.repeated_values = repeated.size();

  std::vector<CensusRecord> predicted_sample;
  std::vector<CensusRecord> anomaly_sample;
  for (const auto& [value, reps_ptr] : repeated) {
    const auto& reps = *reps_ptr;
    for (std::size_t x = 0; x < reps.size(); ++x) {
      for (std::size_t y = x + 1; y < reps.size(); ++y) {
        CensusRecord record;
        record.value = value;
        record.refs = {refs[reps[x].first], refs[reps[x].second], refs[reps[y].first],
                       refs[reps[y].second]};
        const auto& rf = record.refs;
        // a - b = c - d  <=>  a + d = b + c.
        record.cls = mode == RepMode::kSum
                         ? ClassifySumEquality(family, rf[0], rf[1], rf[2], rf[3])
                         : ClassifySumEquality(family, rf[0], rf[3], rf[1], rf[2]);
        ++report.records;
        if (record.cls == CensusClass::kPredicted) {
          ++report.predicted;
          if (predicted_sample.size() < sample_cap) predicted_sample.push_back(record);
        } else {
          ++report.anomalies;
          if (anomaly_sample.size() < sample_cap) anomaly_sample.push_back(record);
        }
      }
    }
  }
  for (auto& r : anomaly_sample) {
    if (report.sample.size() < sample_cap) report.sample.push_back(std::move(r));
  }
  for (auto& r : predicted_sample) {
    if (report.sample.size() < sample_cap) report.sample.push_back(std::move(r));
  }
  return report;
}

}  // namespace addcomb
