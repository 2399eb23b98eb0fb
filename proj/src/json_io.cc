// Copyright 2026 The Authors.
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

#include "dca/json_io.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dca {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw DcaError(ErrorCode::kParse, message);
}

int ReadN(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    Fail("expected an object with integer field \"n\"");
  }
  const auto n = j["n"].get<std::int64_t>();
  if (n < 1) Fail("n must be at least 1");
  if (n > kHardMaxN) {
    throw DcaError(ErrorCode::kCapExceeded,
                   "n = " + std::to_string(n) + " exceeds the hard cap");
  }
  return static_cast<int>(n);
}

SubsetMask ReadSet(const Json& j, int n) {
  if (!j.is_array()) Fail("a set must be an array of elements");
  SubsetMask out;
  for (const Json& e : j) {
    if (!e.is_number_integer()) Fail("set elements must be integers");
    const auto k = e.get<std::int64_t>();
    if (k < 1 || k > n) Fail("element " + std::to_string(k) + " out of range");
    if (out.Contains(static_cast<int>(k))) {
      Fail("element " + std::to_string(k) + " repeated in a set");
    }
    out = out.Plus(static_cast<int>(k));
  }
  return out;
}

ExtValue ReadValue(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "-inf") return ExtValue::NegInf();
  if (!j.is_number()) Fail("value must be a number or \"-inf\"");
  const double v = j.get<double>();
  try {
    return ExtValue(v);
  } catch (const DcaError& e) {
    Fail(e.what());
  }
}

Json SetJson(SubsetMask x) { return Json(x.Elements()); }

Json ValueJson(ExtValue v) {
  if (!v.is_finite()) return "-inf";
  return v.value();
}

Json VectorJson(const std::vector<double>& v) { return Json(v); }

}  // namespace

SetFunction SetFunctionFromJson(const Json& j) {
  const int n = ReadN(j);
  if (!j.contains("entries") || !j["entries"].is_array()) {
    Fail("expected array field \"entries\"");
  }
  const GroundSet ground(n, kHardMaxN);
  std::vector<ExtValue> table(ground.num_subsets());
  std::vector<bool> seen(ground.num_subsets(), false);
  for (const Json& entry : j["entries"]) {
    if (!entry.is_object() || !entry.contains("set") ||
        !entry.contains("value")) {
      Fail("each entry needs \"set\" and \"value\"");
    }
    const SubsetMask x = ReadSet(entry["set"], n);
    if (seen[x.bits()]) Fail("duplicate entry for a subset");
    seen[x.bits()] = true;
    table[x.bits()] = ReadValue(entry["value"]);
  }
  // Re-apply the configured cap now that the input is well formed.
  return SetFunction(GroundSet(n), std::move(table));
}

SetFamily SetFamilyFromJson(const Json& j) {
  const int n = ReadN(j);
  if (!j.contains("members") || !j["members"].is_array()) {
    Fail("expected array field \"members\"");
  }
  const GroundSet ground(n);
  std::vector<SubsetMask> members;
  std::vector<bool> seen(ground.num_subsets(), false);
  for (const Json& m : j["members"]) {
    const SubsetMask x = ReadSet(m, n);
    if (seen[x.bits()]) Fail("duplicate family member");
    seen[x.bits()] = true;
    members.push_back(x);
  }
  return SetFamily(ground, std::move(members));
}

Json ToJson(const SetFunction& f) {
  Json entries = Json::array();
  const auto table = f.table();
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    if (!table[b].is_finite()) continue;
    entries.push_back({{"set", SetJson(SubsetMask(b))},
                       {"value", table[b].value()}});
  }
  return {{"n", f.n()}, {"entries", std::move(entries)}};
}

Json ToJson(const SetFamily& family) {
  Json members = Json::array();
  for (SubsetMask x : family.members()) members.push_back(SetJson(x));
  return {{"n", family.n()}, {"members", std::move(members)}};
}

Json ToJson(const Witness& w) {
  Json out = {{"X", SetJson(w.x)}, {"Y", SetJson(w.y)}};
  if (w.i) out["i"] = *w.i;
  if (w.removed) out["I"] = SetJson(*w.removed);
  if (w.z) out["Z"] = SetJson(*w.z);
  if (!w.local.empty()) out["elements"] = w.local;
  if (!w.clause.empty()) out["clause"] = w.clause;
  out["lhs"] = ValueJson(w.lhs);
  out["rhs"] = ValueJson(w.rhs);
  return out;
}

Json ToJson(const CheckReport& report) {
  Json out = {{"axiom", std::string(Name(report.property))},
              {"passed", report.passed}};
  out["witness"] = report.witness ? ToJson(*report.witness) : Json(nullptr);
  out["pairs_examined"] = report.pairs_examined;
  return out;
}

Json ToJson(const SuiteSummary& summary) {
  Json results = Json::array();
  for (const SuiteResult& r : summary.results) {
    results.push_back({{"theorem", std::string(Name(r.id))},
                       {"passed", r.passed()},
                       {"instances_checked", r.instances_checked},
                       {"positives", r.positives},
                       {"negatives", r.negatives},
                       {"discrepancies", r.discrepancies}});
  }
  return {{"passed", summary.passed()},
          {"instances", summary.instances},
          {"witnesses_verified", summary.witnesses_verified},
          {"witness_failures", summary.witness_failures},
          {"results", std::move(results)}};
}

Json ToJson(const LemmaReport& report) {
  return {{"passed", report.passed},
          {"domains_nonempty", report.domains_nonempty},
          {"integer_mode", report.integer_mode},
          {"tolerance", report.tolerance},
          {"samples", report.samples},
          {"violations", report.violations},
          {"weak_duality_violations", report.weak_duality_violations},
          {"base_value", ValueJson(report.base_value)},
          {"max_exchange_value", ValueJson(report.max_exchange_value)},
          {"min_dual_value", ValueJson(report.min_dual_value)},
          {"min_slack", std::isfinite(report.min_slack)
                            ? Json(report.min_slack)
                            : Json(report.min_slack > 0 ? "inf" : "-inf")},
          {"worst_q", VectorJson(report.worst_q)}};
}

Json ToJson(const SubmodularityReport& report) {
  return {{"passed", report.passed},
          {"integer_mode", report.integer_mode},
          {"tolerance", report.tolerance},
          {"pairs", report.pairs},
          {"violations", report.violations},
          {"max_violation", report.max_violation},
          {"worst_p", VectorJson(report.worst_p)},
          {"worst_p_prime", VectorJson(report.worst_p_prime)}};
}

Json LoadJsonFile(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw DcaError(ErrorCode::kIo, "cannot open " + path);
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    Fail(path + ": " + e.what());
  }
}

}  // namespace dca
