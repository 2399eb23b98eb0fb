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

#include "dca/suite.h"

#include <array>
#include <cstdio>
#include <cstring>
#include <functional>

#include "dca/axioms.h"
#include "dca/family.h"
#include "parallel.h"

namespace dca {
namespace {

constexpr std::array kAllTheorems = {
    TheoremId::kT2_1,  TheoremId::kT2_2_1, TheoremId::kT2_2_2,
    TheoremId::kT2_3,  TheoremId::kT2_4,   TheoremId::kP3_1,
    TheoremId::kP3_2,  TheoremId::kP4_1,   TheoremId::kP4_2,
    TheoremId::kP4_3,  TheoremId::kT4_4,   TheoremId::kT4_5,
    TheoremId::kT5_1,  TheoremId::kT5_2,   TheoremId::kR5_2,
    TheoremId::kL3_6,
};

struct Outcome {
  bool applicable;
  bool lead;
  bool consistent;
};

Outcome Judge(TheoremId id, const InstanceVerdicts& v) {
  auto a = [&](AxiomId x) { return v.axiom[static_cast<int>(x)]; };
  auto fam = [&](FamilyAxiomId x) { return v.family[static_cast<int>(x)]; };
  const bool mnat = a(AxiomId::kMnatExc);
  const bool m = a(AxiomId::kMExc);
  const bool local3 = a(AxiomId::kL1) && a(AxiomId::kL2) && a(AxiomId::kL3);
  const bool bnat = fam(FamilyAxiomId::kBnatExc);
  const bool bexc = fam(FamilyAxiomId::kBExc);
  const bool conn = fam(FamilyAxiomId::kConnDown) &&
                    fam(FamilyAxiomId::kConnSwap) &&
                    fam(FamilyAxiomId::kConnCross);
  switch (id) {
    case TheoremId::kT2_1:
      return {v.empty_in_domain, mnat, mnat == a(AxiomId::kP1)};
    case TheoremId::kT2_2_1:
      return {true, mnat, mnat == (a(AxiomId::kP1) && a(AxiomId::kP2))};
    case TheoremId::kT2_2_2:
      return {true, mnat,
              mnat == (a(AxiomId::kP2) && a(AxiomId::kP3) && a(AxiomId::kP4))};
    case TheoremId::kT2_3:
      return {true, mnat, mnat == (bnat && local3)};
    case TheoremId::kT2_4:
      return {fam(FamilyAxiomId::kIndAxioms), mnat,
              mnat == (a(AxiomId::kL1) && a(AxiomId::kL2))};
    case TheoremId::kP3_1:
      return {true, bnat, !bnat || conn};
    case TheoremId::kP3_2:
      return {true, mnat, mnat == (conn && local3)};
    case TheoremId::kP4_1:
      return {true, bexc, !bexc || fam(FamilyAxiomId::kEquicard)};
    case TheoremId::kP4_2:
      return {true, m, m == (mnat && fam(FamilyAxiomId::kEquicard))};
    case TheoremId::kP4_3:
      return {true, mnat, mnat == v.lifted_m_exc};
    case TheoremId::kT4_4:
      return {true, m, m == (bexc && a(AxiomId::kMExcLoc))};
    case TheoremId::kT4_5:
      return {true, m,
              m == a(AxiomId::kMExcW) && bexc == fam(FamilyAxiomId::kBExcW)};
    case TheoremId::kT5_1:
      return {true, mnat,
              mnat == a(AxiomId::kMnatExcM) && mnat == a(AxiomId::kMnatExcMs)};
    case TheoremId::kT5_2:
      return {true, m, !m || a(AxiomId::kMExcM)};
    case TheoremId::kR5_2:
      return {true, bnat,
              bnat == fam(FamilyAxiomId::kBnatExcM) &&
                  bnat == fam(FamilyAxiomId::kBnatExcMs) &&
                  (!bexc || fam(FamilyAxiomId::kBExcM))};
    case TheoremId::kL3_6:
      return {true, fam(FamilyAxiomId::kUpDown),
              !fam(FamilyAxiomId::kUpDown) || fam(FamilyAxiomId::kInterval)};
  }
  return {false, false, true};
}

SuiteSummary Run(std::uint64_t count,
                 const std::function<SetFunction(std::uint64_t)>& get,
                 const SuiteOptions& options) {
  std::vector<InstanceVerdicts> verdicts(count);
  internal::ParallelFor(count, options.threads, [&](std::size_t k) {
    verdicts[k] = EvaluateInstance(get(k), options);
  });

  SuiteSummary summary;
  summary.instances = count;
  for (TheoremId id : kAllTheorems) summary.results.push_back({id});
  for (std::uint64_t k = 0; k < count; ++k) {
    const InstanceVerdicts& v = verdicts[k];
    summary.witnesses_verified += v.witnesses_verified;
    summary.witness_failures += v.witness_failures;
    for (SuiteResult& result : summary.results) {
      const Outcome o = Judge(result.id, v);
      if (!o.applicable) continue;
      ++result.instances_checked;
      ++(o.lead ? result.positives : result.negatives);
      if (!o.consistent) result.discrepancies.push_back(Digest(get(k)));
    }
  }
  return summary;
}

}  // namespace

std::string_view Name(TheoremId id) {
  switch (id) {
    case TheoremId::kT2_1: return "T2.1";
    case TheoremId::kT2_2_1: return "T2.2.1";
    case TheoremId::kT2_2_2: return "T2.2.2";
    case TheoremId::kT2_3: return "T2.3";
    case TheoremId::kT2_4: return "T2.4";
    case TheoremId::kP3_1: return "P3.1";
    case TheoremId::kP3_2: return "P3.2";
    case TheoremId::kP4_1: return "P4.1";
    case TheoremId::kP4_2: return "P4.2";
    case TheoremId::kP4_3: return "P4.3";
    case TheoremId::kT4_4: return "T4.4";
    case TheoremId::kT4_5: return "T4.5";
    case TheoremId::kT5_1: return "T5.1";
    case TheoremId::kT5_2: return "T5.2";
    case TheoremId::kR5_2: return "R5.2";
    case TheoremId::kL3_6: return "L3.6";
  }
  return "?";
}

std::span<const TheoremId> AllTheorems() { return kAllTheorems; }

bool SuiteSummary::passed() const {
  if (witness_failures != 0) return false;
  for (const SuiteResult& r : results) {
    if (!r.passed()) return false;
  }
  return true;
}

std::string Digest(const SetFunction& f) {
  // FNV-1a over n and the IEEE bit patterns of the table.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(f.n()));
  for (ExtValue v : f.table()) {
    const double d = v.value();
    std::uint64_t bits;
    std::memcpy(&bits, &d, sizeof bits);
    mix(bits);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

InstanceVerdicts EvaluateInstance(const SetFunction& f,
                                  const SuiteOptions& options) {
  InstanceVerdicts v;
  CheckOptions check;
  check.threads = 1;
  check.multi_exchange_cap = options.multi_exchange_cap;

  for (AxiomId id : AllAxioms()) {
    const CheckReport r = CheckAxiom(f, id, check);
    v.axiom[static_cast<int>(id)] = r.passed;
    if (r.witness) {
      ++v.witnesses_verified;
      if (!VerifyWitness(f, *r.witness)) ++v.witness_failures;
    }
  }
  const SetFamily dom = EffectiveDomain(f);
  v.empty_in_domain = dom.Contains(SubsetMask());
  for (FamilyAxiomId id : AllFamilyAxioms()) {
    const CheckReport r = CheckFamily(dom, id, check);
    v.family[static_cast<int>(id)] = r.passed;
    if (r.witness) {
      ++v.witnesses_verified;
      if (!VerifyFamilyWitness(dom, *r.witness)) ++v.witness_failures;
    }
  }
  int r_max = 0;
  int r_min = f.n();
  for (SubsetMask x : dom.members()) {
    r_max = std::max(r_max, x.size());
    r_min = std::min(r_min, x.size());
  }
  const LiftedFunction lifted = Lift(f, r_max - r_min);
  const CheckReport r = CheckAxiom(lifted.function, AxiomId::kMExc, check);
  v.lifted_m_exc = r.passed;
  if (r.witness) {
    ++v.witnesses_verified;
    if (!VerifyWitness(lifted.function, *r.witness)) ++v.witness_failures;
  }
  return v;
}

SuiteSummary RunSuite(const Corpus& corpus, const SuiteOptions& options) {
  return Run(corpus.size(),
             [&](std::uint64_t k) { return corpus.At(k); }, options);
}

SuiteSummary RunSuite(std::span<const SetFunction> functions,
                      const SuiteOptions& options) {
  return Run(functions.size(),
             [&](std::uint64_t k) { return functions[k]; }, options);
}

}  // namespace dca
