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

// Empirical validation of the equivalence theorems among the axioms.
//
// Every corpus instance is run through all function and family checkers;
// each theorem then compares the verdicts it relates. An instance on which
// the two sides disagree is a discrepancy, recorded by its digest.

#ifndef DCA_SUITE_H_
#define DCA_SUITE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dca/core.h"
#include "dca/generators.h"

namespace dca {

enum class TheoremId {
  kT2_1,    // ∅ ∈ dom f:  MNAT_EXC ⇔ P1
  kT2_2_1,  // MNAT_EXC ⇔ P1 ∧ P2
  kT2_2_2,  // MNAT_EXC ⇔ P2 ∧ P3 ∧ P4
  kT2_3,    // MNAT_EXC ⇔ BNAT_EXC(dom) ∧ L1 ∧ L2 ∧ L3
  kT2_4,    // dom independent sets:  MNAT_EXC ⇔ L1 ∧ L2
  kP3_1,    // BNAT_EXC ⇒ CONN_DOWN ∧ CONN_SWAP ∧ CONN_CROSS
  kP3_2,    // MNAT_EXC ⇔ CONN_*(dom) ∧ L1 ∧ L2 ∧ L3
  kP4_1,    // B_EXC ⇒ EQUICARD
  kP4_2,    // M_EXC ⇔ MNAT_EXC ∧ EQUICARD(dom)
  kP4_3,    // MNAT_EXC(f) ⇔ M_EXC(lift(f, r - r'))
  kT4_4,    // M_EXC ⇔ B_EXC(dom) ∧ M_EXC_LOC
  kT4_5,    // M_EXC ⇔ M_EXC_W, and B_EXC ⇔ B_EXC_W on dom
  kT5_1,    // MNAT_EXC ⇔ MNAT_EXC_M ⇔ MNAT_EXC_MS
  kT5_2,    // M_EXC ⇒ M_EXC_M
  kR5_2,    // BNAT_EXC ⇔ BNAT_EXC_M ⇔ BNAT_EXC_MS; B_EXC ⇒ B_EXC_M
  kL3_6,    // UPDOWN ⇒ INTERVAL
};

std::string_view Name(TheoremId id);
std::span<const TheoremId> AllTheorems();

struct SuiteResult {
  TheoremId id = TheoremId::kT2_1;
  std::uint64_t instances_checked = 0;  // instances meeting the hypothesis
  // Split of checked instances by the verdict of the theorem's leading
  // property (the left side of an equivalence, the premise of an
  // implication).
  std::uint64_t positives = 0;
  std::uint64_t negatives = 0;
  std::vector<std::string> discrepancies;

  bool passed() const { return discrepancies.empty(); }
};

struct SuiteSummary {
  std::uint64_t instances = 0;
  std::vector<SuiteResult> results;  // in AllTheorems() order
  // Every failing report produced by the suite is re-validated.
  std::uint64_t witnesses_verified = 0;
  std::uint64_t witness_failures = 0;

  bool passed() const;
};

struct SuiteOptions {
  int threads = 1;
  int multi_exchange_cap = 16;
};

// Hex digest of the ground size and the raw table bits; stable across runs.
std::string Digest(const SetFunction& f);

// Verdicts of every checker on one instance, in a fixed layout.
struct InstanceVerdicts {
  bool axiom[14] = {};         // indexed by AxiomId
  bool family[13] = {};        // indexed by FamilyAxiomId, on dom f
  bool lifted_m_exc = false;   // M_EXC on lift(f, r - r')
  bool empty_in_domain = false;
  std::uint64_t witnesses_verified = 0;
  std::uint64_t witness_failures = 0;
};

InstanceVerdicts EvaluateInstance(const SetFunction& f,
                                  const SuiteOptions& options = {});

// Runs all theorems over the corpus. The result does not depend on
// options.threads.
SuiteSummary RunSuite(const Corpus& corpus, const SuiteOptions& options = {});

// Same, over an explicit list of functions.
SuiteSummary RunSuite(std::span<const SetFunction> functions,
                      const SuiteOptions& options = {});

}  // namespace dca

#endif  // DCA_SUITE_H_
