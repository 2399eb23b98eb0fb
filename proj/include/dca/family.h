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

// Set-family axioms: g-matroid and base exchange, independence axioms,
// connectedness, interval closure and multiple exchange.
//
// The exchange-type axioms run the function checkers on the family's
// indicator (0 on members, NEG_INF elsewhere). The remaining axioms are
// implemented directly. Family witnesses use lhs = 0 and rhs = NEG_INF.

#ifndef DCA_FAMILY_H_
#define DCA_FAMILY_H_

#include "dca/axioms.h"
#include "dca/core.h"

namespace dca {

// Throws kEmptyFamily for an empty family and kCapExceeded for the
// multiple-exchange ids above options.multi_exchange_cap.
CheckReport CheckFamily(const SetFamily& family, FamilyAxiomId id,
                        const CheckOptions& options = {});

struct ImpliedProperties {
  CheckReport bnat_exc;
  CheckReport conn_down;
  CheckReport conn_swap;
  CheckReport conn_cross;
};

// Evaluates BNAT_EXC together with the three connectedness properties it
// implies. Throws kInternalContradiction if BNAT_EXC passes while one of
// the others fails.
ImpliedProperties CheckImpliedProperties(const SetFamily& family,
                                         const CheckOptions& options = {});

// I-1 ∧ I-2 ∧ I-3; the witness clause names the first violated one.
CheckReport IsMatroidIndependence(const SetFamily& family,
                                  const CheckOptions& options = {});

// Family counterpart of VerifyWitness.
bool VerifyFamilyWitness(const SetFamily& family, const Witness& w);

}  // namespace dca

#endif  // DCA_FAMILY_H_
