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

// Exhaustive checkers for the exchange axioms of set functions.
//
// Every axiom has the shape "for all admissible (X, Y, ...):
// f(X) + f(Y) <= rhs". A tuple whose left side is NEG_INF can never violate
// it, so the sweeps only visit pairs with X, Y ∈ dom f; this is equivalent to
// quantifying over all subsets. Sweeps run over X in increasing bit order,
// then Y, then the inner choice, and the first violation found is therefore
// the lexicographically minimal witness.

#ifndef DCA_AXIOMS_H_
#define DCA_AXIOMS_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dca/core.h"

namespace dca {

enum class AxiomId {
  kMnatExc,     // M♮-EXC: transfer or swap, for all X, Y, i ∈ X\Y
  kP1,          // |X| < |Y|: some j ∈ Y\X moves from Y to X
  kP2,          // |X| = |Y|, i ∈ X\Y: swap only
  kP3,          // |X| < |Y|, i ∈ X\Y: swap only
  kP4,          // |X| > |Y|, i ∈ X\Y: transfer or swap
  kL1,          // f(Z+i+j) + f(Z) <= f(Z+i) + f(Z+j)
  kL2,          // f(Z+i+j) + f(Z+k) <= max of the two other pairings
  kL3,          // f(Z+i+j) + f(Z+k+l) <= max of the two other pairings
  kMExc,        // M-EXC: swap only, for all X, Y, i ∈ X\Y
  kMExcLoc,     // |X\Y| = 2: some (i, j) swap
  kMExcW,       // X != Y: some (i, j) swap
  kMnatExcM,    // multiple exchange, any J ⊆ Y\X
  kMnatExcMs,   // multiple exchange with |J| <= |I|
  kMExcM,       // multiple exchange with |J| = |I|
};

enum class FamilyAxiomId {
  kBnatExc,     // g-matroid exchange
  kBExc,        // matroid base exchange
  kBExcW,       // weak base exchange over distinct pairs
  kEquicard,    // all members share one cardinality
  kIndAxioms,   // matroid independence axioms I-1, I-2, I-3
  kConnDown,    // |X| < |Y| => Y - j ∈ F for some j ∈ Y\X
  kConnSwap,    // |X| = |Y|, X != Y => Y + i - j ∈ F
  kConnCross,   // |X| < |Y|, X\Y != ∅ => Y + i - j ∈ F
  kUpDown,      // X ⊊ Y => X + j, Y - j ∈ F for some j
  kInterval,    // X ⊆ Z ⊆ Y with X, Y ∈ F => Z ∈ F
  kBnatExcM,    // multiple exchange for g-matroids
  kBnatExcMs,   // ... with |J| <= |I|
  kBExcM,       // multiple exchange for bases, |J| = |I|
};

using Property = std::variant<AxiomId, FamilyAxiomId>;

std::string_view Name(AxiomId id);
std::string_view Name(FamilyAxiomId id);
std::string_view Name(const Property& p);
std::optional<AxiomId> ParseAxiomId(std::string_view name);
std::optional<FamilyAxiomId> ParseFamilyAxiomId(std::string_view name);
std::span<const AxiomId> AllAxioms();
std::span<const FamilyAxiomId> AllFamilyAxioms();

bool IsMultipleExchange(AxiomId id);

// A concrete tuple at which a universally quantified axiom fails.
//
// X and Y are always the two sets whose values form the left-hand side.
// Depending on the axiom the witness also carries the removed element i,
// the removed set I (multiple exchange), or the base set Z together with
// the local elements i, j[, k[, l]] (L1-L3, and Z for INTERVAL).
struct Witness {
  Property property = AxiomId::kMnatExc;
  SubsetMask x;
  SubsetMask y;
  std::optional<int> i;
  std::optional<SubsetMask> removed;  // I
  std::optional<SubsetMask> z;
  std::vector<int> local;             // i, j[, k[, l]] for L1-L3
  std::string clause;                 // violated sub-axiom, e.g. "I-2"
  ExtValue lhs;
  ExtValue rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  Property property = AxiomId::kMnatExc;
  bool passed = true;
  std::optional<Witness> witness;
  // (X, Y) pairs with both sets in the domain that the sweep examined,
  // up to and including the witness pair. Independent of worker count.
  std::uint64_t pairs_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct CheckOptions {
  int threads = 1;
  int multi_exchange_cap = 16;
};

// Throws kCapExceeded for multiple-exchange axioms when f.n() exceeds
// options.multi_exchange_cap.
CheckReport CheckAxiom(const SetFunction& f, AxiomId id,
                       const CheckOptions& options = {});

CheckReport IsMnatConcave(const SetFunction& f,
                          const CheckOptions& options = {});
CheckReport IsMConcave(const SetFunction& f, const CheckOptions& options = {});

// Re-evaluates the axiom at the witness tuple. True iff the stored lhs/rhs
// match a fresh evaluation on f and lhs > rhs (+ tolerance). Throws
// kInvalidArgument when the witness names a family axiom, lies outside f's
// ground set or is not an admissible tuple for its axiom.
bool VerifyWitness(const SetFunction& f, const Witness& w);

// L2/L3 in their two-maximizer form: for every Z and distinct local
// elements, the largest of the three pairing sums occurs at least twice.
// Must agree with CheckAxiom on every input. Throws kInvalidArgument for
// other ids.
CheckReport TwoMaximizerCheck(const SetFunction& f, AxiomId id,
                              const CheckOptions& options = {});

}  // namespace dca

#endif  // DCA_AXIOMS_H_
