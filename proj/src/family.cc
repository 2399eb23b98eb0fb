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

#include "dca/family.h"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "parallel.h"

namespace dca {
namespace {

using internal::RowOutcome;

std::optional<AxiomId> IndicatorAxiom(FamilyAxiomId id) {
  switch (id) {
    case FamilyAxiomId::kBnatExc: return AxiomId::kMnatExc;
    case FamilyAxiomId::kBExc: return AxiomId::kMExc;
    case FamilyAxiomId::kBExcW: return AxiomId::kMExcW;
    case FamilyAxiomId::kBnatExcM: return AxiomId::kMnatExcM;
    case FamilyAxiomId::kBnatExcMs: return AxiomId::kMnatExcMs;
    case FamilyAxiomId::kBExcM: return AxiomId::kMExcM;
    default: return std::nullopt;
  }
}

Witness FamilyWitness(FamilyAxiomId id, SubsetMask x, SubsetMask y) {
  Witness w;
  w.property = id;
  w.x = x;
  w.y = y;
  w.lhs = 0.0;
  w.rhs = ExtValue::NegInf();
  return w;
}

bool AnyRemoval(const SetFamily& fam, SubsetMask x, SubsetMask y) {
  for (std::uint32_t b = (y - x).bits(); b != 0; b &= b - 1) {
    if (fam.Contains(y.Minus(std::countr_zero(b) + 1))) return true;
  }
  return false;
}

bool AnyAddition(const SetFamily& fam, SubsetMask x, SubsetMask y) {
  for (std::uint32_t b = (y - x).bits(); b != 0; b &= b - 1) {
    if (fam.Contains(x.Plus(std::countr_zero(b) + 1))) return true;
  }
  return false;
}

// Some i ∈ X\Y, j ∈ Y\X with Y + i - j ∈ F.
bool AnySwapInto(const SetFamily& fam, SubsetMask x, SubsetMask y) {
  for (std::uint32_t bi = (x - y).bits(); bi != 0; bi &= bi - 1) {
    const SubsetMask yi = y.Plus(std::countr_zero(bi) + 1);
    for (std::uint32_t bj = (y - x).bits(); bj != 0; bj &= bj - 1) {
      if (fam.Contains(yi.Minus(std::countr_zero(bj) + 1))) return true;
    }
  }
  return false;
}

bool AnyUpDown(const SetFamily& fam, SubsetMask x, SubsetMask y) {
  for (std::uint32_t b = (y - x).bits(); b != 0; b &= b - 1) {
    const int j = std::countr_zero(b) + 1;
    if (fam.Contains(x.Plus(j)) && fam.Contains(y.Minus(j))) return true;
  }
  return false;
}

// Whether the pair (X, Y) is in the quantifier domain of a direct axiom.
bool PairAdmissible(FamilyAxiomId id, SubsetMask x, SubsetMask y) {
  switch (id) {
    case FamilyAxiomId::kEquicard:
      return true;
    case FamilyAxiomId::kConnDown:
    case FamilyAxiomId::kIndAxioms:  // I-3
      return x.size() < y.size();
    case FamilyAxiomId::kConnSwap:
      return x.size() == y.size() && x != y;
    case FamilyAxiomId::kConnCross:
      return x.size() < y.size() && !(x - y).empty();
    case FamilyAxiomId::kUpDown:
    case FamilyAxiomId::kInterval:
      return x.IsSubsetOf(y) && x != y;
    default:
      return false;
  }
}

// For an admissible pair: whether the required exchange exists.
bool PairSatisfied(const SetFamily& fam, FamilyAxiomId id, SubsetMask x,
                   SubsetMask y) {
  switch (id) {
    case FamilyAxiomId::kEquicard:
      return x.size() == y.size();
    case FamilyAxiomId::kConnDown:
      return AnyRemoval(fam, x, y);
    case FamilyAxiomId::kIndAxioms:
      return AnyAddition(fam, x, y);
    case FamilyAxiomId::kConnSwap:
    case FamilyAxiomId::kConnCross:
      return AnySwapInto(fam, x, y);
    case FamilyAxiomId::kUpDown:
      return AnyUpDown(fam, x, y);
    default:
      return true;
  }
}

// First Z with X ⊆ Z ⊆ Y and Z ∉ F, in increasing order.
std::optional<SubsetMask> IntervalGap(const SetFamily& fam, SubsetMask x,
                                      SubsetMask y) {
  std::optional<SubsetMask> gap;
  ForEachSubmask(y - x, [&](SubsetMask extra) {
    if (!gap && !fam.Contains(x | extra)) gap = x | extra;
  });
  return gap;
}

RowOutcome DirectRow(const SetFamily& fam, FamilyAxiomId id, SubsetMask x) {
  RowOutcome out;
  for (SubsetMask y : fam.members()) {
    if (!PairAdmissible(id, x, y)) continue;
    ++out.pairs;
    if (id == FamilyAxiomId::kInterval) {
      if (auto gap = IntervalGap(fam, x, y)) {
        out.witness = FamilyWitness(id, x, y);
        out.witness->z = *gap;
        return out;
      }
    } else if (!PairSatisfied(fam, id, x, y)) {
      out.witness = FamilyWitness(id, x, y);
      if (id == FamilyAxiomId::kIndAxioms) out.witness->clause = "I-3";
      return out;
    }
  }
  return out;
}

internal::SweepResult DirectSweep(const SetFamily& fam, FamilyAxiomId id,
                                  int threads) {
  const auto members = fam.members();
  return internal::SweepRows(members.size(), threads, [&](std::size_t r) {
    return DirectRow(fam, id, members[r]);
  });
}

// I-2 violation: the smallest non-member X with a member superset Y, and
// the smallest such Y.
std::optional<Witness> HereditaryGap(const SetFamily& fam) {
  const std::uint32_t size = fam.ground().num_subsets();
  // below_member[X]: X is contained in some member.
  std::vector<std::uint8_t> below_member(size, 0);
  for (SubsetMask y : fam.members()) below_member[y.bits()] = 1;
  for (int e = 0; e < fam.n(); ++e) {
    for (std::uint32_t b = size; b-- > 0;) {
      if (!(b & (1u << e)) && below_member[b | (1u << e)]) below_member[b] = 1;
    }
  }
  for (std::uint32_t b = 0; b < size; ++b) {
    const SubsetMask x(b);
    if (!below_member[b] || fam.Contains(x)) continue;
    for (SubsetMask y : fam.members()) {
      if (x.IsSubsetOf(y)) {
        Witness w = FamilyWitness(FamilyAxiomId::kIndAxioms, x, y);
        w.clause = "I-2";
        return w;
      }
    }
  }
  return std::nullopt;
}

CheckReport Finish(FamilyAxiomId id, internal::SweepResult sweep,
                   std::chrono::steady_clock::time_point start) {
  CheckReport report;
  report.property = id;
  report.passed = !sweep.witness.has_value();
  report.witness = std::move(sweep.witness);
  report.pairs_examined = sweep.pairs;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

CheckReport CheckFamily(const SetFamily& family, FamilyAxiomId id,
                        const CheckOptions& options) {
  if (family.empty()) {
    throw DcaError(ErrorCode::kEmptyFamily, "family has no members");
  }
  const auto start = std::chrono::steady_clock::now();
  if (auto axiom = IndicatorAxiom(id)) {
    CheckReport report = CheckAxiom(Indicator(family), *axiom, options);
    report.property = id;
    if (report.witness) report.witness->property = id;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }
  if (id == FamilyAxiomId::kIndAxioms) {
    internal::SweepResult sweep;
    if (!family.Contains(SubsetMask())) {
      sweep.witness = FamilyWitness(id, SubsetMask(), SubsetMask());
      sweep.witness->clause = "I-1";
    } else if (auto gap = HereditaryGap(family)) {
      sweep.witness = std::move(gap);
    } else {
      sweep = DirectSweep(family, id, options.threads);
    }
    return Finish(id, std::move(sweep), start);
  }
  return Finish(id, DirectSweep(family, id, options.threads), start);
}

ImpliedProperties CheckImpliedProperties(const SetFamily& family,
                                         const CheckOptions& options) {
  ImpliedProperties out{
      CheckFamily(family, FamilyAxiomId::kBnatExc, options),
      CheckFamily(family, FamilyAxiomId::kConnDown, options),
      CheckFamily(family, FamilyAxiomId::kConnSwap, options),
      CheckFamily(family, FamilyAxiomId::kConnCross, options),
  };
  if (out.bnat_exc.passed &&
      !(out.conn_down.passed && out.conn_swap.passed && out.conn_cross.passed)) {
    throw DcaError(ErrorCode::kInternalContradiction,
                   "BNAT_EXC holds but a connectedness property fails");
  }
  return out;
}

CheckReport IsMatroidIndependence(const SetFamily& family,
                                  const CheckOptions& options) {
  return CheckFamily(family, FamilyAxiomId::kIndAxioms, options);
}

bool VerifyFamilyWitness(const SetFamily& family, const Witness& w) {
  const auto* id = std::get_if<FamilyAxiomId>(&w.property);
  if (id == nullptr) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "function witness passed to the family verifier");
  }
  if (!family.ground().Contains(w.x) || !family.ground().Contains(w.y)) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "witness set outside the ground set");
  }
  if (auto axiom = IndicatorAxiom(*id)) {
    Witness as_function = w;
    as_function.property = *axiom;
    return VerifyWitness(Indicator(family), as_function);
  }
  if (w.lhs != ExtValue(0.0) || w.rhs != ExtValue::NegInf()) return false;

  if (*id == FamilyAxiomId::kIndAxioms) {
    if (w.clause == "I-1") return !family.Contains(SubsetMask());
    if (w.clause == "I-2") {
      return family.Contains(w.y) && w.x.IsSubsetOf(w.y) &&
             !family.Contains(w.x);
    }
    if (w.clause != "I-3") {
      throw DcaError(ErrorCode::kInvalidArgument,
                     "unknown independence clause '" + w.clause + "'");
    }
  }
  if (!family.Contains(w.x) || !family.Contains(w.y)) return false;
  if (!PairAdmissible(*id, w.x, w.y)) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "witness pair outside the axiom's quantifier domain");
  }
  if (*id == FamilyAxiomId::kInterval) {
    if (!w.z) {
      throw DcaError(ErrorCode::kInvalidArgument, "INTERVAL witness lacks Z");
    }
    return w.x.IsSubsetOf(*w.z) && w.z->IsSubsetOf(w.y) &&
           !family.Contains(*w.z);
  }
  return !PairSatisfied(family, *id, w.x, w.y);
}

}  // namespace dca
