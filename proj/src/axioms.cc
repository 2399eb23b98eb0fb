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

#include "dca/axioms.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <string>
#include <utility>

#include "exchange.h"
#include "parallel.h"

namespace dca {
namespace {

constexpr std::array kAllAxioms = {
    AxiomId::kMnatExc, AxiomId::kP1,       AxiomId::kP2,
    AxiomId::kP3,      AxiomId::kP4,       AxiomId::kL1,
    AxiomId::kL2,      AxiomId::kL3,       AxiomId::kMExc,
    AxiomId::kMExcLoc, AxiomId::kMExcW,    AxiomId::kMnatExcM,
    AxiomId::kMnatExcMs, AxiomId::kMExcM,
};

constexpr std::array kAllFamilyAxioms = {
    FamilyAxiomId::kBnatExc,   FamilyAxiomId::kBExc,
    FamilyAxiomId::kBExcW,     FamilyAxiomId::kEquicard,
    FamilyAxiomId::kIndAxioms, FamilyAxiomId::kConnDown,
    FamilyAxiomId::kConnSwap,  FamilyAxiomId::kConnCross,
    FamilyAxiomId::kUpDown,    FamilyAxiomId::kInterval,
    FamilyAxiomId::kBnatExcM,  FamilyAxiomId::kBnatExcMs,
    FamilyAxiomId::kBExcM,
};

using internal::RowOutcome;

std::vector<SubsetMask> Domain(const SetFunction& f) {
  std::vector<SubsetMask> dom;
  const auto table = f.table();
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    if (table[b].is_finite()) dom.emplace_back(b);
  }
  return dom;
}

Witness MakeWitness(AxiomId id, SubsetMask x, SubsetMask y, ExtValue lhs,
                    ExtValue rhs) {
  Witness w;
  w.property = id;
  w.x = x;
  w.y = y;
  w.lhs = lhs;
  w.rhs = rhs;
  return w;
}

bool CardinalityAdmissible(AxiomId id, SubsetMask x, SubsetMask y) {
  switch (id) {
    case AxiomId::kP1:
    case AxiomId::kP3:
      return x.size() < y.size();
    case AxiomId::kP2:
      return x.size() == y.size();
    case AxiomId::kP4:
      return x.size() > y.size();
    default:
      return true;
  }
}

// Axioms of the form "for all X, Y and i ∈ X\Y: lhs <= rhs(X, Y, i)".
RowOutcome ElementRow(const SetFunction& f, AxiomId id,
                      std::span<const SubsetMask> dom, SubsetMask x) {
  RowOutcome out;
  const double tol = f.tolerance();
  const ExtValue fx = f(x);
  for (SubsetMask y : dom) {
    if (!CardinalityAdmissible(id, x, y)) continue;
    ++out.pairs;
    const SubsetMask x_only = x - y;
    if (x_only.empty()) continue;
    const ExtValue lhs = fx + f(y);
    for (std::uint32_t b = x_only.bits(); b != 0; b &= b - 1) {
      const int i = std::countr_zero(b) + 1;
      const ExtValue rhs = (id == AxiomId::kMnatExc || id == AxiomId::kP4)
                               ? internal::TransferOrSwapMax(f, x, y, i)
                               : internal::SwapMax(f, x, y, i);
      if (Violates(lhs, rhs, tol)) {
        out.witness = MakeWitness(id, x, y, lhs, rhs);
        out.witness->i = i;
        return out;
      }
    }
  }
  return out;
}

RowOutcome P1Row(const SetFunction& f, std::span<const SubsetMask> dom,
                 SubsetMask x) {
  RowOutcome out;
  const double tol = f.tolerance();
  const ExtValue fx = f(x);
  for (SubsetMask y : dom) {
    if (x.size() >= y.size()) continue;
    ++out.pairs;
    const ExtValue lhs = fx + f(y);
    const ExtValue rhs = internal::AddOneMax(f, x, y);
    if (Violates(lhs, rhs, tol)) {
      out.witness = MakeWitness(AxiomId::kP1, x, y, lhs, rhs);
      return out;
    }
  }
  return out;
}

// M-EXC_loc (|X\Y| = 2) and M-EXC_w (X != Y): some (i, j) swap suffices.
RowOutcome PairSwapRow(const SetFunction& f, AxiomId id,
                       std::span<const SubsetMask> dom, SubsetMask x) {
  RowOutcome out;
  const double tol = f.tolerance();
  const ExtValue fx = f(x);
  for (SubsetMask y : dom) {
    if (id == AxiomId::kMExcLoc ? (x - y).size() != 2 : x == y) continue;
    ++out.pairs;
    const ExtValue lhs = fx + f(y);
    const ExtValue rhs = internal::AnySwapMax(f, x, y);
    if (Violates(lhs, rhs, tol)) {
      out.witness = MakeWitness(id, x, y, lhs, rhs);
      return out;
    }
  }
  return out;
}

struct LocalCandidate {
  SubsetMask y;
  std::array<int, 4> elements;
};

// L1-L3: X = Z+i+j ranges over dom f; Y = Z, Z+k or Z+k+l.
RowOutcome LocalRow(const SetFunction& f, AxiomId id, SubsetMask x) {
  RowOutcome out;
  if (x.size() < 2) return out;
  const int arity = id == AxiomId::kL1 ? 2 : (id == AxiomId::kL2 ? 3 : 4);
  const std::vector<int> inside = x.Elements();
  const std::vector<int> outside = (f.ground().full() - x).Elements();
  std::vector<LocalCandidate> cands;
  for (std::size_t a = 0; a < inside.size(); ++a) {
    for (std::size_t b = a + 1; b < inside.size(); ++b) {
      const SubsetMask z = x.Minus(inside[a]).Minus(inside[b]);
      if (arity == 2) {
        cands.push_back({z, {inside[a], inside[b], 0, 0}});
      } else if (arity == 3) {
        for (int k : outside) {
          cands.push_back({z.Plus(k), {inside[a], inside[b], k, 0}});
        }
      } else {
        for (std::size_t c = 0; c < outside.size(); ++c) {
          for (std::size_t d = c + 1; d < outside.size(); ++d) {
            cands.push_back({z.Plus(outside[c]).Plus(outside[d]),
                             {inside[a], inside[b], outside[c], outside[d]}});
          }
        }
      }
    }
  }
  std::sort(cands.begin(), cands.end(),
            [](const LocalCandidate& p, const LocalCandidate& q) {
              return p.y < q.y;
            });
  const double tol = f.tolerance();
  const ExtValue fx = f(x);
  for (const LocalCandidate& c : cands) {
    const ExtValue fy = f(c.y);
    if (!fy.is_finite()) continue;
    ++out.pairs;
    const ExtValue lhs = fx + fy;
    const SubsetMask z = x.Minus(c.elements[0]).Minus(c.elements[1]);
    const ExtValue rhs = internal::LocalRhs(f, id, z, c.elements);
    if (Violates(lhs, rhs, tol)) {
      out.witness = MakeWitness(id, x, c.y, lhs, rhs);
      out.witness->z = z;
      out.witness->local.assign(c.elements.begin(),
                                c.elements.begin() + arity);
      return out;
    }
  }
  return out;
}

RowOutcome MultipleRow(const SetFunction& f, AxiomId id,
                       std::span<const SubsetMask> dom, SubsetMask x) {
  RowOutcome out;
  const double tol = f.tolerance();
  const ExtValue fx = f(x);
  const auto mode = internal::MultiModeFor(id);
  for (SubsetMask y : dom) {
    ++out.pairs;
    const SubsetMask x_only = x - y;
    if (x_only.empty()) continue;
    const ExtValue lhs = fx + f(y);
    bool violated = false;
    ForEachSubmask(x_only, [&](SubsetMask removed) {
      if (violated || removed.empty()) return;
      const auto best = internal::BestMultipleExchange(f, x, y, removed, mode,
                                                       lhs, tol);
      if (!best.satisfied) {
        out.witness = MakeWitness(id, x, y, lhs, best.value);
        out.witness->removed = removed;
        violated = true;
      }
    });
    if (violated) return out;
  }
  return out;
}

RowOutcome AxiomRow(const SetFunction& f, AxiomId id,
                    std::span<const SubsetMask> dom, SubsetMask x) {
  switch (id) {
    case AxiomId::kMnatExc:
    case AxiomId::kP2:
    case AxiomId::kP3:
    case AxiomId::kP4:
    case AxiomId::kMExc:
      return ElementRow(f, id, dom, x);
    case AxiomId::kP1:
      return P1Row(f, dom, x);
    case AxiomId::kL1:
    case AxiomId::kL2:
    case AxiomId::kL3:
      return LocalRow(f, id, x);
    case AxiomId::kMExcLoc:
    case AxiomId::kMExcW:
      return PairSwapRow(f, id, dom, x);
    case AxiomId::kMnatExcM:
    case AxiomId::kMnatExcMs:
    case AxiomId::kMExcM:
      return MultipleRow(f, id, dom, x);
  }
  return {};
}

void RequireInGround(const SetFunction& f, SubsetMask x) {
  if (!f.ground().Contains(x)) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "witness set outside the ground set");
  }
}

void RequireElementOf(int e, SubsetMask set, const char* what) {
  if (e < 1 || e > kHardMaxN || !set.Contains(e)) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   std::string("witness element is not in ") + what);
  }
}

// Recomputes the right-hand side for a witness after validating that it is
// an admissible tuple for its axiom.
ExtValue WitnessRhs(const SetFunction& f, AxiomId id, const Witness& w) {
  const SubsetMask x = w.x;
  const SubsetMask y = w.y;
  switch (id) {
    case AxiomId::kMnatExc:
    case AxiomId::kP2:
    case AxiomId::kP3:
    case AxiomId::kP4:
    case AxiomId::kMExc: {
      if (!w.i) {
        throw DcaError(ErrorCode::kInvalidArgument, "witness lacks i");
      }
      RequireElementOf(*w.i, x - y, "X \\ Y");
      if (!CardinalityAdmissible(id, x, y)) {
        throw DcaError(ErrorCode::kInvalidArgument,
                       "witness violates the cardinality condition");
      }
      return (id == AxiomId::kMnatExc || id == AxiomId::kP4)
                 ? internal::TransferOrSwapMax(f, x, y, *w.i)
                 : internal::SwapMax(f, x, y, *w.i);
    }
    case AxiomId::kP1:
      if (x.size() >= y.size()) {
        throw DcaError(ErrorCode::kInvalidArgument, "P1 needs |X| < |Y|");
      }
      return internal::AddOneMax(f, x, y);
    case AxiomId::kL1:
    case AxiomId::kL2:
    case AxiomId::kL3: {
      const std::size_t arity =
          id == AxiomId::kL1 ? 2 : (id == AxiomId::kL2 ? 3 : 4);
      if (!w.z || w.local.size() != arity) {
        throw DcaError(ErrorCode::kInvalidArgument,
                       "local witness needs Z and its elements");
      }
      RequireInGround(f, *w.z);
      std::array<int, 4> el{0, 0, 0, 0};
      SubsetMask seen;
      for (std::size_t k = 0; k < arity; ++k) {
        el[k] = w.local[k];
        RequireElementOf(el[k], f.ground().full() - *w.z - seen,
                         "N \\ Z (or repeats)");
        seen = seen.Plus(el[k]);
      }
      SubsetMask expect_y = *w.z;
      for (std::size_t k = 2; k < arity; ++k) expect_y = expect_y.Plus(el[k]);
      if (x != w.z->Plus(el[0]).Plus(el[1]) || y != expect_y) {
        throw DcaError(ErrorCode::kInvalidArgument,
                       "local witness sets do not match Z and its elements");
      }
      return internal::LocalRhs(f, id, *w.z, el);
    }
    case AxiomId::kMExcLoc:
      if ((x - y).size() != 2) {
        throw DcaError(ErrorCode::kInvalidArgument,
                       "M_EXC_LOC needs |X \\ Y| = 2");
      }
      return internal::AnySwapMax(f, x, y);
    case AxiomId::kMExcW:
      if (x == y) {
        throw DcaError(ErrorCode::kInvalidArgument, "M_EXC_W needs X != Y");
      }
      return internal::AnySwapMax(f, x, y);
    case AxiomId::kMnatExcM:
    case AxiomId::kMnatExcMs:
    case AxiomId::kMExcM: {
      if (!w.removed || !w.removed->IsSubsetOf(x - y)) {
        throw DcaError(ErrorCode::kInvalidArgument,
                       "multiple-exchange witness needs I ⊆ X \\ Y");
      }
      // Full scan: pass a left side no candidate can satisfy.
      return internal::BestMultipleExchange(f, x, y, *w.removed,
                                            internal::MultiModeFor(id),
                                            ExtValue::NegInf(), 0.0,
                                            /*stop_early=*/false)
          .value;
    }
  }
  return ExtValue::NegInf();
}

// Element roles for the three pairings of a local tuple.
struct Pairing {
  SubsetMask x;
  SubsetMask y;
  std::array<int, 4> elements;
};

}  // namespace

std::string_view Name(AxiomId id) {
  switch (id) {
    case AxiomId::kMnatExc: return "MNAT_EXC";
    case AxiomId::kP1: return "P1";
    case AxiomId::kP2: return "P2";
    case AxiomId::kP3: return "P3";
    case AxiomId::kP4: return "P4";
    case AxiomId::kL1: return "L1";
    case AxiomId::kL2: return "L2";
    case AxiomId::kL3: return "L3";
    case AxiomId::kMExc: return "M_EXC";
    case AxiomId::kMExcLoc: return "M_EXC_LOC";
    case AxiomId::kMExcW: return "M_EXC_W";
    case AxiomId::kMnatExcM: return "MNAT_EXC_M";
    case AxiomId::kMnatExcMs: return "MNAT_EXC_MS";
    case AxiomId::kMExcM: return "M_EXC_M";
  }
  return "?";
}

std::string_view Name(FamilyAxiomId id) {
  switch (id) {
    case FamilyAxiomId::kBnatExc: return "BNAT_EXC";
    case FamilyAxiomId::kBExc: return "B_EXC";
    case FamilyAxiomId::kBExcW: return "B_EXC_W";
    case FamilyAxiomId::kEquicard: return "EQUICARD";
    case FamilyAxiomId::kIndAxioms: return "IND_AXIOMS";
    case FamilyAxiomId::kConnDown: return "CONN_DOWN";
    case FamilyAxiomId::kConnSwap: return "CONN_SWAP";
    case FamilyAxiomId::kConnCross: return "CONN_CROSS";
    case FamilyAxiomId::kUpDown: return "UPDOWN";
    case FamilyAxiomId::kInterval: return "INTERVAL";
    case FamilyAxiomId::kBnatExcM: return "BNAT_EXC_M";
    case FamilyAxiomId::kBnatExcMs: return "BNAT_EXC_MS";
    case FamilyAxiomId::kBExcM: return "B_EXC_M";
  }
  return "?";
}

std::string_view Name(const Property& p) {
  return std::visit([](auto id) { return Name(id); }, p);
}

std::optional<AxiomId> ParseAxiomId(std::string_view name) {
  for (AxiomId id : kAllAxioms) {
    if (Name(id) == name) return id;
  }
  return std::nullopt;
}

std::optional<FamilyAxiomId> ParseFamilyAxiomId(std::string_view name) {
  for (FamilyAxiomId id : kAllFamilyAxioms) {
    if (Name(id) == name) return id;
  }
  return std::nullopt;
}

std::span<const AxiomId> AllAxioms() { return kAllAxioms; }
std::span<const FamilyAxiomId> AllFamilyAxioms() { return kAllFamilyAxioms; }

bool IsMultipleExchange(AxiomId id) {
  return id == AxiomId::kMnatExcM || id == AxiomId::kMnatExcMs ||
         id == AxiomId::kMExcM;
}

CheckReport CheckAxiom(const SetFunction& f, AxiomId id,
                       const CheckOptions& options) {
  if (IsMultipleExchange(id) && f.n() > options.multi_exchange_cap) {
    throw DcaError(ErrorCode::kCapExceeded,
                   std::string(Name(id)) + " is capped at n <= " +
                       std::to_string(options.multi_exchange_cap));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SubsetMask> dom = Domain(f);
  auto sweep = internal::SweepRows(dom.size(), options.threads,
                                   [&](std::size_t r) {
                                     return AxiomRow(f, id, dom, dom[r]);
                                   });
  CheckReport report;
  report.property = id;
  report.passed = !sweep.witness.has_value();
  report.witness = std::move(sweep.witness);
  report.pairs_examined = sweep.pairs;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

CheckReport IsMnatConcave(const SetFunction& f, const CheckOptions& options) {
  return CheckAxiom(f, AxiomId::kMnatExc, options);
}

CheckReport IsMConcave(const SetFunction& f, const CheckOptions& options) {
  return CheckAxiom(f, AxiomId::kMExc, options);
}

bool VerifyWitness(const SetFunction& f, const Witness& w) {
  const auto* id = std::get_if<AxiomId>(&w.property);
  if (id == nullptr) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "family witness passed to the function verifier");
  }
  RequireInGround(f, w.x);
  RequireInGround(f, w.y);
  const ExtValue lhs = f(w.x) + f(w.y);
  const ExtValue rhs = WitnessRhs(f, *id, w);
  if (lhs != w.lhs || rhs != w.rhs) return false;
  return Violates(lhs, rhs, f.tolerance());
}

CheckReport TwoMaximizerCheck(const SetFunction& f, AxiomId id,
                              const CheckOptions& options) {
  if (id != AxiomId::kL2 && id != AxiomId::kL3) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "two-maximizer form exists only for L2 and L3");
  }
  const auto start = std::chrono::steady_clock::now();
  const int arity = id == AxiomId::kL2 ? 3 : 4;
  const double tol = f.tolerance();
  const SubsetMask full = f.ground().full();

  // Rows are the base sets Z; each row visits the local tuples T ⊆ N \ Z.
  auto row = [&](std::size_t zb) {
    RowOutcome out;
    const SubsetMask z(static_cast<std::uint32_t>(zb));
    ForEachSubmask(full - z, [&](SubsetMask t) {
      if (out.witness || t.size() != arity) return;
      ++out.pairs;
      const std::vector<int> e = t.Elements();
      std::array<Pairing, 3> pairings;
      if (arity == 3) {
        // The singleton element sits with Z alone.
        pairings[0] = {z.Plus(e[0]).Plus(e[1]), z.Plus(e[2]),
                       {e[0], e[1], e[2], 0}};
        pairings[1] = {z.Plus(e[0]).Plus(e[2]), z.Plus(e[1]),
                       {e[0], e[2], e[1], 0}};
        pairings[2] = {z.Plus(e[1]).Plus(e[2]), z.Plus(e[0]),
                       {e[1], e[2], e[0], 0}};
      } else {
        pairings[0] = {z.Plus(e[0]).Plus(e[1]), z.Plus(e[2]).Plus(e[3]),
                       {e[0], e[1], e[2], e[3]}};
        pairings[1] = {z.Plus(e[0]).Plus(e[2]), z.Plus(e[1]).Plus(e[3]),
                       {e[0], e[2], e[1], e[3]}};
        pairings[2] = {z.Plus(e[0]).Plus(e[3]), z.Plus(e[1]).Plus(e[2]),
                       {e[0], e[3], e[1], e[2]}};
      }
      std::array<ExtValue, 3> sums;
      for (int k = 0; k < 3; ++k) {
        sums[k] = f(pairings[k].x) + f(pairings[k].y);
      }
      int top = 0;
      for (int k = 1; k < 3; ++k) {
        if (sums[k] > sums[top]) top = k;
      }
      ExtValue second = ExtValue::NegInf();
      for (int k = 0; k < 3; ++k) {
        if (k != top) second = Max(second, sums[k]);
      }
      if (Violates(sums[top], second, tol)) {
        Witness w = MakeWitness(id, pairings[top].x, pairings[top].y,
                                sums[top], second);
        w.z = z;
        w.local.assign(pairings[top].elements.begin(),
                       pairings[top].elements.begin() + arity);
        out.witness = std::move(w);
      }
    });
    return out;
  };
  auto sweep =
      internal::SweepRows(f.ground().num_subsets(), options.threads, row);
  CheckReport report;
  report.property = id;
  report.passed = !sweep.witness.has_value();
  report.witness = std::move(sweep.witness);
  report.pairs_examined = sweep.pairs;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace dca
