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

// Right-hand sides of the exchange inequalities. Shared by the sweeps, the
// witness verifier and the duality module so that all of them evaluate the
// same expressions in the same order.

#ifndef DCA_SRC_EXCHANGE_H_
#define DCA_SRC_EXCHANGE_H_

#include <array>
#include <bit>

#include "dca/axioms.h"
#include "dca/core.h"

namespace dca::internal {

// max_{j ∈ Y\X} f(X - i + j) + f(Y + i - j)
inline ExtValue SwapMax(const SetFunction& f, SubsetMask x, SubsetMask y,
                        int i) {
  ExtValue best = ExtValue::NegInf();
  const SubsetMask xi = x.Minus(i);
  const SubsetMask yi = y.Plus(i);
  for (std::uint32_t b = (y - x).bits(); b != 0; b &= b - 1) {
    const int j = std::countr_zero(b) + 1;
    best = Max(best, f(xi.Plus(j)) + f(yi.Minus(j)));
  }
  return best;
}

// max( f(X - i) + f(Y + i), SwapMax )
inline ExtValue TransferOrSwapMax(const SetFunction& f, SubsetMask x,
                                  SubsetMask y, int i) {
  return Max(f(x.Minus(i)) + f(y.Plus(i)), SwapMax(f, x, y, i));
}

// max_{j ∈ Y\X} f(X + j) + f(Y - j)
inline ExtValue AddOneMax(const SetFunction& f, SubsetMask x, SubsetMask y) {
  ExtValue best = ExtValue::NegInf();
  for (std::uint32_t b = (y - x).bits(); b != 0; b &= b - 1) {
    const int j = std::countr_zero(b) + 1;
    best = Max(best, f(x.Plus(j)) + f(y.Minus(j)));
  }
  return best;
}

// max_{i ∈ X\Y, j ∈ Y\X} f(X - i + j) + f(Y + i - j)
inline ExtValue AnySwapMax(const SetFunction& f, SubsetMask x, SubsetMask y) {
  ExtValue best = ExtValue::NegInf();
  for (std::uint32_t b = (x - y).bits(); b != 0; b &= b - 1) {
    best = Max(best, SwapMax(f, x, y, std::countr_zero(b) + 1));
  }
  return best;
}

// Right side of L1/L2/L3 for base set z and elements (i, j[, k[, l]]).
inline ExtValue LocalRhs(const SetFunction& f, AxiomId id, SubsetMask z,
                         const std::array<int, 4>& e) {
  const int i = e[0], j = e[1], k = e[2], l = e[3];
  switch (id) {
    case AxiomId::kL1:
      return f(z.Plus(i)) + f(z.Plus(j));
    case AxiomId::kL2:
      return Max(f(z.Plus(i).Plus(k)) + f(z.Plus(j)),
                 f(z.Plus(j).Plus(k)) + f(z.Plus(i)));
    default:
      return Max(f(z.Plus(i).Plus(k)) + f(z.Plus(j).Plus(l)),
                 f(z.Plus(j).Plus(k)) + f(z.Plus(i).Plus(l)));
  }
}

enum class MultiMode { kAny, kAtMost, kEqual };

inline MultiMode MultiModeFor(AxiomId id) {
  switch (id) {
    case AxiomId::kMnatExcMs: return MultiMode::kAtMost;
    case AxiomId::kMExcM: return MultiMode::kEqual;
    default: return MultiMode::kAny;
  }
}

struct MultiExchangeResult {
  ExtValue value;            // max over the admissible J examined
  SubsetMask best_j;         // smallest-bits argmax
  bool satisfied = false;    // some J met lhs <= value + tol
};

// Scans J ⊆ Y\X in increasing bit order for
//   f((X \ I) ∪ J) + f((Y \ J) ∪ I).
// With stop_early, returns at the first J satisfying the inequality;
// otherwise scans all admissible J and reports the exact maximum.
inline MultiExchangeResult BestMultipleExchange(
    const SetFunction& f, SubsetMask x, SubsetMask y, SubsetMask removed,
    MultiMode mode, ExtValue lhs, double tol, bool stop_early = true) {
  MultiExchangeResult out;
  const SubsetMask x_rest = x - removed;
  const SubsetMask y_only = y - x;
  const int k = removed.size();
  const std::uint32_t m = y_only.bits();
  std::uint32_t sub = 0;
  while (true) {
    const SubsetMask j(sub);
    const int c = j.size();
    const bool ok = mode == MultiMode::kAny ||
                    (mode == MultiMode::kAtMost ? c <= k : c == k);
    if (ok) {
      const ExtValue v = f(x_rest | j) + f((y - j) | removed);
      if (v > out.value) {
        out.value = v;
        out.best_j = j;
      }
      if (stop_early && !Violates(lhs, v, tol)) {
        out.satisfied = true;
        return out;
      }
    }
    if (sub == m) break;
    sub = (sub - m) & m;
  }
  out.satisfied = !Violates(lhs, out.value, tol);
  return out;
}

}  // namespace dca::internal

#endif  // DCA_SRC_EXCHANGE_H_
