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

// Conjugates and the duality bounds behind multiple exchange.
//
// For X, Y and I ⊆ X \ Y, with C = X ∩ Y, X0 = X \ Y, Y0 = Y \ X:
//   f1(J) = f((X \ I) ∪ J),  f2(J) = f((Y \ J) ∪ I)   for J ⊆ Y0,
//   g1(q) = max_J f1(J) - q(J),  g2(-q) = max_J f2(J) + q(J).
// Multiple exchange asks for max_J f1(J) + f2(J) >= f(X) + f(Y). Every q
// gives the upper bound g1(q) + g2(-q) >= max_J f1(J) + f2(J), and for
// M♮-concave f also g1(q) + g2(-q) >= f(X) + f(Y). The infimum over all of
// R^Y0 is not computed; sampled q certify the bounds one-sidedly only.

#ifndef DCA_DUALITY_H_
#define DCA_DUALITY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "dca/core.h"

namespace dca {

class ExchangeContext {
 public:
  // Throws kInvalidArgument unless X, Y lie in `ground` and I ⊆ X \ Y.
  ExchangeContext(const GroundSet& ground, SubsetMask x, SubsetMask y,
                  SubsetMask removed);

  SubsetMask x() const { return x_; }
  SubsetMask y() const { return y_; }
  SubsetMask removed() const { return removed_; }  // I
  SubsetMask common() const { return x_ & y_; }    // C
  SubsetMask x_only() const { return x_ - y_; }    // X0
  SubsetMask y_only() const { return y_ - x_; }    // Y0

 private:
  SubsetMask x_;
  SubsetMask y_;
  SubsetMask removed_;
};

struct DualityConfig {
  // Large constant for the price grid; computed from f when unset.
  std::optional<double> big_m;
  int q_samples = 200;
  int pair_samples = 500;
  std::uint64_t seed = 42;
  // Extra coordinate values for the submodularity price pairs.
  std::vector<double> grid;
  int threads = 1;
};

// 2 * (max finite value - min finite value) + 1.
double DefaultBigM(const SetFunction& f);

struct ConjugateValue {
  ExtValue value;
  SubsetMask maximizer;  // smallest-bits argmax
};

// g(p) = max_Z f(Z) - p(Z). Throws kDimensionMismatch on a size mismatch.
ConjugateValue Conjugate(const SetFunction& f, const PriceVector& p);

// f1 and f2 as functions on the ground set Y0, whose element t (1-based)
// stands for the t-th smallest element of Y0.
struct ExchangePair {
  SetFunction f1;
  SetFunction f2;
  std::vector<int> y0_elements;
};

// Throws kEmptyDomain when dom f1 or dom f2 is empty.
ExchangePair MakeExchangePair(const SetFunction& f, const ExchangeContext& ctx);

struct MultipleExchangeValue {
  ExtValue max_value;
  SubsetMask best_j;  // in f's ground set; smallest-bits argmax
};

// max_{J ⊆ Y0} f((X \ I) ∪ J) + f((Y \ J) ∪ I), computed exactly.
MultipleExchangeValue MaxMultipleExchange(const SetFunction& f,
                                          const ExchangeContext& ctx);

struct LemmaReport {
  bool passed = false;
  bool domains_nonempty = false;
  bool integer_mode = false;
  double tolerance = 0.0;
  int samples = 0;
  int violations = 0;              // g1(q) + g2(-q) < f(X) + f(Y) - tol
  int weak_duality_violations = 0; // g1(q) + g2(-q) < max_J f1 + f2 - tol
  ExtValue base_value;             // f(X) + f(Y)
  ExtValue max_exchange_value;     // max_J f1(J) + f2(J)
  ExtValue min_dual_value;         // min over samples of g1(q) + g2(-q)
  double min_slack = 0.0;          // min_dual_value - base_value
  std::vector<double> worst_q;     // indexed like ExchangePair::y0_elements
};

// Checks g1(q) + g2(-q) >= f(X) + f(Y) on sampled q. Samples are the zero
// vector, then +e_t and -e_t for each coordinate, then uniform draws from
// [-range, range] with range = max - min + 1; for integral f the draws are
// multiples of 2^-10 so all arithmetic is exact. Throws
// kHypothesisViolated unless f is M♮-concave and kInvalidArgument unless
// X, Y ∈ dom f.
LemmaReport VerifyConjugateLemma(const SetFunction& f,
                                 const ExchangeContext& ctx,
                                 const DualityConfig& config = {});

struct SubmodularityReport {
  bool passed = false;
  bool integer_mode = false;
  double tolerance = 0.0;
  int pairs = 0;
  int violations = 0;
  double max_violation = 0.0;  // max of lhs - rhs over sampled pairs
  std::vector<double> worst_p;
  std::vector<double> worst_p_prime;
};

// Checks g(p ∨ p') + g(p ∧ p') <= g(p) + g(p') on sampled price pairs whose
// coordinates come from {±M, 0, ±range, finite values of f, config.grid} or
// from uniform draws. Throws kHypothesisViolated unless f is M♮-concave.
SubmodularityReport CheckConjugateSubmodular(const SetFunction& f,
                                             const DualityConfig& config = {});

}  // namespace dca

#endif  // DCA_DUALITY_H_
