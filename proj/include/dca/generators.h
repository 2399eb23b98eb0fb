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

// Instance generators: exhaustive and random corpora, plus constructions
// that are expected to be M- or M♮-concave. Nothing here asserts concavity;
// the checkers decide.

#ifndef DCA_GENERATORS_H_
#define DCA_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dca/core.h"

namespace dca {

enum class CorpusMode { kExhaustive, kRandom };

struct CorpusSpec {
  int n = 3;
  std::vector<ExtValue> grid = {ExtValue::NegInf(), 0.0, 1.0, 2.0};
  CorpusMode mode = CorpusMode::kExhaustive;
  std::uint64_t count = 0;  // random mode only
  std::uint64_t seed = 0;   // random mode only
};

inline constexpr std::uint64_t kMaxExhaustiveTables = 10'000'000;

// A deterministic, randomly addressable sequence of set functions.
//
// Exhaustive mode lists every grid-valued table with a nonempty domain
// exactly once; index k is read as base-|grid| digits, the digit for
// subset X sitting at position X.bits(). Random mode derives instance k
// from (seed, k) alone. It mixes uniform grid tables with cardinality-
// concave valuations, weighted uniform-matroid valuations and single-entry
// mutations of those, all drawing values from the grid's finite part.
class Corpus {
 public:
  // Throws kCorpusTooLarge when exhaustive mode needs more than
  // kMaxExhaustiveTables tables, kInvalidArgument on an empty or repeated
  // grid, and kCapExceeded when n exceeds the ground-set cap.
  explicit Corpus(CorpusSpec spec);

  const CorpusSpec& spec() const { return spec_; }
  std::uint64_t size() const { return size_; }
  SetFunction At(std::uint64_t index) const;

  // Sequential access for single consumers.
  class Stream {
   public:
    explicit Stream(const Corpus& corpus) : corpus_(&corpus) {}
    std::optional<SetFunction> Next();

   private:
    const Corpus* corpus_;
    std::uint64_t next_ = 0;
  };
  Stream Open() const { return Stream(*this); }

 private:
  SetFunction Exhaustive(std::uint64_t index) const;
  SetFunction Random(std::uint64_t index) const;

  CorpusSpec spec_;
  GroundSet ground_;
  std::uint64_t size_ = 0;
  std::optional<std::uint64_t> skipped_;  // all-NEG_INF table index
};

// f(X) = w(X) on members of `bases`, NEG_INF elsewhere. Throws
// kNotABaseFamily unless `bases` satisfies B_EXC, kDimensionMismatch when w
// has the wrong size.
SetFunction WeightedMatroidValuation(const SetFamily& bases,
                                     const PriceVector& w);

// f(X) = phi[|X|] + w(X) for |X| < phi.size(), NEG_INF for larger X.
// phi must be nonempty with nonincreasing increments (kNotConcaveSequence)
// and at most n + 1 long.
SetFunction ConcaveCardinalityValuation(int n, const std::vector<double>& phi,
                                        const PriceVector& w);

// f with f(X) replaced by f(X) + delta (NEG_INF entries stay NEG_INF).
SetFunction Mutate(const SetFunction& f, SubsetMask x, double delta);

// Bases of the uniform matroid U(r, n): all r-subsets of {1..n}.
SetFamily UniformMatroidBases(int r, int n);

// Bases of the graphic matroid of a graph on vertices 1..num_vertices whose
// edges are the elements 1..edges.size(): the spanning forests of maximum
// size.
SetFamily GraphicMatroidBases(int num_vertices,
                              const std::vector<std::pair<int, int>>& edges);

}  // namespace dca

#endif  // DCA_GENERATORS_H_
