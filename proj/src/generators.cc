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

#include "dca/generators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "dca/axioms.h"
#include "dca/family.h"

namespace dca {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Corpus::Corpus(CorpusSpec spec) : spec_(std::move(spec)), ground_(spec_.n) {
  if (spec_.grid.empty()) {
    throw DcaError(ErrorCode::kInvalidArgument, "value grid is empty");
  }
  for (std::size_t a = 0; a < spec_.grid.size(); ++a) {
    for (std::size_t b = a + 1; b < spec_.grid.size(); ++b) {
      if (spec_.grid[a] == spec_.grid[b]) {
        throw DcaError(ErrorCode::kInvalidArgument,
                       "value grid has repeated entries");
      }
    }
  }
  const bool has_finite =
      std::any_of(spec_.grid.begin(), spec_.grid.end(),
                  [](ExtValue v) { return v.is_finite(); });
  if (!has_finite) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "value grid needs at least one finite value");
  }
  if (spec_.mode == CorpusMode::kRandom) {
    size_ = spec_.count;
    return;
  }
  const std::uint64_t base = spec_.grid.size();
  std::uint64_t total = 1;
  for (std::uint32_t k = 0; k < ground_.num_subsets(); ++k) {
    if (total > kMaxExhaustiveTables / base) {
      throw DcaError(ErrorCode::kCorpusTooLarge,
                     "exhaustive corpus exceeds 10^7 tables");
    }
    total *= base;
  }
  size_ = total;
  const auto neg = std::find(spec_.grid.begin(), spec_.grid.end(),
                             ExtValue::NegInf());
  if (neg != spec_.grid.end()) {
    // The table with every digit equal to NEG_INF's position.
    const std::uint64_t digit = neg - spec_.grid.begin();
    std::uint64_t index = 0;
    for (std::uint32_t k = ground_.num_subsets(); k-- > 0;) {
      index = index * base + digit;
    }
    skipped_ = index;
    --size_;
  }
}

SetFunction Corpus::At(std::uint64_t index) const {
  if (index >= size_) {
    throw DcaError(ErrorCode::kInvalidArgument, "corpus index out of range");
  }
  return spec_.mode == CorpusMode::kExhaustive ? Exhaustive(index)
                                               : Random(index);
}

std::optional<SetFunction> Corpus::Stream::Next() {
  if (next_ >= corpus_->size()) return std::nullopt;
  return corpus_->At(next_++);
}

SetFunction Corpus::Exhaustive(std::uint64_t index) const {
  if (skipped_ && index >= *skipped_) ++index;
  const std::uint64_t base = spec_.grid.size();
  std::vector<ExtValue> table(ground_.num_subsets());
  for (ExtValue& v : table) {
    v = spec_.grid[index % base];
    index /= base;
  }
  return SetFunction(ground_, std::move(table));
}

SetFunction Corpus::Random(std::uint64_t index) const {
  std::mt19937_64 rng(SplitMix64(spec_.seed ^ SplitMix64(index)));
  std::vector<double> finite;
  for (ExtValue v : spec_.grid) {
    if (v.is_finite()) finite.push_back(v.value());
  }
  std::sort(finite.begin(), finite.end());
  const int n = spec_.n;
  auto pick = [&] { return finite[Below(rng, finite.size())]; };
  auto weights = [&] {
    std::vector<double> w(n);
    for (double& v : w) v = pick();
    return PriceVector(std::move(w));
  };
  auto cardinality = [&] {
    const int len = 1 + static_cast<int>(Below(rng, n + 1));
    std::vector<double> inc(len > 0 ? len - 1 : 0);
    for (double& d : inc) d = pick();
    std::sort(inc.rbegin(), inc.rend());
    std::vector<double> phi(len);
    phi[0] = pick();
    for (int k = 1; k < len; ++k) phi[k] = phi[k - 1] + inc[k - 1];
    SetFunction f = ConcaveCardinalityValuation(n, phi, weights());
    if (Below(rng, 2) == 0) {
      // Drop the smallest layers; the domain stays a cardinality interval.
      const int low = static_cast<int>(Below(rng, len));
      std::vector<ExtValue> table(f.table().begin(), f.table().end());
      for (std::uint32_t b = 0; b < table.size(); ++b) {
        if (std::popcount(b) < low) table[b] = ExtValue::NegInf();
      }
      f = SetFunction(f.ground(), std::move(table));
    }
    return f;
  };
  auto matroid = [&] {
    const int r = static_cast<int>(Below(rng, n + 1));
    return WeightedMatroidValuation(UniformMatroidBases(r, n), weights());
  };

  const auto kind = Below(rng, 6);
  if (kind <= 2) {
    std::vector<ExtValue> table(ground_.num_subsets());
    for (ExtValue& v : table) v = spec_.grid[Below(rng, spec_.grid.size())];
    if (std::none_of(table.begin(), table.end(),
                     [](ExtValue v) { return v.is_finite(); })) {
      table[Below(rng, table.size())] = pick();
    }
    return SetFunction(ground_, std::move(table));
  }
  if (kind == 3) return cardinality();
  if (kind == 4) return matroid();

  SetFunction base = Below(rng, 2) == 0 ? cardinality() : matroid();
  const SubsetMask x(static_cast<std::uint32_t>(Below(rng, ground_.num_subsets())));
  if (base(x).is_finite() && Below(rng, 2) == 0) {
    return Mutate(base, x, Below(rng, 2) == 0 ? 1.0 : -1.0);
  }
  if (base(x).is_finite()) {
    // Punch a hole in the domain unless it is the only member.
    std::size_t members = 0;
    for (ExtValue v : base.table()) members += v.is_finite() ? 1 : 0;
    if (members > 1) return WithValue(base, x, ExtValue::NegInf());
    return base;
  }
  return WithValue(base, x, pick());
}

SetFunction WeightedMatroidValuation(const SetFamily& bases,
                                     const PriceVector& w) {
  if (w.size() != bases.n()) {
    throw DcaError(ErrorCode::kDimensionMismatch,
                   "weight vector does not match the ground set");
  }
  if (bases.empty() || !CheckFamily(bases, FamilyAxiomId::kBExc).passed) {
    throw DcaError(ErrorCode::kNotABaseFamily,
                   "family does not satisfy the base exchange axiom");
  }
  std::vector<ExtValue> table(bases.ground().num_subsets());
  for (SubsetMask x : bases.members()) table[x.bits()] = w.Sum(x);
  return SetFunction(bases.ground(), std::move(table));
}

SetFunction ConcaveCardinalityValuation(int n, const std::vector<double>& phi,
                                        const PriceVector& w) {
  GroundSet ground(n);
  if (phi.empty() || static_cast<int>(phi.size()) > n + 1) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "phi must have between 1 and n + 1 entries");
  }
  if (w.size() != n) {
    throw DcaError(ErrorCode::kDimensionMismatch,
                   "weight vector does not match the ground set");
  }
  for (std::size_t k = 2; k < phi.size(); ++k) {
    if (phi[k] - phi[k - 1] > phi[k - 1] - phi[k - 2] + kFloatTolerance) {
      throw DcaError(ErrorCode::kNotConcaveSequence,
                     "phi increments must be nonincreasing (at k = " +
                         std::to_string(k) + ")");
    }
  }
  std::vector<ExtValue> table(ground.num_subsets());
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    const auto c = static_cast<std::size_t>(std::popcount(b));
    if (c < phi.size()) table[b] = ExtValue(phi[c]) + w.Sum(SubsetMask(b));
  }
  return SetFunction(ground, std::move(table));
}

SetFunction Mutate(const SetFunction& f, SubsetMask x, double delta) {
  return WithValue(f, x, Eval(f, x) + delta);
}

SetFamily UniformMatroidBases(int r, int n) {
  GroundSet ground(n);
  if (r < 0 || r > n) {
    throw DcaError(ErrorCode::kInvalidArgument, "rank must lie in [0, n]");
  }
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b < ground.num_subsets(); ++b) {
    if (std::popcount(b) == r) members.emplace_back(b);
  }
  return SetFamily(ground, std::move(members));
}

SetFamily GraphicMatroidBases(int num_vertices,
                              const std::vector<std::pair<int, int>>& edges) {
  GroundSet ground(static_cast<int>(edges.size()));
  for (const auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > num_vertices || v > num_vertices) {
      throw DcaError(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
  }
  UnionFind all(num_vertices + 1);
  int rank = 0;
  for (const auto& [u, v] : edges) rank += all.Union(u, v) ? 1 : 0;

  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b < ground.num_subsets(); ++b) {
    if (std::popcount(b) != rank) continue;
    UnionFind uf(num_vertices + 1);
    bool forest = true;
    ForEachElement(SubsetMask(b), [&](int e) {
      forest = forest && uf.Union(edges[e - 1].first, edges[e - 1].second);
    });
    if (forest) members.emplace_back(b);
  }
  return SetFamily(ground, std::move(members));
}

}  // namespace dca
