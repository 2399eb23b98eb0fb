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

// Ground sets, subsets, extended-real set functions and set families.
//
// Elements are numbered 1..n at every public boundary; internally element k
// occupies bit k-1 of a SubsetMask. Set functions are dense tables with one
// entry per subset, so every exhaustive sweep walks contiguous memory.

#ifndef DCA_CORE_H_
#define DCA_CORE_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "dca/errors.h"
#include "dca/ext_value.h"

namespace dca {

inline constexpr int kDefaultMaxN = 20;
inline constexpr int kHardMaxN = 24;

// Tolerance for floating comparisons; integral functions compare exactly.
inline constexpr double kFloatTolerance = 1e-9;

// The ground-set cap: DCA_MAX_N when set (clamped to kHardMaxN), otherwise
// kDefaultMaxN. Read once per process.
int ConfiguredMaxN();

class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  // Elements are 1-based. Throws kInvalidArgument on out-of-range elements.
  static SubsetMask Of(std::initializer_list<int> elements);
  static SubsetMask Of(std::span<const int> elements);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool Contains(int element) const {
    return (bits_ >> (element - 1)) & 1u;
  }
  constexpr SubsetMask Plus(int element) const {
    return SubsetMask(bits_ | (1u << (element - 1)));
  }
  constexpr SubsetMask Minus(int element) const {
    return SubsetMask(bits_ & ~(1u << (element - 1)));
  }
  constexpr bool IsSubsetOf(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  // 1-based elements in increasing order.
  std::vector<int> Elements() const;

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Calls fn(element) for each element of `mask` in increasing order.
template <typename Fn>
void ForEachElement(SubsetMask mask, Fn&& fn) {
  for (std::uint32_t b = mask.bits(); b != 0; b &= b - 1) {
    fn(std::countr_zero(b) + 1);
  }
}

// Calls fn(sub) for every sub ⊆ mask in increasing bit order (∅ first).
template <typename Fn>
void ForEachSubmask(SubsetMask mask, Fn&& fn) {
  const std::uint32_t m = mask.bits();
  std::uint32_t sub = 0;
  while (true) {
    fn(SubsetMask(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

class GroundSet {
 public:
  // Throws kCapExceeded when n > max_n and kInvalidArgument when n < 0 or
  // max_n is outside [0, kHardMaxN].
  explicit GroundSet(int n, int max_n = ConfiguredMaxN());

  int n() const { return n_; }
  int max_n() const { return max_n_; }
  std::uint32_t num_subsets() const { return 1u << n_; }
  SubsetMask full() const { return SubsetMask(num_subsets() - 1); }
  bool Contains(SubsetMask x) const { return x.bits() < num_subsets(); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.n_ == b.n_;
  }

 private:
  int n_;
  int max_n_;
};

class SetFamily;

// A real vector indexed by the elements of a ground set; all entries finite.
class PriceVector {
 public:
  PriceVector() = default;
  // Throws kInvalidArgument on non-finite entries.
  explicit PriceVector(std::vector<double> values);

  static PriceVector Zero(int n) { return PriceVector(std::vector(n, 0.0)); }

  int size() const { return static_cast<int>(values_.size()); }
  // 1-based element access.
  double at(int element) const { return values_.at(element - 1); }
  std::span<const double> values() const { return values_; }

  // p(X) = sum of entries over the elements of X.
  double Sum(SubsetMask x) const;

  PriceVector operator-() const;
  friend PriceVector operator+(const PriceVector& a, const PriceVector& b);
  friend bool operator==(const PriceVector&, const PriceVector&) = default;

 private:
  std::vector<double> values_;
};

// f: 2^N -> R ∪ {NEG_INF} with a nonempty effective domain. Immutable.
class SetFunction {
 public:
  // `table` must have exactly 2^n entries indexed by SubsetMask bits.
  // Throws kDimensionMismatch on a wrong size and kEmptyDomain when every
  // entry is NEG_INF.
  SetFunction(GroundSet ground, std::vector<ExtValue> table);

  // Every subset maps to `value`.
  static SetFunction Constant(GroundSet ground, ExtValue value);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n(); }

  // Unchecked lookup; use Eval() for untrusted masks.
  ExtValue operator()(SubsetMask x) const { return table_[x.bits()]; }
  std::span<const ExtValue> table() const { return table_; }

  // True when every finite value is an integer of magnitude below 2^52;
  // such functions are compared exactly.
  bool integral() const { return integral_; }
  double tolerance() const { return integral_ ? 0.0 : kFloatTolerance; }

  double min_finite() const { return min_finite_; }
  double max_finite() const { return max_finite_; }

  // Bit-exact equality of ground set and table.
  friend bool operator==(const SetFunction& a, const SetFunction& b);

 private:
  GroundSet ground_;
  std::vector<ExtValue> table_;
  bool integral_ = true;
  double min_finite_ = 0.0;
  double max_finite_ = 0.0;
};

// A collection of distinct subsets of a ground set, kept in increasing bit
// order with an O(1) membership table.
class SetFamily {
 public:
  // Duplicates are merged. Throws kInvalidArgument on masks outside ground.
  SetFamily(GroundSet ground, std::vector<SubsetMask> members);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n(); }
  std::span<const SubsetMask> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(SubsetMask x) const {
    return ground_.Contains(x) && member_[x.bits()] != 0;
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  GroundSet ground_;
  std::vector<SubsetMask> members_;
  std::vector<std::uint8_t> member_;
};

struct LiftSpec {
  int r = 0;      // max cardinality over dom f
  int r_min = 0;  // min cardinality over dom f
  int s = 0;      // number of auxiliary elements
  SubsetMask aux; // {n+1, ..., n+s}
};

struct LiftedFunction {
  SetFunction function;
  LiftSpec spec;
};

// Checked lookup. Throws kInvalidArgument when x lies outside f's ground set.
ExtValue Eval(const SetFunction& f, SubsetMask x);

// dom f = {X | f(X) > NEG_INF}.
SetFamily EffectiveDomain(const SetFunction& f);

// f_p(X) = f(X) + p(X). NEG_INF entries stay NEG_INF.
// Throws kDimensionMismatch when p.size() != f.n().
SetFunction AddLinear(const SetFunction& f, const PriceVector& p);

// The equi-cardinal lift onto N ∪ {n+1..n+s}:
//   f~(Z) = f(Z ∩ N) if |Z| = r, NEG_INF otherwise.
// Throws kLiftTooSmall when s < r - r_min and kCapExceeded when n + s
// exceeds f's ground-set cap.
LiftedFunction Lift(const SetFunction& f, int s);

// Keeps only the entries of cardinality r. Throws kEmptyDomain when no
// X ∈ dom f has |X| = r.
SetFunction Layer(const SetFunction& f, int r);

// 0 on members, NEG_INF elsewhere. Throws kEmptyDomain for an empty family.
SetFunction Indicator(const SetFamily& family);

// Copy of f with one entry replaced.
SetFunction WithValue(const SetFunction& f, SubsetMask x, ExtValue value);

}  // namespace dca

#endif  // DCA_CORE_H_
