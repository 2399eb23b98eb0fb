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

#include "dca/core.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

namespace dca {
namespace {

// Finite values beyond this magnitude could overflow when a handful of them
// are summed, which would let finite arithmetic produce an infinity.
constexpr double kMaxMagnitude = 1e150;
constexpr double kExactIntegerLimit = 4503599627370496.0;  // 2^52

int ReadMaxNFromEnv() {
  const char* env = std::getenv("DCA_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxN;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) return kDefaultMaxN;
  return static_cast<int>(std::min<long>(v, kHardMaxN));
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyDomain: return "EmptyDomain";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kLiftTooSmall: return "LiftTooSmall";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kCorpusTooLarge: return "CorpusTooLarge";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kNotABaseFamily: return "NotABaseFamily";
    case ErrorCode::kNotConcaveSequence: return "NotConcaveSequence";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kInternalContradiction: return "InternalContradiction";
  }
  return "Unknown";
}

ExtValue::ExtValue(double v) : v_(v) {
  if (std::isnan(v)) {
    throw DcaError(ErrorCode::kInvalidArgument, "NaN is not an extended real");
  }
  if (v == std::numeric_limits<double>::infinity()) {
    throw DcaError(ErrorCode::kInvalidArgument, "+inf is not allowed");
  }
  if (std::isfinite(v) && std::fabs(v) > kMaxMagnitude) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "finite value magnitude exceeds 1e150");
  }
}

std::ostream& operator<<(std::ostream& os, ExtValue v) {
  if (v.is_neg_inf()) return os << "-inf";
  return os << v.value();
}

int ConfiguredMaxN() {
  static const int max_n = ReadMaxNFromEnv();
  return max_n;
}

SubsetMask SubsetMask::Of(std::span<const int> elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kHardMaxN) {
      throw DcaError(ErrorCode::kInvalidArgument,
                     "element " + std::to_string(e) + " out of range");
    }
    bits |= 1u << (e - 1);
  }
  return SubsetMask(bits);
}

SubsetMask SubsetMask::Of(std::initializer_list<int> elements) {
  return Of(std::span<const int>(elements.begin(), elements.size()));
}

std::vector<int> SubsetMask::Elements() const {
  std::vector<int> out;
  out.reserve(size());
  ForEachElement(*this, [&](int e) { out.push_back(e); });
  return out;
}

GroundSet::GroundSet(int n, int max_n) : n_(n), max_n_(max_n) {
  if (max_n < 0 || max_n > kHardMaxN) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "ground-set cap must lie in [0, 24]");
  }
  if (n < 0) {
    throw DcaError(ErrorCode::kInvalidArgument, "negative ground-set size");
  }
  if (n > max_n) {
    throw DcaError(ErrorCode::kCapExceeded,
                   "ground set of size " + std::to_string(n) +
                       " exceeds cap " + std::to_string(max_n));
  }
}

PriceVector::PriceVector(std::vector<double> values)
    : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw DcaError(ErrorCode::kInvalidArgument,
                     "price vectors must be finite");
    }
  }
}

double PriceVector::Sum(SubsetMask x) const {
  double sum = 0.0;
  ForEachElement(x, [&](int e) { sum += values_[e - 1]; });
  return sum;
}

PriceVector PriceVector::operator-() const {
  std::vector<double> out(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) out[k] = -values_[k];
  return PriceVector(std::move(out));
}

PriceVector operator+(const PriceVector& a, const PriceVector& b) {
  if (a.size() != b.size()) {
    throw DcaError(ErrorCode::kDimensionMismatch, "price vector sizes differ");
  }
  std::vector<double> out(a.values_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a.values_[k] + b.values_[k];
  }
  return PriceVector(std::move(out));
}

SetFunction::SetFunction(GroundSet ground, std::vector<ExtValue> table)
    : ground_(ground), table_(std::move(table)) {
  if (table_.size() != ground_.num_subsets()) {
    throw DcaError(ErrorCode::kDimensionMismatch,
                   "table has " + std::to_string(table_.size()) +
                       " entries, expected " +
                       std::to_string(ground_.num_subsets()));
  }
  bool any_finite = false;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (ExtValue v : table_) {
    if (!v.is_finite()) continue;
    any_finite = true;
    const double x = v.value();
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    if (integral_ && (x != std::trunc(x) || std::fabs(x) >= kExactIntegerLimit)) {
      integral_ = false;
    }
  }
  if (!any_finite) {
    throw DcaError(ErrorCode::kEmptyDomain, "set function has no finite value");
  }
  min_finite_ = lo;
  max_finite_ = hi;
}

SetFunction SetFunction::Constant(GroundSet ground, ExtValue value) {
  return SetFunction(ground, std::vector<ExtValue>(ground.num_subsets(), value));
}

bool operator==(const SetFunction& a, const SetFunction& b) {
  if (!(a.ground_ == b.ground_)) return false;
  for (std::size_t k = 0; k < a.table_.size(); ++k) {
    const double x = a.table_[k].value();
    const double y = b.table_[k].value();
    // Distinguishes +0.0 from -0.0 as a bit-exact comparison should.
    if (x != y || std::signbit(x) != std::signbit(y)) return false;
  }
  return true;
}

SetFamily::SetFamily(GroundSet ground, std::vector<SubsetMask> members)
    : ground_(ground),
      members_(std::move(members)),
      member_(ground.num_subsets(), 0) {
  for (SubsetMask x : members_) {
    if (!ground_.Contains(x)) {
      throw DcaError(ErrorCode::kInvalidArgument,
                     "family member outside the ground set");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (SubsetMask x : members_) member_[x.bits()] = 1;
}

ExtValue Eval(const SetFunction& f, SubsetMask x) {
  if (!f.ground().Contains(x)) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "subset is not contained in the ground set");
  }
  return f(x);
}

SetFamily EffectiveDomain(const SetFunction& f) {
  std::vector<SubsetMask> members;
  const auto table = f.table();
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    if (table[b].is_finite()) members.emplace_back(b);
  }
  return SetFamily(f.ground(), std::move(members));
}

SetFunction AddLinear(const SetFunction& f, const PriceVector& p) {
  if (p.size() != f.n()) {
    throw DcaError(ErrorCode::kDimensionMismatch,
                   "price vector has " + std::to_string(p.size()) +
                       " entries for a ground set of size " +
                       std::to_string(f.n()));
  }
  std::vector<ExtValue> table(f.table().begin(), f.table().end());
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    if (table[b].is_finite()) table[b] = table[b] + p.Sum(SubsetMask(b));
  }
  return SetFunction(f.ground(), std::move(table));
}

LiftedFunction Lift(const SetFunction& f, int s) {
  LiftSpec spec;
  spec.r = -1;
  spec.r_min = f.n() + 1;
  const auto table = f.table();
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    if (!table[b].is_finite()) continue;
    const int c = std::popcount(b);
    spec.r = std::max(spec.r, c);
    spec.r_min = std::min(spec.r_min, c);
  }
  if (s < 0 || s < spec.r - spec.r_min) {
    throw DcaError(ErrorCode::kLiftTooSmall,
                   "need s >= r - r' = " + std::to_string(spec.r - spec.r_min) +
                       ", got " + std::to_string(s));
  }
  const int n = f.n();
  const int lifted_n = n + s;
  if (lifted_n > f.ground().max_n()) {
    throw DcaError(ErrorCode::kCapExceeded,
                   "lifted ground set of size " + std::to_string(lifted_n) +
                       " exceeds cap " + std::to_string(f.ground().max_n()));
  }
  spec.s = s;
  spec.aux = SubsetMask(((1u << lifted_n) - 1) & ~((1u << n) - 1));

  GroundSet lifted_ground(lifted_n, f.ground().max_n());
  std::vector<ExtValue> lifted(lifted_ground.num_subsets());
  const std::uint32_t base_mask = (1u << n) - 1;
  for (std::uint32_t z = 0; z < lifted.size(); ++z) {
    if (std::popcount(z) == spec.r) lifted[z] = table[z & base_mask];
  }
  return {SetFunction(lifted_ground, std::move(lifted)), spec};
}

SetFunction Layer(const SetFunction& f, int r) {
  std::vector<ExtValue> table(f.table().size());
  bool any = false;
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    if (std::popcount(b) == r && f(SubsetMask(b)).is_finite()) {
      table[b] = f(SubsetMask(b));
      any = true;
    }
  }
  if (!any) {
    throw DcaError(ErrorCode::kEmptyDomain,
                   "no member of dom f has cardinality " + std::to_string(r));
  }
  return SetFunction(f.ground(), std::move(table));
}

SetFunction Indicator(const SetFamily& family) {
  if (family.empty()) {
    throw DcaError(ErrorCode::kEmptyDomain, "indicator of an empty family");
  }
  std::vector<ExtValue> table(family.ground().num_subsets());
  for (SubsetMask x : family.members()) table[x.bits()] = 0.0;
  return SetFunction(family.ground(), std::move(table));
}

SetFunction WithValue(const SetFunction& f, SubsetMask x, ExtValue value) {
  if (!f.ground().Contains(x)) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "subset is not contained in the ground set");
  }
  std::vector<ExtValue> table(f.table().begin(), f.table().end());
  table[x.bits()] = value;
  return SetFunction(f.ground(), std::move(table));
}

}  // namespace dca
