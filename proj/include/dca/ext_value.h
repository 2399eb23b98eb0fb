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

#ifndef DCA_EXT_VALUE_H_
#define DCA_EXT_VALUE_H_

#include <compare>
#include <limits>
#include <ostream>

namespace dca {

// A real number or the distinguished value NEG_INF.
//
// Arithmetic follows the extended-real convention used by every exchange
// axiom: NEG_INF + a = a + NEG_INF = NEG_INF for all a (including NEG_INF),
// and NEG_INF <= NEG_INF. NaN and +infinity are rejected at construction,
// so the ordering is total.
class ExtValue {
 public:
  // Default-constructed values are NEG_INF, which makes fresh tables empty.
  constexpr ExtValue() : v_(-std::numeric_limits<double>::infinity()) {}

  // Implicit so that tables can be written as literals. Throws DcaError
  // (kInvalidArgument) on NaN or +infinity; -infinity maps to NEG_INF.
  ExtValue(double v);  // NOLINT(google-explicit-constructor)

  static constexpr ExtValue NegInf() { return ExtValue(); }

  constexpr bool is_finite() const {
    return v_ != -std::numeric_limits<double>::infinity();
  }
  constexpr bool is_neg_inf() const { return !is_finite(); }

  // The finite value, or -infinity for NEG_INF.
  constexpr double value() const { return v_; }

  friend ExtValue operator+(ExtValue a, ExtValue b) {
    return Raw(a.v_ + b.v_);
  }
  friend ExtValue operator+(ExtValue a, double b) { return Raw(a.v_ + b); }
  friend ExtValue operator-(ExtValue a, double b) { return Raw(a.v_ - b); }

  friend constexpr bool operator==(ExtValue a, ExtValue b) {
    return a.v_ == b.v_;
  }
  friend constexpr std::partial_ordering operator<=>(ExtValue a, ExtValue b) {
    return a.v_ <=> b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, ExtValue v);

 private:
  static constexpr ExtValue Raw(double v) {
    ExtValue out;
    out.v_ = v;
    return out;
  }

  double v_;
};

inline ExtValue Max(ExtValue a, ExtValue b) { return a < b ? b : a; }

// True when `lhs <= rhs + tolerance` fails. A NEG_INF left side never
// violates; a finite left side always violates a NEG_INF right side.
inline bool Violates(ExtValue lhs, ExtValue rhs, double tolerance) {
  if (!lhs.is_finite()) return false;
  if (!rhs.is_finite()) return true;
  return lhs.value() > rhs.value() + tolerance;
}

}  // namespace dca

#endif  // DCA_EXT_VALUE_H_
