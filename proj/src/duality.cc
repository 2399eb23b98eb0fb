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

#include "dca/duality.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "dca/axioms.h"
#include "exchange.h"
#include "parallel.h"

namespace dca {
namespace {

constexpr double kDyadicScale = 1024.0;

double Uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform over [-range, range]; in exact mode restricted to multiples of
// 2^-10 so sums of a few such values stay exact.
double DrawCoordinate(std::mt19937_64& rng, double range, bool exact) {
  if (exact) {
    const auto steps = static_cast<std::uint64_t>(range * kDyadicScale);
    const auto k = static_cast<std::int64_t>(rng() % (2 * steps + 1)) -
                   static_cast<std::int64_t>(steps);
    return static_cast<double>(k) / kDyadicScale;
  }
  return (2.0 * Uniform01(rng) - 1.0) * range;
}

bool IsDyadic(double v) {
  const double scaled = v * kDyadicScale;
  return std::isfinite(scaled) && scaled == std::trunc(scaled) &&
         std::fabs(scaled) < 0x1.0p52;
}

double ValueRange(const SetFunction& f) {
  return f.max_finite() - f.min_finite() + 1.0;
}

void RequireMnatConcave(const SetFunction& f, int threads) {
  CheckOptions options;
  options.threads = threads;
  if (!IsMnatConcave(f, options).passed) {
    throw DcaError(ErrorCode::kHypothesisViolated,
                   "the function is not M-natural-concave");
  }
}

// Maps a mask over Y0-local positions back to f's ground set.
SubsetMask Expand(std::uint32_t local, const std::vector<int>& elements) {
  SubsetMask out;
  for (std::uint32_t b = local; b != 0; b &= b - 1) {
    out = out.Plus(elements[std::countr_zero(b)]);
  }
  return out;
}

PriceVector PointwiseMax(const PriceVector& a, const PriceVector& b) {
  std::vector<double> out(a.size());
  for (int k = 0; k < a.size(); ++k) out[k] = std::max(a.values()[k], b.values()[k]);
  return PriceVector(std::move(out));
}

PriceVector PointwiseMin(const PriceVector& a, const PriceVector& b) {
  std::vector<double> out(a.size());
  for (int k = 0; k < a.size(); ++k) out[k] = std::min(a.values()[k], b.values()[k]);
  return PriceVector(std::move(out));
}

}  // namespace

ExchangeContext::ExchangeContext(const GroundSet& ground, SubsetMask x,
                                 SubsetMask y, SubsetMask removed)
    : x_(x), y_(y), removed_(removed) {
  if (!ground.Contains(x) || !ground.Contains(y)) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "X and Y must lie in the ground set");
  }
  if (!removed.IsSubsetOf(x - y)) {
    throw DcaError(ErrorCode::kInvalidArgument, "I must be a subset of X \\ Y");
  }
}

double DefaultBigM(const SetFunction& f) {
  return 2.0 * (f.max_finite() - f.min_finite()) + 1.0;
}

ConjugateValue Conjugate(const SetFunction& f, const PriceVector& p) {
  if (p.size() != f.n()) {
    throw DcaError(ErrorCode::kDimensionMismatch,
                   "price vector does not match the ground set");
  }
  ConjugateValue out;
  const auto table = f.table();
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    if (!table[b].is_finite()) continue;
    const ExtValue v = table[b] - p.Sum(SubsetMask(b));
    if (v > out.value) {
      out.value = v;
      out.maximizer = SubsetMask(b);
    }
  }
  return out;
}

ExchangePair MakeExchangePair(const SetFunction& f,
                              const ExchangeContext& ctx) {
  std::vector<int> elements = ctx.y_only().Elements();
  const GroundSet local(static_cast<int>(elements.size()),
                        f.ground().max_n());
  std::vector<ExtValue> t1(local.num_subsets());
  std::vector<ExtValue> t2(local.num_subsets());
  bool any1 = false;
  bool any2 = false;
  const SubsetMask x_rest = ctx.x() - ctx.removed();
  for (std::uint32_t b = 0; b < t1.size(); ++b) {
    const SubsetMask j = Expand(b, elements);
    t1[b] = f(x_rest | j);
    t2[b] = f((ctx.y() - j) | ctx.removed());
    any1 = any1 || t1[b].is_finite();
    any2 = any2 || t2[b].is_finite();
  }
  if (!any1 || !any2) {
    throw DcaError(ErrorCode::kEmptyDomain,
                   !any1 ? "dom f1 is empty" : "dom f2 is empty");
  }
  return {SetFunction(local, std::move(t1)), SetFunction(local, std::move(t2)),
          std::move(elements)};
}

MultipleExchangeValue MaxMultipleExchange(const SetFunction& f,
                                          const ExchangeContext& ctx) {
  const auto best = internal::BestMultipleExchange(
      f, ctx.x(), ctx.y(), ctx.removed(), internal::MultiMode::kAny,
      ExtValue::NegInf(), 0.0, /*stop_early=*/false);
  return {best.value, best.best_j};
}

LemmaReport VerifyConjugateLemma(const SetFunction& f,
                                 const ExchangeContext& ctx,
                                 const DualityConfig& config) {
  RequireMnatConcave(f, config.threads);
  if (!f(ctx.x()).is_finite() || !f(ctx.y()).is_finite()) {
    throw DcaError(ErrorCode::kInvalidArgument, "X and Y must lie in dom f");
  }
  LemmaReport report;
  report.integer_mode = f.integral();
  report.tolerance = report.integer_mode ? 0.0 : kFloatTolerance;
  report.base_value = f(ctx.x()) + f(ctx.y());
  report.max_exchange_value = MaxMultipleExchange(f, ctx).max_value;

  std::optional<ExchangePair> pair;
  try {
    pair = MakeExchangePair(f, ctx);
  } catch (const DcaError& e) {
    if (e.code() != ErrorCode::kEmptyDomain) throw;
  }
  if (!pair) {
    report.min_slack = -std::numeric_limits<double>::infinity();
    return report;
  }
  report.domains_nonempty = true;

  const int dim = pair->f1.n();
  const double range = ValueRange(f);
  std::vector<PriceVector> qs;
  qs.reserve(std::max(config.q_samples, 0));
  std::mt19937_64 rng(config.seed);
  for (int k = 0; k < config.q_samples; ++k) {
    std::vector<double> q(dim, 0.0);
    if (k >= 1 && k <= 2 * dim) {
      q[(k - 1) / 2] = (k % 2 == 1) ? 1.0 : -1.0;
    } else if (k > 2 * dim) {
      for (double& v : q) v = DrawCoordinate(rng, range, report.integer_mode);
    }
    qs.emplace_back(std::move(q));
  }

  std::vector<ExtValue> duals(qs.size());
  internal::ParallelFor(qs.size(), config.threads, [&](std::size_t k) {
    duals[k] = Conjugate(pair->f1, qs[k]).value +
               Conjugate(pair->f2, -qs[k]).value;
  });

  report.samples = static_cast<int>(qs.size());
  report.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < duals.size(); ++k) {
    if (Violates(report.base_value, duals[k], report.tolerance)) {
      ++report.violations;
    }
    if (Violates(report.max_exchange_value, duals[k], report.tolerance)) {
      ++report.weak_duality_violations;
    }
    const double slack = duals[k].value() - report.base_value.value();
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.min_dual_value = duals[k];
      report.worst_q.assign(qs[k].values().begin(), qs[k].values().end());
    }
  }
  if (qs.empty()) report.min_slack = 0.0;
  report.passed = report.violations == 0 && report.weak_duality_violations == 0;
  return report;
}

SubmodularityReport CheckConjugateSubmodular(const SetFunction& f,
                                             const DualityConfig& config) {
  RequireMnatConcave(f, config.threads);
  const double big_m = config.big_m.value_or(DefaultBigM(f));
  const double range = ValueRange(f);

  std::vector<double> grid = {-big_m, big_m, 0.0, -range, range};
  std::vector<double> finite_values;
  for (ExtValue v : f.table()) {
    if (v.is_finite()) finite_values.push_back(v.value());
  }
  std::sort(finite_values.begin(), finite_values.end());
  finite_values.erase(std::unique(finite_values.begin(), finite_values.end()),
                      finite_values.end());
  if (finite_values.size() > 16) finite_values.resize(16);
  grid.insert(grid.end(), finite_values.begin(), finite_values.end());
  grid.insert(grid.end(), config.grid.begin(), config.grid.end());

  SubmodularityReport report;
  report.integer_mode =
      f.integral() && std::all_of(grid.begin(), grid.end(), IsDyadic);
  report.tolerance = report.integer_mode ? 0.0 : kFloatTolerance;

  const int n = f.n();
  std::mt19937_64 rng(config.seed);
  auto draw = [&] {
    std::vector<double> p(n);
    for (double& v : p) {
      v = (rng() & 1) ? grid[rng() % grid.size()]
                      : DrawCoordinate(rng, range, report.integer_mode);
    }
    return PriceVector(std::move(p));
  };
  std::vector<std::pair<PriceVector, PriceVector>> pairs;
  pairs.reserve(std::max(config.pair_samples, 0));
  for (int k = 0; k < config.pair_samples; ++k) {
    PriceVector p = draw();
    PriceVector q = draw();
    pairs.emplace_back(std::move(p), std::move(q));
  }

  std::vector<double> excess(pairs.size());
  internal::ParallelFor(pairs.size(), config.threads, [&](std::size_t k) {
    const auto& [p, q] = pairs[k];
    const double lhs = Conjugate(f, PointwiseMax(p, q)).value.value() +
                       Conjugate(f, PointwiseMin(p, q)).value.value();
    const double rhs =
        Conjugate(f, p).value.value() + Conjugate(f, q).value.value();
    excess[k] = lhs - rhs;
  });

  report.pairs = static_cast<int>(pairs.size());
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < excess.size(); ++k) {
    if (excess[k] > report.tolerance) ++report.violations;
    if (excess[k] > report.max_violation) {
      report.max_violation = excess[k];
      report.worst_p.assign(pairs[k].first.values().begin(),
                            pairs[k].first.values().end());
      report.worst_p_prime.assign(pairs[k].second.values().begin(),
                                  pairs[k].second.values().end());
    }
  }
  if (pairs.empty()) report.max_violation = 0.0;
  report.passed = report.violations == 0;
  return report;
}

}  // namespace dca
