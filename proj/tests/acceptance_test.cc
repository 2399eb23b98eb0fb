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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "dca/axioms.h"
#include "dca/duality.h"
#include "dca/family.h"
#include "dca/generators.h"
#include "dca/json_io.h"
#include "dca/suite.h"
#include "test_util.h"

namespace dca {
namespace {

// Wall-clock limits, in seconds.
constexpr double kFixtureLimit = 1.0;
constexpr double kExhaustiveLimit = 60.0;
constexpr double kRandomLimit = 120.0;

constexpr int kRandomSuiteCount = 500;
constexpr std::uint64_t kRandomSuiteSeed = 7;
constexpr int kLiftCount = 200;
constexpr std::uint64_t kLiftSeed = 2026;
constexpr int kDualityInstances = 20;
constexpr int kQSamples = 200;
constexpr int kPairSamples = 500;
constexpr std::uint64_t kDualitySeed = 42;

int MaxWorkers() {
  return std::max(4, static_cast<int>(std::thread::hardware_concurrency()));
}

// Witness bookkeeping for criterion 8.
struct WitnessTally {
  std::uint64_t verified = 0;
  std::uint64_t failures = 0;

  void Function(const SetFunction& f, const CheckReport& r) {
    if (!r.witness) return;
    ++verified;
    if (!VerifyWitness(f, *r.witness)) ++failures;
  }
  void Family(const SetFamily& fam, const CheckReport& r) {
    if (!r.witness) return;
    ++verified;
    if (!VerifyFamilyWitness(fam, *r.witness)) ++failures;
  }
};

struct Outcome {
  bool passed = true;
  std::string detail;
  double seconds = 0.0;
};

Outcome Timed(const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  o.seconds = std::chrono::duration<double>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return o;
}

void Require(Outcome& o, bool condition, const std::string& what) {
  if (condition) return;
  o.passed = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

Outcome Criterion1(WitnessTally& tally) {
  Outcome o;
  const SetFunction f = testing::LoadFunction("two_triples.json");
  for (AxiomId id : {AxiomId::kL1, AxiomId::kL2, AxiomId::kL3,
                     AxiomId::kMExcLoc}) {
    Require(o, CheckAxiom(f, id).passed, std::string(Name(id)) + " failed");
  }
  for (AxiomId id : {AxiomId::kMnatExc, AxiomId::kMExc}) {
    const CheckReport r = CheckAxiom(f, id);
    Require(o, !r.passed, std::string(Name(id)) + " passed");
    tally.Function(f, r);
  }
  const CheckReport mnat = CheckAxiom(f, AxiomId::kMnatExc);
  Require(o,
          mnat.witness && mnat.witness->x == SubsetMask::Of({1, 2, 3}) &&
              mnat.witness->y == SubsetMask::Of({4, 5, 6}) &&
              mnat.witness->i == 1,
          "unexpected MNAT_EXC witness");
  const SetFamily dom = EffectiveDomain(f);
  const CheckReport bnat = CheckFamily(dom, FamilyAxiomId::kBnatExc);
  Require(o, !bnat.passed, "BNAT_EXC passed");
  tally.Family(dom, bnat);
  Require(o, tally.failures == 0, "witness did not re-validate");
  return o;
}

Outcome Criterion2(WitnessTally& tally) {
  Outcome o;
  const SetFamily fam = testing::LoadFamily("crossing_family.json");
  const CheckReport down = CheckFamily(fam, FamilyAxiomId::kConnDown);
  const CheckReport swap = CheckFamily(fam, FamilyAxiomId::kConnSwap);
  const CheckReport cross = CheckFamily(fam, FamilyAxiomId::kConnCross);
  Require(o, down.passed, "CONN_DOWN failed");
  Require(o, swap.passed, "CONN_SWAP failed");
  Require(o, !cross.passed, "CONN_CROSS passed");
  tally.Family(fam, cross);
  return o;
}

Outcome Criterion3() {
  Outcome o;
  const SetFunction f = testing::LoadFunction("small_valuation.json");
  Require(o, IsMnatConcave(f).passed, "MNAT_EXC failed");
  const SetFunction g = Lift(f, 2).function;
  auto expect = [&](std::initializer_list<int> s, ExtValue v) {
    const ExtValue got = g(SubsetMask::Of(s));
    Require(o, got == v && got.is_finite() == v.is_finite(),
            "lifted value mismatch");
  };
  expect({4, 5}, 0.0);
  for (int k : {4, 5}) {
    expect({1, k}, 0.0);
    expect({2, k}, 1.0);
    expect({3, k}, 1.0);
  }
  expect({1, 2}, 1.0);
  expect({1, 3}, 1.0);
  expect({2, 3}, 1.0);
  expect({1, 2, 3}, ExtValue::NegInf());
  for (std::uint32_t b = 0; b < 32; ++b) {
    if (std::popcount(b) != 2) {
      Require(o, g(SubsetMask(b)).is_neg_inf(), "finite value off layer 2");
    }
  }
  Require(o, IsMConcave(g).passed, "lift fails M_EXC");
  return o;
}

void CheckSuite(Outcome& o, const SuiteSummary& s, WitnessTally& tally,
                bool need_both_sides) {
  for (const SuiteResult& r : s.results) {
    Require(o, r.passed(), std::string(Name(r.id)) + " has discrepancies");
    if (need_both_sides) {
      Require(o, r.positives > 0 && r.negatives > 0,
              std::string(Name(r.id)) + " lacks a positive or negative");
    }
  }
  tally.verified += s.witnesses_verified;
  tally.failures += s.witness_failures;
  Require(o, s.witness_failures == 0, "suite witness did not re-validate");
}

Json LiftReport(WitnessTally& tally, int threads) {
  const Corpus corpus = testing::RandomCorpus(4, kLiftCount, kLiftSeed);
  CheckOptions options;
  options.threads = threads;
  Json rows = Json::array();
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const SetFunction f = corpus.At(k);
    int r = 0;
    int r_min = f.n();
    const SetFamily dom = EffectiveDomain(f);
    for (SubsetMask x : dom.members()) {
      r = std::max(r, x.size());
      r_min = std::min(r_min, x.size());
    }
    const SetFunction g = Lift(f, r - r_min).function;
    const CheckReport a = CheckAxiom(f, AxiomId::kMnatExc, options);
    const CheckReport b = CheckAxiom(g, AxiomId::kMExc, options);
    tally.Function(f, a);
    tally.Function(g, b);
    rows.push_back({{"digest", Digest(f)},
                    {"mnat_exc", ToJson(a)},
                    {"lifted_m_exc", ToJson(b)}});
  }
  return rows;
}

Json DualityReport(int threads, int* instances, bool* all_passed) {
  const Corpus corpus = testing::RandomCorpus(5, 1000, kDualitySeed);
  DualityConfig config;
  config.q_samples = kQSamples;
  config.pair_samples = kPairSamples;
  config.seed = kDualitySeed;
  config.threads = threads;
  Json rows = Json::array();
  *instances = 0;
  *all_passed = true;
  for (std::uint64_t k = 0; k < corpus.size() && *instances < kDualityInstances;
       ++k) {
    const SetFunction f = corpus.At(k);
    if (!IsMnatConcave(f).passed) continue;
    const auto pair = testing::CrossingPair(EffectiveDomain(f));
    if (!pair) continue;
    const ExchangeContext ctx(f.ground(), pair->first, pair->second,
                              pair->first - pair->second);
    const LemmaReport lemma = VerifyConjugateLemma(f, ctx, config);
    const SubmodularityReport sub = CheckConjugateSubmodular(f, config);
    const bool ok = lemma.passed && lemma.samples == kQSamples &&
                    lemma.min_slack >= -lemma.tolerance && sub.passed &&
                    sub.pairs == kPairSamples;
    *all_passed = *all_passed && ok;
    ++*instances;
    rows.push_back({{"digest", Digest(f)},
                    {"X", pair->first.Elements()},
                    {"Y", pair->second.Elements()},
                    {"lemma", ToJson(lemma)},
                    {"submodularity", ToJson(sub)}});
  }
  return rows;
}

int Main() {
  WitnessTally tally;
  int failures = 0;
  auto report = [&](int id, const char* what, const Outcome& o,
                    double limit) {
    const bool in_time = limit <= 0.0 || o.seconds < limit;
    const bool ok = o.passed && in_time;
    failures += ok ? 0 : 1;
    std::printf("CRITERION %d %s: %s (%.3f s%s)%s%s\n", id,
                ok ? "PASS" : "FAIL", what, o.seconds,
                in_time ? "" : ", over time limit",
                o.detail.empty() ? "" : " ", o.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "two-triples fixture verdicts and witnesses",
         Timed([&] { return Criterion1(tally); }), kFixtureLimit);
  report(2, "footnote family connectedness verdicts",
         Timed([&] { return Criterion2(tally); }), kFixtureLimit);
  report(3, "small valuation and its lift", Timed(Criterion3), kFixtureLimit);

  std::string exhaustive_json;
  const Outcome c4 = Timed([&] {
    Outcome o;
    const Corpus corpus{CorpusSpec{}};
    const SuiteSummary s = RunSuite(corpus);
    Require(o, s.instances == 65535, "wrong instance count");
    CheckSuite(o, s, tally, /*need_both_sides=*/true);
    exhaustive_json = ToJson(s).dump();
    o.detail = std::to_string(s.instances) + " instances";
    return o;
  });
  report(4, "exhaustive n=3 theorem suite", c4, kExhaustiveLimit);

  std::string random_json;
  const Outcome c5 = Timed([&] {
    Outcome o;
    const Corpus corpus =
        testing::RandomCorpus(5, kRandomSuiteCount, kRandomSuiteSeed);
    const SuiteSummary s = RunSuite(corpus);
    CheckSuite(o, s, tally, /*need_both_sides=*/false);
    random_json = ToJson(s).dump();
    return o;
  });
  report(5, "random n=5 theorem suite", c5, kRandomLimit);

  std::string lift_json;
  const Outcome c6 = Timed([&] {
    Outcome o;
    const Json rows = LiftReport(tally, 1);
    int mismatches = 0;
    for (const Json& row : rows) {
      if (row["mnat_exc"]["passed"] != row["lifted_m_exc"]["passed"]) {
        ++mismatches;
      }
    }
    Require(o, mismatches == 0, std::to_string(mismatches) + " mismatches");
    lift_json = rows.dump();
    return o;
  });
  report(6, "lifting equivalence on 200 random n=4 functions", c6, 0.0);

  std::string duality_json;
  const Outcome c7 = Timed([&] {
    Outcome o;
    int instances = 0;
    bool all_passed = false;
    duality_json = DualityReport(1, &instances, &all_passed).dump();
    Require(o, instances == kDualityInstances,
            "only " + std::to_string(instances) + " instances");
    Require(o, all_passed, "a lemma or submodularity sample failed");
    return o;
  });
  report(7, "sampled duality bounds on 20 M-natural-concave functions", c7,
         0.0);

  Outcome c8;
  Require(c8, tally.verified > 0, "no witnesses produced");
  Require(c8, tally.failures == 0,
          std::to_string(tally.failures) + " witnesses failed");
  c8.detail += (c8.detail.empty() ? "" : "; ") +
               std::to_string(tally.verified) + " witnesses re-validated";
  report(8, "witness soundness", c8, 0.0);

  const Outcome c9 = Timed([&] {
    Outcome o;
    const int workers = MaxWorkers();
    SuiteOptions many;
    many.threads = workers;
    Require(o, ToJson(RunSuite(Corpus{CorpusSpec{}}, many)).dump() ==
                   exhaustive_json,
            "criterion 4 differs");
    Require(o,
            ToJson(RunSuite(testing::RandomCorpus(5, kRandomSuiteCount,
                                                  kRandomSuiteSeed),
                            many))
                    .dump() == random_json,
            "criterion 5 differs");
    WitnessTally scratch;
    Require(o, LiftReport(scratch, workers).dump() == lift_json,
            "criterion 6 differs");
    int instances = 0;
    bool all_passed = false;
    Require(o,
            DualityReport(workers, &instances, &all_passed).dump() ==
                duality_json,
            "criterion 7 differs");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("1 vs ") +
                std::to_string(workers) + " workers";
    return o;
  });
  report(9, "byte-identical reports across worker counts", c9, 0.0);

  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace dca

int main() { return dca::Main(); }
