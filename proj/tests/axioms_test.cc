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

#include <random>

#include "dca/generators.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracle.h"
#include "test_util.h"

namespace dca {
namespace {

using ::testing::ElementsAre;
using testing::SmallValuation;
using testing::TwoTriples;

Corpus Exhaustive3() { return Corpus(CorpusSpec{}); }

TEST(AxiomIdTest, NamesRoundTrip) {
  for (AxiomId id : AllAxioms()) EXPECT_EQ(ParseAxiomId(Name(id)), id);
  EXPECT_FALSE(ParseAxiomId("MNAT").has_value());
  EXPECT_EQ(AllAxioms().size(), 14u);
}

TEST(CheckAxiomTest, TwoTriples) {
  const SetFunction f = TwoTriples();
  for (AxiomId id : {AxiomId::kL1, AxiomId::kL2, AxiomId::kL3,
                     AxiomId::kMExcLoc}) {
    EXPECT_TRUE(CheckAxiom(f, id).passed) << Name(id);
  }
  const CheckReport r = CheckAxiom(f, AxiomId::kMnatExc);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->x, SubsetMask::Of({1, 2, 3}));
  EXPECT_EQ(r.witness->y, SubsetMask::Of({4, 5, 6}));
  EXPECT_EQ(r.witness->i, 1);
  EXPECT_EQ(r.witness->lhs, ExtValue(0.0));
  EXPECT_TRUE(r.witness->rhs.is_neg_inf());
  EXPECT_TRUE(VerifyWitness(f, *r.witness));
  EXPECT_FALSE(IsMConcave(f).passed);
}

TEST(CheckAxiomTest, SmallValuation) {
  const SetFunction f = SmallValuation();
  EXPECT_TRUE(IsMnatConcave(f).passed);
  for (AxiomId id : {AxiomId::kL1, AxiomId::kL2, AxiomId::kL3}) {
    EXPECT_TRUE(CheckAxiom(f, id).passed);
  }
  EXPECT_TRUE(IsMConcave(Lift(f, 2).function).passed);
}

TEST(CheckAxiomTest, ConstantZeroIsMnatButNotM) {
  // The domain is not equicardinal, so only the M-type axioms fail.
  const SetFunction f = SetFunction::Constant(GroundSet(3), 0.0);
  for (AxiomId id : AllAxioms()) {
    const bool m_type = id == AxiomId::kMExc || id == AxiomId::kMExcLoc ||
                        id == AxiomId::kMExcW || id == AxiomId::kMExcM;
    const CheckReport r = CheckAxiom(f, id);
    EXPECT_EQ(r.passed, !m_type) << Name(id);
    if (!r.passed) EXPECT_TRUE(VerifyWitness(f, *r.witness)) << Name(id);
  }
}

TEST(CheckAxiomTest, WeightedUniformMatroid) {
  const SetFunction f = WeightedMatroidValuation(UniformMatroidBases(2, 3),
                                                 PriceVector({3.0, 1.0, 0.0}));
  EXPECT_TRUE(CheckAxiom(f, AxiomId::kMExc).passed);
  EXPECT_TRUE(oracle::Holds(oracle::FromFunction(f), AxiomId::kMExc));
}

TEST(CheckAxiomTest, MultipleExchangeCap) {
  const SetFunction f = SetFunction::Constant(GroundSet(5), 0.0);
  CheckOptions options;
  options.multi_exchange_cap = 4;
  try {
    CheckAxiom(f, AxiomId::kMnatExcM, options);
    ADD_FAILURE() << "expected CapExceeded";
  } catch (const DcaError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
  EXPECT_TRUE(CheckAxiom(f, AxiomId::kMnatExc, options).passed);
}

TEST(CheckAxiomTest, EmptyJIsAllowedInMultipleExchange) {
  // X = {1}, Y = ∅, I = {1}: Y \ X is empty, so J = ∅ is the only choice.
  const SetFunction f(GroundSet(1), {0.0, 0.0});
  EXPECT_TRUE(oracle::Holds(oracle::FromFunction(f), AxiomId::kMnatExcM));
  EXPECT_TRUE(CheckAxiom(f, AxiomId::kMnatExcM).passed);
  EXPECT_TRUE(CheckAxiom(f, AxiomId::kMnatExcMs).passed);
  const CheckReport m = CheckAxiom(f, AxiomId::kMExcM);
  ASSERT_FALSE(m.passed);
  EXPECT_EQ(m.witness->removed, SubsetMask::Of({1}));
}

// Verdicts and minimal witnesses against the brute-force transcription.
void ExpectAgreesWithOracle(const SetFunction& f) {
  const oracle::Fn ref = oracle::FromFunction(f);
  for (AxiomId id : AllAxioms()) {
    const auto violations = oracle::Violations(ref, id);
    const CheckReport r = CheckAxiom(f, id);
    ASSERT_EQ(r.passed, violations.empty())
        << Name(id) << " on " << ToJson(f).dump();
    if (r.passed) continue;
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(VerifyWitness(f, *r.witness)) << Name(id);
    const oracle::Tuple& first = violations.front();
    const Witness& w = *r.witness;
    switch (id) {
      case AxiomId::kL1:
      case AxiomId::kL2:
      case AxiomId::kL3:
        break;  // structural order differs; membership checked below
      default:
        EXPECT_EQ(static_cast<int>(w.x.bits()), first[0]) << Name(id);
        EXPECT_EQ(static_cast<int>(w.y.bits()), first[1]) << Name(id);
        if (first.size() > 2 && w.i) EXPECT_EQ(*w.i, first[2]) << Name(id);
        if (first.size() > 2 && w.removed) {
          EXPECT_EQ(static_cast<int>(w.removed->bits()), first[2]) << Name(id);
        }
    }
  }
}

TEST(OracleAgreementTest, ExhaustiveSample) {
  const Corpus corpus = Exhaustive3();
  for (std::uint64_t k = 0; k < corpus.size(); k += 37) {
    ExpectAgreesWithOracle(corpus.At(k));
    if (HasFatalFailure()) return;
  }
}

TEST(OracleAgreementTest, RandomN4) {
  const Corpus corpus = testing::RandomCorpus(4, 150, 21);
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    ExpectAgreesWithOracle(corpus.At(k));
    if (HasFatalFailure()) return;
  }
}

TEST(OracleAgreementTest, FloatValuesN4) {
  CorpusSpec spec;
  spec.n = 4;
  spec.grid = {ExtValue::NegInf(), 0.0, 0.25, 1.5, 2.75};
  spec.mode = CorpusMode::kRandom;
  spec.count = 60;
  spec.seed = 4;
  const Corpus corpus(spec);
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    ExpectAgreesWithOracle(corpus.At(k));
    if (HasFatalFailure()) return;
  }
}

TEST(WitnessTest, LocalWitnessIsAViolation) {
  // L1 fails: f({1,2}) + f(∅) = 4 > f({1}) + f({2}) = 0.
  const SetFunction f(GroundSet(2), {2.0, 0.0, 0.0, 2.0});
  const CheckReport r = CheckAxiom(f, AxiomId::kL1);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.witness->z, SubsetMask());
  EXPECT_THAT(r.witness->local, ElementsAre(1, 2));
  EXPECT_TRUE(VerifyWitness(f, *r.witness));
}

TEST(WitnessTest, TamperingIsDetected) {
  const SetFunction f = TwoTriples();
  Witness w = *CheckAxiom(f, AxiomId::kMnatExc).witness;
  Witness wrong_lhs = w;
  wrong_lhs.lhs = 1.0;
  EXPECT_FALSE(VerifyWitness(f, wrong_lhs));
  // A different function where the tuple is no longer violated.
  const SetFunction g = SetFunction::Constant(GroundSet(6), 0.0);
  Witness stale = w;
  EXPECT_FALSE(VerifyWitness(g, stale));
  Witness bad = w;
  bad.i = 4;  // not in X \ Y
  EXPECT_THROW(VerifyWitness(f, bad), DcaError);
  Witness family = w;
  family.property = FamilyAxiomId::kBnatExc;
  EXPECT_THROW(VerifyWitness(f, family), DcaError);
}

TEST(TwoMaximizerTest, AgreesOnExhaustiveCorpus) {
  const Corpus corpus = Exhaustive3();
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const SetFunction f = corpus.At(k);
    for (AxiomId id : {AxiomId::kL2, AxiomId::kL3}) {
      const CheckReport two = TwoMaximizerCheck(f, id);
      ASSERT_EQ(two.passed, CheckAxiom(f, id).passed) << k;
      if (!two.passed) ASSERT_TRUE(VerifyWitness(f, *two.witness));
    }
  }
}

TEST(TwoMaximizerTest, AgreesOnRandomN5) {
  const Corpus corpus = testing::RandomCorpus(5, 300, 8);
  int failing = 0;
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const SetFunction f = corpus.At(k);
    for (AxiomId id : {AxiomId::kL2, AxiomId::kL3}) {
      const CheckReport two = TwoMaximizerCheck(f, id);
      ASSERT_EQ(two.passed, CheckAxiom(f, id).passed) << k;
      if (!two.passed) {
        ++failing;
        EXPECT_TRUE(VerifyWitness(f, *two.witness));
      }
    }
  }
  EXPECT_GT(failing, 0);
  EXPECT_THROW(TwoMaximizerCheck(SmallValuation(), AxiomId::kL1), DcaError);
}

TEST(ShiftInvarianceTest, ViolationSetsMatch) {
  std::mt19937_64 rng(17);
  const Corpus corpus = testing::RandomCorpus(4, 60, 31);
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const SetFunction f = corpus.At(k);
    std::vector<double> p(4);
    for (double& v : p) v = static_cast<int>(rng() % 11) - 5;
    const SetFunction g = AddLinear(f, PriceVector(p));
    const oracle::Fn rf = oracle::FromFunction(f);
    const oracle::Fn rg = oracle::FromFunction(g);
    for (AxiomId id : AllAxioms()) {
      EXPECT_EQ(oracle::Violations(rf, id), oracle::Violations(rg, id));
      const CheckReport a = CheckAxiom(f, id);
      const CheckReport b = CheckAxiom(g, id);
      ASSERT_EQ(a.passed, b.passed) << Name(id);
      if (!a.passed) {
        EXPECT_EQ(a.witness->x, b.witness->x);
        EXPECT_EQ(a.witness->y, b.witness->y);
        EXPECT_EQ(a.witness->i, b.witness->i);
        EXPECT_EQ(a.witness->removed, b.witness->removed);
        EXPECT_EQ(a.witness->z, b.witness->z);
        EXPECT_EQ(a.witness->local, b.witness->local);
      }
    }
  }
}

TEST(ShiftInvarianceTest, FractionalPricesKeepVerdicts) {
  std::mt19937_64 rng(5);
  const Corpus corpus = testing::RandomCorpus(4, 60, 32);
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const SetFunction f = corpus.At(k);
    std::vector<double> p(4);
    for (double& v : p) v = (static_cast<double>(rng() % 2001) - 1000) / 333.0;
    const SetFunction g = AddLinear(f, PriceVector(p));
    for (AxiomId id : AllAxioms()) {
      EXPECT_EQ(CheckAxiom(f, id).passed, CheckAxiom(g, id).passed)
          << Name(id);
    }
  }
}

TEST(DeterminismTest, ThreadsDoNotChangeReports) {
  const Corpus corpus = testing::RandomCorpus(6, 40, 2);
  CheckOptions one, four;
  four.threads = 4;
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const SetFunction f = corpus.At(k);
    for (AxiomId id : AllAxioms()) {
      const CheckReport a = CheckAxiom(f, id, one);
      const CheckReport b = CheckAxiom(f, id, four);
      EXPECT_EQ(a.passed, b.passed);
      EXPECT_EQ(a.witness, b.witness);
      EXPECT_EQ(a.pairs_examined, b.pairs_examined);
    }
  }
}

}  // namespace
}  // namespace dca
