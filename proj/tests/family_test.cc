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

#include "dca/family.h"

#include <random>

#include "dca/generators.h"
#include "gtest/gtest.h"
#include "oracle.h"
#include "test_util.h"

namespace dca {
namespace {

SetFamily Members(int n, std::vector<std::vector<int>> sets) {
  std::vector<SubsetMask> members;
  for (const auto& s : sets) members.push_back(SubsetMask::Of(s));
  return SetFamily(GroundSet(n), std::move(members));
}

SetFamily Footnote() {
  return Members(5, {{1, 2}, {1, 4}, {1, 5}, {4, 5}, {3, 4, 5}});
}

TEST(FamilyAxiomIdTest, NamesRoundTrip) {
  for (FamilyAxiomId id : AllFamilyAxioms()) {
    EXPECT_EQ(ParseFamilyAxiomId(Name(id)), id);
  }
  EXPECT_EQ(AllFamilyAxioms().size(), 13u);
}

TEST(CheckFamilyTest, TwoTriplesIsNotAGMatroid) {
  const SetFamily fam = Members(6, {{1, 2, 3}, {4, 5, 6}});
  const CheckReport r = CheckFamily(fam, FamilyAxiomId::kBnatExc);
  ASSERT_FALSE(r.passed);
  EXPECT_TRUE(VerifyFamilyWitness(fam, *r.witness));
  EXPECT_EQ(r.witness->x, SubsetMask::Of({1, 2, 3}));
  EXPECT_EQ(r.witness->i, 1);
}

TEST(CheckFamilyTest, FootnoteFamily) {
  const SetFamily fam = Footnote();
  EXPECT_TRUE(CheckFamily(fam, FamilyAxiomId::kConnDown).passed);
  EXPECT_TRUE(CheckFamily(fam, FamilyAxiomId::kConnSwap).passed);
  const CheckReport cross = CheckFamily(fam, FamilyAxiomId::kConnCross);
  ASSERT_FALSE(cross.passed);
  EXPECT_TRUE(VerifyFamilyWitness(fam, *cross.witness));
}

TEST(CheckFamilyTest, UniformMatroidBases) {
  const SetFamily fam = UniformMatroidBases(2, 4);
  EXPECT_TRUE(CheckFamily(fam, FamilyAxiomId::kBExc).passed);
  EXPECT_TRUE(CheckFamily(fam, FamilyAxiomId::kEquicard).passed);
  EXPECT_TRUE(oracle::Holds(oracle::FromFamily(fam), FamilyAxiomId::kBExc));
}

TEST(CheckFamilyTest, EmptySetOnlyPassesEverything) {
  const SetFamily fam(GroundSet(3), {SubsetMask()});
  for (FamilyAxiomId id : AllFamilyAxioms()) {
    EXPECT_TRUE(CheckFamily(fam, id).passed) << Name(id);
  }
}

TEST(CheckFamilyTest, EmptyFamilyIsRejected) {
  try {
    CheckFamily(SetFamily(GroundSet(2), {}), FamilyAxiomId::kBExc);
    ADD_FAILURE();
  } catch (const DcaError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyFamily);
  }
}

TEST(ImpliedPropertiesTest, Fixtures) {
  const ImpliedProperties g =
      CheckImpliedProperties(EffectiveDomain(testing::SmallValuation()));
  EXPECT_TRUE(g.bnat_exc.passed);
  EXPECT_TRUE(g.conn_down.passed);
  EXPECT_TRUE(g.conn_swap.passed);
  EXPECT_TRUE(g.conn_cross.passed);
  const ImpliedProperties f = CheckImpliedProperties(Footnote());
  EXPECT_FALSE(f.bnat_exc.passed);
  EXPECT_FALSE(f.conn_cross.passed);
  const ImpliedProperties e =
      CheckImpliedProperties(SetFamily(GroundSet(2), {SubsetMask()}));
  EXPECT_TRUE(e.bnat_exc.passed && e.conn_down.passed && e.conn_swap.passed &&
              e.conn_cross.passed);
}

TEST(MatroidIndependenceTest, Fixtures) {
  std::vector<SubsetMask> small;
  for (std::uint32_t b = 0; b < 8; ++b) {
    if (std::popcount(b) <= 2) small.emplace_back(b);
  }
  EXPECT_TRUE(IsMatroidIndependence(SetFamily(GroundSet(3), small)).passed);
  EXPECT_TRUE(
      IsMatroidIndependence(EffectiveDomain(testing::SmallValuation())).passed);
  const SetFamily no_empty = Members(2, {{1}, {2}});
  const CheckReport r = IsMatroidIndependence(no_empty);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.witness->clause, "I-1");
  EXPECT_TRUE(VerifyFamilyWitness(no_empty, *r.witness));

  const SetFamily not_closed = Members(2, {{}, {1, 2}});
  const CheckReport r2 = IsMatroidIndependence(not_closed);
  ASSERT_FALSE(r2.passed);
  EXPECT_EQ(r2.witness->clause, "I-2");
  EXPECT_TRUE(VerifyFamilyWitness(not_closed, *r2.witness));

  const SetFamily no_augment = Members(3, {{}, {1}, {2}, {3}, {2, 3}});
  const CheckReport r3 = IsMatroidIndependence(no_augment);
  ASSERT_FALSE(r3.passed);
  EXPECT_EQ(r3.witness->clause, "I-3");
  EXPECT_TRUE(VerifyFamilyWitness(no_augment, *r3.witness));
}

TEST(OracleAgreementTest, RandomFamilies) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<SubsetMask> members;
    const int density = 1 + static_cast<int>(rng() % 4);
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      if (rng() % 5 < static_cast<unsigned>(density)) members.emplace_back(b);
    }
    if (members.empty()) members.emplace_back(static_cast<std::uint32_t>(rng() % (1u << n)));
    const SetFamily fam(GroundSet(n), members);
    const oracle::Family ref = oracle::FromFamily(fam);
    for (FamilyAxiomId id : AllFamilyAxioms()) {
      const CheckReport r = CheckFamily(fam, id);
      ASSERT_EQ(r.passed, oracle::Holds(ref, id))
          << Name(id) << " " << ToJson(fam).dump();
      if (!r.passed) ASSERT_TRUE(VerifyFamilyWitness(fam, *r.witness));
    }
  }
}

TEST(OracleAgreementTest, StructuredFamilies) {
  // Domains of corpus functions hit the positive side far more often.
  const Corpus corpus = testing::RandomCorpus(4, 200, 12);
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const SetFamily fam = EffectiveDomain(corpus.At(k));
    const oracle::Family ref = oracle::FromFamily(fam);
    for (FamilyAxiomId id : AllFamilyAxioms()) {
      ASSERT_EQ(CheckFamily(fam, id).passed, oracle::Holds(ref, id))
          << Name(id) << " " << ToJson(fam).dump();
    }
  }
}

TEST(DeterminismTest, ThreadsDoNotChangeFamilyReports) {
  const Corpus corpus = testing::RandomCorpus(6, 30, 77);
  CheckOptions four;
  four.threads = 4;
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const SetFamily fam = EffectiveDomain(corpus.At(k));
    for (FamilyAxiomId id : AllFamilyAxioms()) {
      const CheckReport a = CheckFamily(fam, id);
      const CheckReport b = CheckFamily(fam, id, four);
      EXPECT_EQ(a.witness, b.witness);
      EXPECT_EQ(a.pairs_examined, b.pairs_examined);
    }
  }
}

}  // namespace
}  // namespace dca
