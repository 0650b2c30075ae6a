// Copyright 2026 The fairdire Authors
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

#include "fairdire/envyfree.h"

#include <gtest/gtest.h>

#include <random>

#include "brute_force.h"
#include "fairdire/errors.h"
#include "fixtures.h"

namespace fairdire {
namespace {

using ::fairdire::testing::Example1;
using ::fairdire::testing::Example1Constraints;
using ::fairdire::testing::Ids;

constexpr PopulationId kCa{0, 0};
constexpr PopulationId kIl{0, 1};

PopulationProfile Profile(PopulationId id) {
  const Election& e = Example1().election;
  return MakeProfile(e, e.population(id), Rule::kKBorda, 4,
                     &Example1Constraints().population_committees.at(id));
}

// Four voters split by gender {M,F} and race {A,C}.
Election FourVoters() {
  std::vector<Ranking> r = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  return Election(3, r, {}, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
}

TEST(NotionTest, ParseAndFormat) {
  EXPECT_EQ(Notion::Parse("fec", "1"), Notion::Fec(1));
  EXPECT_EQ(Notion::Parse("uec", "2"), Notion::Uec(2));
  EXPECT_EQ(Notion::Parse("wec", "2/13"), Notion::Wec(Rational(2, 13)));
  EXPECT_EQ(Notion::Wec(Rational(1, 13)).ToString(), "WEC(1/13)");
  EXPECT_EQ(Notion::Fec(0).ToString(), "FEC(0)");
  EXPECT_THROW(Notion::Parse("fec", "1/2"), DomainError);
  EXPECT_THROW(Notion::Parse("xyz", "0"), DomainError);
  EXPECT_EQ(Notion::Uec(0).WithBound(Rational(3)), Notion::Uec(3));
}

TEST(NotionTest, ValidateRanges) {
  EXPECT_NO_THROW(Notion::Fec(3).Validate(8, 4));
  EXPECT_THROW(Notion::Fec(4).Validate(8, 4), DomainError);
  EXPECT_NO_THROW(Notion::Uec(28).Validate(8, 4));
  EXPECT_THROW(Notion::Uec(29).Validate(8, 4), DomainError);
  EXPECT_THROW(Notion::Wec(Rational(3, 2)).Validate(8, 4), DomainError);
  EXPECT_THROW(Notion::Uec(-1).Validate(8, 4), DomainError);
}

TEST(ScopeTest, Names) {
  for (Scope s : {Scope::kGlobal, Scope::kLocalized, Scope::kIntersectional}) {
    EXPECT_EQ(ParseScope(ScopeName(s)), s);
  }
  EXPECT_FALSE(ParseScope("nowhere").has_value());
}

TEST(PopulationUtilityTest, ExampleUtilities) {
  EXPECT_EQ(PopulationUtility(Profile(kIl), Ids({1, 6, 3, 8})), 14);
  EXPECT_EQ(PopulationUtility(Profile(kCa), Ids({1, 6, 3, 8})), 16);
  EXPECT_EQ(PopulationUtility(Profile(kIl), Ids({1, 5, 3, 8})), 15);
  EXPECT_EQ(PopulationUtility(Profile(kCa), Ids({1, 5, 3, 8})), 15);
}

TEST(WeightedUtilityTest, ExampleFractions) {
  EXPECT_EQ(WeightedUtility(Profile(kIl), 2, Ids({1, 6, 3, 8})),
            Rational(10, 13));
  EXPECT_EQ(WeightedUtility(Profile(kCa), 2, Ids({1, 6, 3, 8})),
            Rational(12, 13));
  EXPECT_EQ(WeightedUtility(Profile(kIl), 2, Ids({1, 5, 3, 7})),
            Rational(12, 13));
  EXPECT_EQ(WeightedUtility(Profile(kCa), 2, Ids({1, 5, 3, 7})),
            Rational(12, 13));
}

TEST(WeightedUtilityTest, DisjointIsZeroAndZeroBoundThrows) {
  EXPECT_EQ(WeightedUtility(Profile(kIl), 2, Ids({1, 2, 3, 4})), Rational(0));
  EXPECT_THROW(WeightedUtility(Profile(kIl), 0, Ids({1, 2, 3, 4})),
               DomainError);
}

TEST(FavoriteRankTest, Cases) {
  EXPECT_EQ(FavoriteRank(Profile(kIl), Ids({1, 6, 3, 8})), 2);
  EXPECT_EQ(FavoriteRank(Profile(kIl), Ids({5, 2})), 1);
  EXPECT_EQ(FavoriteRank(Profile(kCa), Ids({1, 2, 3, 4, 5, 6, 7, 8})), 1);
}

TEST(PairSetTest, ScopesOverTwoAttributes) {
  const Election e = FourVoters();
  const auto global = ScopePopulations(e, Scope::kGlobal);
  EXPECT_EQ(PairSet(global, Scope::kGlobal).size(), 6u);
  const auto local = ScopePopulations(e, Scope::kLocalized);
  const auto lp = PairSet(local, Scope::kLocalized);
  ASSERT_EQ(lp.size(), 2u);
  for (const auto& [a, b] : lp) {
    EXPECT_EQ(local[a].parts[0].attribute, local[b].parts[0].attribute);
  }
  const auto inter = ScopePopulations(e, Scope::kIntersectional);
  EXPECT_EQ(inter.size(), 4u);
  EXPECT_EQ(PairSet(inter, Scope::kIntersectional).size(), 6u);
  for (const auto& p : inter) {
    EXPECT_EQ(p.parts.size(), 2u);
    EXPECT_EQ(p.voters.size(), 1u);
  }
}

TEST(PairSetTest, IntersectionalNeedsTwoAttributes) {
  EXPECT_THROW(ScopePopulations(Example1().election, Scope::kIntersectional),
               DomainError);
}

TEST(CheckEnvyfreeTest, PropertyTableSamples) {
  const Election& e = Example1().election;
  const ConstraintSet& cs = Example1Constraints();
  EXPECT_TRUE(CheckEnvyfree(e, cs, Ids({1, 5, 3, 8}), Notion::Uec(0),
                            Scope::kGlobal)
                  .overall);
  EXPECT_FALSE(CheckEnvyfree(e, cs, Ids({1, 6, 3, 8}), Notion::Uec(1),
                             Scope::kGlobal)
                   .overall);
  EXPECT_TRUE(CheckEnvyfree(e, cs, Ids({1, 6, 3, 8}), Notion::Uec(2),
                            Scope::kGlobal)
                  .overall);
  EXPECT_TRUE(CheckEnvyfree(e, cs, Ids({1, 5, 3, 7}),
                            Notion::Wec(Rational(0)), Scope::kGlobal)
                  .overall);
}

TEST(CheckEnvyfreeTest, ReportDetails) {
  const EnvyReport r =
      CheckEnvyfree(Example1().election, Example1Constraints(),
                    Ids({1, 6, 3, 8}), Notion::Wec(Rational(0)),
                    Scope::kGlobal);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].measure, Rational(2, 13));
  EXPECT_FALSE(r.pairs[0].satisfied);
  EXPECT_EQ(r.envious, (std::vector<bool>{true, true}));
  EXPECT_EQ(r.proportion_envious, Rational(1));
}

TEST(CheckEnvyfreeTest, FecOnlyMissingSideIsEnvious) {
  const EnvyReport r =
      CheckEnvyfree(Example1().election, Example1Constraints(),
                    Ids({1, 6, 3, 8}), Notion::Fec(0), Scope::kGlobal);
  EXPECT_FALSE(r.overall);
  EXPECT_EQ(r.pairs[0].measure, Rational(1));
  EXPECT_EQ(r.envious, (std::vector<bool>{false, true}));
  EXPECT_EQ(r.proportion_envious, Rational(1, 2));
}

TEST(CheckEnvyfreeTest, SinglePopulationHasNoPairs) {
  const Election e(3, {{0, 1, 2}, {2, 1, 0}}, {}, {{{0, 1}}});
  const EnvyReport r = CheckEnvyfree(e, ConstraintSet{}, std::vector<int>{2},
                                     Notion::Uec(0), Scope::kGlobal);
  EXPECT_TRUE(r.overall);
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_EQ(r.proportion_envious, Rational(0));
}

TEST(EnvyEvaluatorTest, SatisfiedMatchesCheck) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = testing::RandomSmallInstance(rng, {});
    const EnvyEvaluator ev(inst.election, inst.constraints, Rule::kKBorda,
                           inst.k, Scope::kGlobal);
    for (const auto& w : testing::AllSubsets(inst.election.num_candidates(),
                                             inst.k)) {
      for (const Notion& n : {Notion::Fec(0), Notion::Uec(1),
                              Notion::Wec(Rational(1, 5))}) {
        const EnvyReport r = ev.Check(w, n);
        ASSERT_EQ(ev.Satisfied(w, n), r.overall);
        ASSERT_EQ(ev.ProportionEnvious(w, n), r.proportion_envious);
        ASSERT_EQ(r.overall,
                  testing::OracleEnvyfree(inst.election, inst.constraints,
                                          Rule::kKBorda, w, n, Scope::kGlobal));
      }
    }
  }
}

TEST(FecPolyCheckTest, ExampleCases) {
  const Election& e = Example1().election;
  const ConstraintSet& cs = Example1Constraints();
  EXPECT_FALSE(FecPolyCheck(e, cs, Ids({1, 6, 3, 8}), 0));
  EXPECT_TRUE(FecPolyCheck(e, cs, Ids({1, 6, 3, 8}), 3));
  EXPECT_THROW(FecPolyCheck(e, cs, Ids({1, 6, 3, 8}), 1), UnsupportedError);
}

TEST(FecPolyCheckTest, SinglePopulationWithTopInCommittee) {
  const Election e(4, {{2, 0, 1, 3}}, {}, {{{0}}});
  const ConstraintSet cs =
      WithPopulationCommittees(e, ConstraintSet{}, Rule::kKBorda, 2);
  EXPECT_TRUE(FecPolyCheck(e, cs, std::vector<int>{0, 2}, 0));
}

TEST(FindEnvyfreeDireTest, ExampleOptima) {
  const Election& e = Example1().election;
  const ConstraintSet& cs = Example1Constraints();
  auto solve = [&](const Notion& n) {
    return FindEnvyfreeDire(e, cs, Rule::kKBorda, 4, n, Scope::kGlobal);
  };
  const auto fec = solve(Notion::Fec(0));
  ASSERT_TRUE(fec.has_value());
  EXPECT_EQ(fec->members, Ids({1, 5, 3, 8}));
  EXPECT_EQ(fec->score, 285);
  const auto uec = solve(Notion::Uec(0));
  ASSERT_TRUE(uec.has_value());
  EXPECT_EQ(uec->members, Ids({1, 5, 3, 8}));
  const auto wec = solve(Notion::Wec(Rational(0)));
  ASSERT_TRUE(wec.has_value());
  EXPECT_EQ(wec->members, Ids({1, 5, 3, 7}));
  EXPECT_EQ(wec->score, 284);
  const auto loose = solve(Notion::Uec(28));
  ASSERT_TRUE(loose.has_value());
  EXPECT_EQ(loose->members, Ids({1, 6, 3, 8}));
}

}  // namespace
}  // namespace fairdire
