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

#include "fairdire/results_io.h"

#include <gtest/gtest.h>

#include <sstream>

#include "fairdire/errors.h"

namespace fairdire {
namespace {

ExperimentResult SampleResult() {
  ExperimentResult r;
  ExperimentRow ok;
  ok.value = "1/13";
  ok.instance = 0;
  ok.feasible = true;
  ok.ef_exists = true;
  ok.score_ef = 285;
  ok.score_dire = 286;
  ok.ratio = Rational(285, 286);
  ok.prop_envious = Rational(0);
  ok.simpsons = false;
  ExperimentRow bad;
  bad.value = "1/13";
  bad.instance = 1;
  r.rows = {ok, bad};
  PointSummary p;
  p.value = "1/13";
  p.instances = 2;
  p.infeasible = 1;
  p.mean_utility_ratio = 0.5;
  p.mean_prop_envious = std::nan("");
  r.points = {p};
  return r;
}

TEST(WriteExperimentCsvTest, FixedColumns) {
  std::ostringstream out;
  WriteExperimentCsv(SampleResult(), out);
  EXPECT_EQ(out.str(), std::string(kExperimentCsvHeader) +
                           "\n"
                           "1/13,0,1,1,285,286,285,286,0,1,0\n"
                           "1/13,1,0,0,,,,,,,na\n");
}

TEST(WriteExperimentSummaryCsvTest, EmptyMeansStayBlank) {
  std::ostringstream out;
  WriteExperimentSummaryCsv(SampleResult(), out);
  const std::string text = out.str();
  EXPECT_NE(text.find("0.500000"), std::string::npos);
  EXPECT_EQ(text.find("nan"), std::string::npos);
}

TEST(ParseGenConfigTest, ReadsKeys) {
  const GenConfig g = ParseGenConfig(
      R"({"m": 20, "n": 40, "k": 5, "phi": 0.25, "seed": 9, "mu": 1,
          "pi": 3})");
  EXPECT_EQ(g.m, 20);
  EXPECT_EQ(g.n, 40);
  EXPECT_EQ(g.k, 5);
  EXPECT_DOUBLE_EQ(g.phi, 0.25);
  EXPECT_EQ(g.seed, 9u);
  EXPECT_EQ(g.mu, 1);
  EXPECT_EQ(g.pi, 3);
  EXPECT_THROW(ParseGenConfig(R"({"q": 1})"), DomainError);
  EXPECT_THROW(ParseGenConfig("[1]"), DomainError);
  EXPECT_THROW(ParseGenConfig("{"), DomainError);
}

TEST(ParseExperimentConfigTest, ReadsSweep) {
  const ExperimentConfig c = ParseExperimentConfig(R"({
    "sweep": "bound", "values": [0, "1/13", "2/13"], "instances": 3,
    "rule": "kborda", "notions": ["wec"], "scopes": ["global", "localized"],
    "seed": 7, "generator": {"m": 10, "n": 12, "k": 3}
  })");
  EXPECT_EQ(c.sweep, SweepVariable::kBound);
  EXPECT_EQ(c.values, (std::vector<std::string>{"0", "1/13", "2/13"}));
  EXPECT_EQ(c.instances, 3);
  ASSERT_EQ(c.notions.size(), 1u);
  EXPECT_EQ(c.notions[0].kind(), Notion::Kind::kWec);
  EXPECT_EQ(c.scopes.size(), 2u);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.generator.m, 10);
  EXPECT_THROW(ParseExperimentConfig(R"({"sweep": "m", "values": [1]})"),
               DomainError);
  EXPECT_THROW(ParseExperimentConfig(R"({"values": [1], "rule": "x"})"),
               DomainError);
}

}  // namespace
}  // namespace fairdire
