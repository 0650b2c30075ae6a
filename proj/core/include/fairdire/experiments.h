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

#ifndef FAIRDIRE_EXPERIMENTS_H_
#define FAIRDIRE_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairdire/dire_solver.h"
#include "fairdire/envyfree.h"
#include "fairdire/rational.h"
#include "fairdire/rules.h"
#include "fairdire/synthgen.h"

namespace fairdire {

// score(envyfree) / score(dire_opt), exact. Throws DomainError when the
// DiRe optimum scores 0.
Rational UtilityRatio(const Election& e, const Committee& envyfree,
                      const Committee& dire_opt, Rule rule);

// Fraction of the scope's populations that are envious of at least one
// partner under the notion.
Rational ProportionEnvious(const Election& e, const ConstraintSet& cs,
                           std::span<const CandidateId> w,
                           const Notion& notion, Scope scope,
                           Rule rule = Rule::kKBorda);

// Smallest ProportionEnvious over every DiRe committee: the share of
// populations that stay envious whatever DiRe committee is chosen. nullopt
// when no DiRe committee exists.
std::optional<Rational> MinProportionEnvious(const Election& e,
                                             const ConstraintSet& cs, Rule rule,
                                             int k, const Notion& notion,
                                             Scope scope);

struct SimpsonsReport {
  // False when the election has fewer than two voter attributes.
  bool applicable = false;
  // Best intersectionally envy-free DiRe committee, and whether it fails
  // globally.
  std::optional<Committee> intersectional_best;
  bool global_fails_intersectional_holds = false;
  // Best globally envy-free DiRe committee, and whether it fails
  // intersectionally.
  std::optional<Committee> global_best;
  bool intersectional_fails_global_holds = false;

  bool paradox() const {
    return global_fails_intersectional_holds ||
           intersectional_fails_global_holds;
  }
};

SimpsonsReport DetectSimpsons(const Election& e, const ConstraintSet& cs,
                              Rule rule, int k, const Notion& notion);

enum class SweepVariable { kPi, kPhi, kBound };

std::string_view SweepName(SweepVariable sweep);
std::optional<SweepVariable> ParseSweep(std::string_view name);

struct ExperimentConfig {
  SweepVariable sweep = SweepVariable::kBound;
  // Sweep values as written: integers for pi, decimals for phi, integers or
  // "p/q" for bounds.
  std::vector<std::string> values;
  int instances = 5;
  Rule rule = Rule::kKBorda;
  // Bounds are replaced by the sweep value in a bound sweep.
  std::vector<Notion> notions{Notion::Fec(0)};
  std::vector<Scope> scopes{Scope::kGlobal};
  uint64_t seed = 1;
  // Election shape; pi or phi is overridden by the sweep value.
  GenConfig generator;
  DefaultConstraintOptions constraints;

  // Throws DomainError.
  void Validate() const;
};

// One (value, instance, notion, scope) cell.
struct ExperimentRow {
  std::string value;
  int instance = 0;
  Notion notion = Notion::Fec(0);
  Scope scope = Scope::kGlobal;
  bool feasible = false;
  bool ef_exists = false;
  std::optional<int64_t> score_ef;
  std::optional<int64_t> score_dire;
  std::optional<Rational> ratio;
  // MinProportionEnvious; nullopt when infeasible.
  std::optional<Rational> prop_envious;
  // nullopt when the instance has fewer than two voter attributes.
  std::optional<bool> simpsons;
};

struct PointSummary {
  std::string value;
  Notion notion = Notion::Fec(0);
  Scope scope = Scope::kGlobal;
  int instances = 0;
  int infeasible = 0;
  int no_envyfree = 0;
  int simpsons = 0;
  // Means over rows where the quantity exists; NaN when none.
  double mean_utility_ratio = 0;
  double mean_prop_envious = 0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::vector<PointSummary> points;
};

// Seed of instance i: identical across sweep values so that bound sweeps
// re-evaluate the same elections.
uint64_t InstanceSeed(uint64_t seed, int instance);

// Rows are ordered value-major, then instance, notion and scope in config
// order. Intersectional rows are skipped for instances with pi < 2.
ExperimentResult RunExperiment(const ExperimentConfig& cfg);

}  // namespace fairdire

#endif  // FAIRDIRE_EXPERIMENTS_H_
