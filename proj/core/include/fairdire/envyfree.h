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

#ifndef FAIRDIRE_ENVYFREE_H_
#define FAIRDIRE_ENVYFREE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairdire/dire_solver.h"
#include "fairdire/election.h"
#include "fairdire/rational.h"
#include "fairdire/rules.h"

namespace fairdire {

// Favorite-, utility- and weighted-envyfree committees and their relaxed
// bounds: FEC up to x, UEC up to eta, WEC up to zeta.
class Notion {
 public:
  enum class Kind { kFec, kUec, kWec };

  static Notion Fec(int64_t x);
  static Notion Uec(int64_t eta);
  static Notion Wec(Rational zeta);
  // kind is "fec", "uec" or "wec"; bound is an integer or "p/q".
  static Notion Parse(std::string_view kind, std::string_view bound);

  Kind kind() const { return kind_; }
  // x or eta (FEC / UEC).
  int64_t int_bound() const { return bound_.num(); }
  // The bound as a rational, whatever the kind.
  const Rational& bound() const { return bound_; }

  // Same kind, different bound.
  Notion WithBound(const Rational& bound) const;

  // "FEC(0)", "WEC(1/13)", ...
  std::string ToString() const;
  std::string_view KindName() const;

  // Range check against m and k: x in [0, k-1], eta in [0, m(m-1)/2],
  // zeta in [0, 1]. Throws DomainError.
  void Validate(int num_candidates, int k) const;

  friend bool operator==(const Notion&, const Notion&) = default;

 private:
  Notion(Kind kind, Rational bound) : kind_(kind), bound_(bound) {}
  Kind kind_;
  Rational bound_;
};

enum class Scope { kGlobal, kLocalized, kIntersectional };

std::string_view ScopeName(Scope scope);
std::optional<Scope> ParseScope(std::string_view name);

// A population compared under some scope: one base population, or the
// intersection of two populations from different attributes.
struct ScopedPopulation {
  std::vector<PopulationId> parts;
  std::vector<VoterId> voters;

  std::string ToString() const;
};

// Populations taking part in a scope. Global and localized use every base
// population; intersectional uses every non-empty P ∩ P' over populations of
// two different attributes. Throws DomainError for intersectional with fewer
// than two voter attributes.
std::vector<ScopedPopulation> ScopePopulations(const Election& e, Scope scope);

// Unordered pairs (indices into populations) compared under a scope: all
// pairs for global and intersectional, same-attribute pairs for localized.
std::vector<std::pair<int, int>> PairSet(
    std::span<const ScopedPopulation> populations, Scope scope);

// U_P: sum over w of the population's Borda score for each member.
int64_t PopulationUtility(const PopulationProfile& p,
                          std::span<const CandidateId> w);

// WU_P: Borda mass of W_P ∩ w over sum_{i=1..l} (m - i). Throws DomainError
// unless 1 <= l <= m.
Rational WeightedUtility(const PopulationProfile& p, int representation_bound,
                         std::span<const CandidateId> w);

// Best 1-based aggregate rank among w's members. Throws DomainError on an
// empty committee.
int FavoriteRank(const PopulationProfile& p, std::span<const CandidateId> w);

struct EnvyPair {
  int first = 0;
  int second = 0;
  // |U_P - U_P'| for UEC, |WU_P - WU_P'| for WEC, and for FEC the larger of
  // the two favorite-rank overshoots max(0, rank - (x + 1)).
  Rational measure;
  bool satisfied = true;
};

struct EnvyReport {
  std::vector<ScopedPopulation> populations;
  std::vector<EnvyPair> pairs;
  // Per population: envious of at least one partner.
  std::vector<bool> envious;
  bool overall = true;
  Rational proportion_envious;
};

// Evaluates envy for many committees against fixed population profiles.
// Base populations take W_P from cs when present, otherwise from the rule;
// intersections always use the rule. WEC uses l^R_P from cs, defaulting to 1
// (always 1 for intersections).
class EnvyEvaluator {
 public:
  EnvyEvaluator(const Election& e, const ConstraintSet& cs, Rule rule, int k,
                Scope scope, const SearchLimits& limits = {});

  EnvyReport Check(std::span<const CandidateId> w, const Notion& notion) const;
  // Same verdict as Check(...).overall without building a report.
  bool Satisfied(std::span<const CandidateId> w, const Notion& notion) const;
  Rational ProportionEnvious(std::span<const CandidateId> w,
                             const Notion& notion) const;

  Scope scope() const { return scope_; }
  int k() const { return k_; }
  const std::vector<ScopedPopulation>& populations() const {
    return populations_;
  }
  const std::vector<PopulationProfile>& profiles() const { return profiles_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const std::vector<int>& representation_bounds() const { return bounds_; }

 private:
  void Measure(std::span<const CandidateId> w, const Notion& notion,
               std::vector<EnvyPair>* pairs) const;

  int num_candidates_;
  int k_;
  Scope scope_;
  std::vector<ScopedPopulation> populations_;
  std::vector<PopulationProfile> profiles_;
  std::vector<int> bounds_;
  std::vector<std::pair<int, int>> pairs_;
};

// One-shot EnvyEvaluator(...).Check(w, notion) with k = |w|.
EnvyReport CheckEnvyfree(const Election& e, const ConstraintSet& cs,
                         std::span<const CandidateId> w, const Notion& notion,
                         Scope scope, Rule rule = Rule::kKBorda);

// Polynomial-time FEC existence test for x in {0, k-2, k-1}, following the
// three-branch procedure over base populations: x = 0 gathers every
// population's favorite W_P member; x = k-1 always succeeds; x = k-2 drops
// each population's least favorite W_P member from w and re-checks the
// bounds. cs must carry W_P for every population (see
// WithPopulationCommittees). Throws UnsupportedError for other x.
bool FecPolyCheck(const Election& e, const ConstraintSet& cs,
                  std::span<const CandidateId> w, int x);

// Highest-scoring DiRe committee whose envy report is overall-true, or
// nullopt. Ties go to the lexicographically smallest member list.
std::optional<Committee> FindEnvyfreeDire(const Election& e,
                                          const ConstraintSet& cs, Rule rule,
                                          int k, const Notion& notion,
                                          Scope scope,
                                          const SearchLimits& limits = {});

}  // namespace fairdire

#endif  // FAIRDIRE_ENVYFREE_H_
