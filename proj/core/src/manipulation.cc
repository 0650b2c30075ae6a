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

#include "fairdire/manipulation.h"

#include <algorithm>
#include <string>

#include "fairdire/errors.h"

namespace fairdire {
namespace {

int64_t Utility(const Ranking& aggregate, const Committee& w) {
  const int64_t m = static_cast<int64_t>(aggregate.size());
  int64_t total = 0;
  for (int64_t i = 0; i < m; ++i) {
    if (w.Contains(aggregate[i])) total += m - 1 - i;
  }
  return total;
}

int CountIn(const std::vector<CandidateId>& set, const Committee& w) {
  int n = 0;
  for (CandidateId c : set) n += w.Contains(c);
  return n;
}

// Appends each success condition met by `after`.
void CollectHarm(const Election& e, const ConstraintSet& cs,
                 PopulationId manipulator, const ElectionOutcome& before,
                 const ElectionOutcome& after, std::vector<Harm>* harm) {
  if (!after.winner.has_value()) {
    if (before.winner.has_value()) {
      harm->push_back({Harm::Kind::kNoCommittee, {}, 1, 0});
    }
    return;
  }
  const Committee& w = *after.winner;
  for (const auto& [pid, committee] : after.population_committees) {
    if (pid == manipulator) continue;
    const auto& old_committee = before.population_committees.at(pid);
    if (committee == old_committee) continue;
    auto bound = cs.representation.find(pid);
    if (bound == cs.representation.end()) continue;
    const int have = CountIn(old_committee, w);
    if (have < bound->second) {
      harm->push_back({Harm::Kind::kRepresentation, pid, bound->second, have});
    }
  }
  for (const auto& [gid, lower] : cs.diversity) {
    const int have = CountIn(e.group(gid), w);
    if (have < lower) harm->push_back({Harm::Kind::kDiversity, gid, lower, have});
  }
  if (!before.winner.has_value()) return;
  for (PopulationId pid : e.AllPopulations()) {
    if (pid == manipulator) continue;
    const Ranking aggregate = AggregateRanking(e, e.population(pid));
    const int64_t was = Utility(aggregate, *before.winner);
    const int64_t now = Utility(aggregate, w);
    if (now < was) harm->push_back({Harm::Kind::kUtility, pid, was, now});
  }
}

ManipulationOutcome TryPopulation(const Election& e, const ConstraintSet& cs,
                                  Rule rule, int k, PopulationId manipulator,
                                  const ElectionOutcome& original,
                                  const SearchLimits& limits) {
  ManipulationOutcome out;
  out.manipulator = manipulator;
  out.original = original;
  const auto& own = original.population_committees.at(manipulator);
  std::vector<CandidateId> outside;
  for (CandidateId c = 0; c < e.num_candidates(); ++c) {
    if (!std::binary_search(own.begin(), own.end(), c)) outside.push_back(c);
  }
  const auto& voters = e.population(manipulator);
  for (size_t i = 0; i < outside.size(); ++i) {
    for (size_t j = i + 1; j < outside.size(); ++j) {
      Election swapped = e.WithSwap(voters, outside[i], outside[j]);
      ElectionOutcome after = ComputeOutcome(swapped, cs, rule, k, limits);
      std::vector<Harm> harm;
      CollectHarm(e, cs, manipulator, original, after, &harm);
      if (harm.empty()) continue;
      out.found = true;
      out.swap = {outside[i], outside[j]};
      out.manipulated = std::move(after);
      out.harmed = std::move(harm);
      out.manipulated_election = std::move(swapped);
      return out;
    }
  }
  return out;
}

}  // namespace

std::string Harm::ToString() const {
  const std::string target = fairdire::ToString(id);
  switch (kind) {
    case Kind::kRepresentation:
      return "representation " + target + ": " + std::to_string(after) +
             " < " + std::to_string(before);
    case Kind::kDiversity:
      return "diversity " + target + ": " + std::to_string(after) + " < " +
             std::to_string(before);
    case Kind::kUtility:
      return "utility " + target + ": " + std::to_string(before) + " -> " +
             std::to_string(after);
    case Kind::kNoCommittee:
      return "no DiRe committee left";
  }
  return "?";
}

ElectionOutcome ComputeOutcome(const Election& e, const ConstraintSet& cs,
                               Rule rule, int k, const SearchLimits& limits) {
  ElectionOutcome out;
  ConstraintSet bounds = cs;
  bounds.population_committees.clear();
  for (PopulationId pid : e.AllPopulations()) {
    out.population_committees[pid] =
        PopulationWinningCommittee(e, e.population(pid), rule, k, limits)
            .members;
  }
  bounds.population_committees = out.population_committees;
  out.winner = SolveDrcwd(e, bounds, rule, k, nullptr, limits);
  return out;
}

ManipulationOutcome ManipulateDrcwd(const Election& e, const ConstraintSet& cs,
                                    Rule rule, int k,
                                    const ManipulatorChoice& who,
                                    const SearchLimits& limits) {
  if (!IsSeparable(rule)) {
    throw UnsupportedError("manipulation search needs a separable rule, got " +
                           std::string(RuleName(rule)));
  }
  const std::vector<PopulationId> populations = e.AllPopulations();
  if (populations.empty()) {
    throw DomainError("manipulation needs at least one voter population");
  }
  std::vector<PopulationId> candidates;
  switch (who.mode) {
    case ManipulatorChoice::Mode::kLargest: {
      PopulationId largest = populations.front();
      for (PopulationId pid : populations) {
        if (e.population(pid).size() > e.population(largest).size()) {
          largest = pid;
        }
      }
      candidates.push_back(largest);
      break;
    }
    case ManipulatorChoice::Mode::kSpecific:
      e.population(who.population);  // throws LookupError if unknown
      candidates.push_back(who.population);
      break;
    case ManipulatorChoice::Mode::kAny:
      candidates = populations;
      break;
  }
  const ElectionOutcome original = ComputeOutcome(e, cs, rule, k, limits);
  ManipulationOutcome result;
  for (PopulationId pid : candidates) {
    ManipulationOutcome attempt =
        TryPopulation(e, cs, rule, k, pid, original, limits);
    if (attempt.found) return attempt;
    if (pid == candidates.front()) result = std::move(attempt);
  }
  return result;
}

}  // namespace fairdire
